#include "kgraphkit/degree.hpp"

#include <algorithm>
#include <cassert>

namespace kgraphkit {

Degree Degree::indicator(std::size_t rank, ColorSet colors, int value) {
  Degree d(rank, 0);
  for (std::size_t i = 0; i < rank; ++i)
    if (contains_color(colors, i)) d.v_[i] = value;
  return d;
}

bool Degree::is_zero() const noexcept {
  return std::all_of(v_.begin(), v_.end(), [](int x) { return x == 0; });
}

bool Degree::is_finite() const noexcept {
  return std::none_of(v_.begin(), v_.end(), [](int x) { return x == kInfinity; });
}

int Degree::max_entry() const noexcept {
  int m = 0;
  for (int x : v_)
    if (x != kInfinity) m = std::max(m, x);
  return m;
}

long long Degree::total() const noexcept {
  long long t = 0;
  for (int x : v_) t += x;
  return t;
}

ColorSet Degree::support() const noexcept {
  ColorSet s = 0;
  for (std::size_t i = 0; i < v_.size(); ++i)
    if (v_[i] != 0) s |= ColorSet{1} << i;
  return s;
}

bool Degree::operator<=(const Degree& other) const {
  assert(rank() == other.rank());
  for (std::size_t i = 0; i < v_.size(); ++i)
    if (v_[i] > other.v_[i]) return false;
  return true;
}

Degree Degree::operator+(const Degree& other) const {
  assert(rank() == other.rank());
  Degree r(rank());
  for (std::size_t i = 0; i < v_.size(); ++i)
    r.v_[i] = (v_[i] == kInfinity || other.v_[i] == kInfinity) ? kInfinity : v_[i] + other.v_[i];
  return r;
}

Degree Degree::operator-(const Degree& other) const {
  assert(rank() == other.rank());
  Degree r(rank());
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (v_[i] == kInfinity) {
      r.v_[i] = kInfinity;
    } else {
      assert(other.v_[i] <= v_[i]);
      r.v_[i] = v_[i] - other.v_[i];
    }
  }
  return r;
}

Degree Degree::join(const Degree& other) const {
  Degree r(rank());
  for (std::size_t i = 0; i < v_.size(); ++i) r.v_[i] = std::max(v_[i], other.v_[i]);
  return r;
}

Degree Degree::meet(const Degree& other) const {
  Degree r(rank());
  for (std::size_t i = 0; i < v_.size(); ++i) r.v_[i] = std::min(v_[i], other.v_[i]);
  return r;
}

std::string Degree::to_csv() const {
  std::string s;
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (i) s += ',';
    s += v_[i] == kInfinity ? std::string("inf") : std::to_string(v_[i]);
  }
  return s;
}

std::string Degree::to_string() const { return "(" + to_csv() + ")"; }

IntVector difference(const Degree& a, const Degree& b) {
  IntVector r(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) r[i] = static_cast<long long>(a[i]) - b[i];
  return r;
}

std::string to_string(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + ")";
}

}  // namespace kgraphkit
