#include "kgraphkit/int_subgroup.hpp"

#include <cstdlib>
#include <utility>

#include "kgraphkit/error.hpp"

namespace kgraphkit {
namespace {

void axpy(IntVector& target, long long factor, const IntVector& row) {
  for (std::size_t i = 0; i < target.size(); ++i) target[i] -= factor * row[i];
}

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

IntSubgroup IntSubgroup::generated_by(std::size_t ambient, const std::vector<IntVector>& generators) {
  std::vector<IntVector> rows;
  for (const auto& g : generators) {
    if (g.size() != ambient)
      throw Error(ErrorKind::BadDegree, "generator " + kgraphkit::to_string(g) + " has the wrong length");
    rows.push_back(g);
  }

  std::size_t r = 0;
  for (std::size_t col = 0; col < ambient && r < rows.size(); ++col) {
    // Euclid on column `col` among rows r.. until one nonzero entry remains.
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i][col] != 0 && (best == rows.size() || std::llabs(rows[i][col]) < std::llabs(rows[best][col])))
          best = i;
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        axpy(rows[i], rows[i][col] / rows[r][col], rows[r]);
        if (rows[i][col] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[r][col] == 0) continue;
    if (rows[r][col] < 0)
      for (auto& x : rows[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) axpy(rows[i], floor_div(rows[i][col], rows[r][col]), rows[r]);
    ++r;
  }
  rows.resize(r);

  IntSubgroup out(ambient);
  out.basis_ = std::move(rows);
  return out;
}

bool IntSubgroup::contains(const IntVector& v) const {
  if (v.size() != ambient_) return false;
  IntVector rest = v;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ambient_; ++col) {
    if (row < basis_.size() && basis_[row][col] != 0) {
      const long long p = basis_[row][col];
      if (rest[col] % p != 0) return false;
      axpy(rest, rest[col] / p, basis_[row]);
      ++row;
    } else if (rest[col] != 0) {
      return false;
    }
  }
  return true;
}

IntSubgroup IntSubgroup::join(const IntSubgroup& other) const {
  std::vector<IntVector> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return generated_by(ambient_, all);
}

std::string IntSubgroup::to_string() const {
  if (basis_.empty()) return "{0}";
  std::string s = "<";
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (i) s += ", ";
    s += kgraphkit::to_string(basis_[i]);
  }
  return s + ">";
}

}  // namespace kgraphkit
