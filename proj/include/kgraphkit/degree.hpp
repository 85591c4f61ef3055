#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <string>
#include <vector>

namespace kgraphkit {

/// Bitmask over colors 0..k-1 (k <= 32).
using ColorSet = std::uint32_t;

/// A vector in N^k, or in (N u {inf})^k for boundary-path degrees.
///
/// Componentwise order, join and meet are defined for vectors of equal
/// length; `kInfinity` is absorbing under addition.
class Degree {
 public:
  static constexpr int kInfinity = std::numeric_limits<int>::max();

  Degree() = default;
  explicit Degree(std::size_t rank, int fill = 0) : v_(rank, fill) {}
  Degree(std::initializer_list<int> entries) : v_(entries) {}
  explicit Degree(std::vector<int> entries) : v_(std::move(entries)) {}

  static Degree zero(std::size_t rank) { return Degree(rank, 0); }
  static Degree unit(std::size_t rank, std::size_t color) {
    Degree d(rank, 0);
    d.v_[color] = 1;
    return d;
  }
  static Degree indicator(std::size_t rank, ColorSet colors, int value = 1);

  std::size_t rank() const noexcept { return v_.size(); }
  int operator[](std::size_t i) const { return v_[i]; }
  int& operator[](std::size_t i) { return v_[i]; }
  const std::vector<int>& entries() const noexcept { return v_; }

  bool is_zero() const noexcept;
  bool is_finite() const noexcept;
  bool is_finite(std::size_t i) const { return v_[i] != kInfinity; }
  /// Largest finite coordinate (0 for the empty vector).
  int max_entry() const noexcept;
  long long total() const noexcept;
  ColorSet support() const noexcept;

  bool operator<=(const Degree& other) const;  // componentwise
  friend bool operator==(const Degree&, const Degree&) = default;
  /// Lexicographic; used for deterministic ordering only.
  std::strong_ordering lex_compare(const Degree& other) const { return v_ <=> other.v_; }

  Degree operator+(const Degree& other) const;
  /// Requires other <= *this on finite coordinates.
  Degree operator-(const Degree& other) const;
  Degree join(const Degree& other) const;
  Degree meet(const Degree& other) const;

  std::string to_string() const;  // "(1,2)"; infinity prints as "inf"
  std::string to_csv() const;     // "1,2"

 private:
  std::vector<int> v_;
};

/// Calls `fn` for every degree d with lo <= d <= hi, in lexicographic order
/// with the last coordinate varying fastest.
template <class Fn>
void for_each_in_box(const Degree& lo, const Degree& hi, Fn&& fn) {
  const std::size_t k = lo.rank();
  if (!(lo <= hi)) return;
  Degree cur = lo;
  while (true) {
    fn(static_cast<const Degree&>(cur));
    bool advanced = false;
    for (std::size_t i = k; i-- > 0;) {
      if (cur[i] < hi[i]) {
        ++cur[i];
        for (std::size_t j = i + 1; j < k; ++j) cur[j] = lo[j];
        advanced = true;
        break;
      }
    }
    if (!advanced) return;
  }
}

/// Integer vector in Z^k (differences of degrees).
using IntVector = std::vector<long long>;

IntVector difference(const Degree& a, const Degree& b);
std::string to_string(const IntVector& v);

inline bool contains_color(ColorSet s, std::size_t color) { return (s >> color) & 1U; }

}  // namespace kgraphkit
