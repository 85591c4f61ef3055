#pragma once

#include <string>
#include <vector>

#include "kgraphkit/degree.hpp"

namespace kgraphkit {

/// Subgroup of Z^k held as the rows of its Hermite normal form: echelon,
/// positive pivots, entries above each pivot reduced into [0, pivot).
class IntSubgroup {
 public:
  IntSubgroup() = default;
  explicit IntSubgroup(std::size_t ambient) : ambient_(ambient) {}
  static IntSubgroup generated_by(std::size_t ambient, const std::vector<IntVector>& generators);

  std::size_t ambient_rank() const noexcept { return ambient_; }
  /// Rank of the subgroup (number of basis rows).
  std::size_t rank() const noexcept { return basis_.size(); }
  bool is_trivial() const noexcept { return basis_.empty(); }
  const std::vector<IntVector>& basis() const noexcept { return basis_; }

  bool contains(const IntVector& v) const;
  IntSubgroup join(const IntSubgroup& other) const;

  friend bool operator==(const IntSubgroup&, const IntSubgroup&) = default;
  std::string to_string() const;  // "{0}" or "<(2)>"

 private:
  std::size_t ambient_ = 0;
  std::vector<IntVector> basis_;
};

}  // namespace kgraphkit
