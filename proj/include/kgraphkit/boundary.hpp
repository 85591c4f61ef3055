#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kgraphkit/kgraph.hpp"

namespace kgraphkit {

/// Ultimately periodic boundary path x = prefix cycle cycle ... . An empty
/// cycle is the identity at s(prefix) and denotes the finite path `prefix`.
/// Nonempty cycles must be loops at s(prefix) of degree L * 1_J.
struct BoundaryPath {
  Path prefix;
  Path cycle;

  bool is_finite() const noexcept { return cycle.is_vertex(); }
  VertexId range() const noexcept { return prefix.range; }
  friend bool operator==(const BoundaryPath&, const BoundaryPath&) = default;
};

BoundaryPath finite_boundary(const KGraph& g, Path prefix);
BoundaryPath periodic_boundary(const KGraph& g, Path prefix, Path cycle);

/// d(prefix) plus infinity on the colours of the cycle.
Degree degree(const BoundaryPath& x);

/// Throws MalformedPresentation when the cycle is not a loop at s(prefix)
/// or its degree is not a multiple of an indicator vector.
void check_presentation(const KGraph& g, const BoundaryPath& x);

/// Checks the boundary condition on positions p <= d(prefix) + d(cycle).
bool validate_boundary(const KGraph& g, const BoundaryPath& x);

/// x(p, q). Throws OutOfRange unless p <= q <= d(x).
Path segment(const KGraph& g, const BoundaryPath& x, const Degree& p, const Degree& q);
VertexId vertex_at(const KGraph& g, const BoundaryPath& x, const Degree& p);

/// sigma^n(x). Throws OutOfRange unless n <= d(x).
BoundaryPath shift(const KGraph& g, const BoundaryPath& x, const Degree& n);

/// lam x. Throws NotComposable unless s(lam) = r(x).
BoundaryPath prepend(const KGraph& g, const Path& lam, const BoundaryPath& x);

/// Shortest presentation: minimal cycle and the earliest point where the
/// diagonal step sequence becomes periodic. Equal paths have equal forms.
BoundaryPath canonical(const KGraph& g, const BoundaryPath& x);
bool same_boundary_path(const KGraph& g, const BoundaryPath& x, const BoundaryPath& y);

bool is_cofinal_path(const KGraph& g, const BoundaryPath& x);

/// v Lambda^{<= (1,...,1)}.
std::vector<Path> steps(const KGraph& g, VertexId v);

/// Vertices w admitting a boundary path y in w Lambda^{<=inf} with
/// d(y)_i = 0 for every colour i in S.
std::vector<bool> avoiding_set(const KGraph& g, ColorSet S);
bool avoiding_boundary_exists(const KGraph& g, VertexId v, ColorSet S);

/// Boundary paths from v whose presentation uses at most `size_bound`
/// edges, one canonical representative per path.
std::vector<BoundaryPath> enumerate_boundary(const KGraph& g, VertexId v, int size_bound);

/// The boundary path from v when v Lambda^{<=inf} is a singleton.
std::optional<BoundaryPath> unique_boundary_path(const KGraph& g, VertexId v);

std::string describe(const KGraph& g, const BoundaryPath& x);

}  // namespace kgraphkit
