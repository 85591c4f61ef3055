#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kgraphkit/boundary.hpp"
#include "kgraphkit/kgraph.hpp"

namespace kgraphkit {

/// The vertex [x; m] of the desourcification, stored as (x(m ^ d(x)), m - m ^ d(x)).
struct DesVertex {
  VertexId base = 0;
  Degree excess;

  friend bool operator==(const DesVertex&, const DesVertex&) = default;
};

/// The class [x; (m, n)] stored as (pi, range excess a, source excess b).
struct DesElement {
  Path core;
  Degree range_excess;
  Degree source_excess;

  Degree degree() const { return core.degree + source_excess - range_excess; }
  DesVertex range() const { return {core.range, range_excess}; }
  DesVertex source() const { return {core.source, source_excess}; }
  friend bool operator==(const DesElement&, const DesElement&) = default;
};

bool is_valid_vertex(const KGraph& g, const DesVertex& v);
bool is_valid_element(const KGraph& g, const DesElement& e);

/// Class of [x; (m, n)]. Throws OutOfRange unless m <= n.
DesElement canonicalize_element(const KGraph& g, const BoundaryPath& x, const Degree& m,
                                const Degree& n);

/// pi(e). Throws InvalidElement for triples that name no class.
Path project_pi(const KGraph& g, const DesElement& e);

DesElement embed(const KGraph& g, const Path& lam);
DesElement des_identity(const KGraph& g, const DesVertex& v);

/// e1 e2. Throws NotComposable unless s(e1) = r(e2).
DesElement des_compose(const KGraph& g, const DesElement& e1, const DesElement& e2);

/// The unique split e = e1 e2 with d(e1) = m. Throws BadDegree.
std::pair<DesElement, DesElement> des_factorize(const KGraph& g, const DesElement& e, const Degree& m);

std::string label(const KGraph& g, const DesVertex& v);  // "base+excess"
std::string describe(const KGraph& g, const DesElement& e);

/// Full subgraph of the desourcification on vertices with excess <= bound.
struct DesWindow {
  KGraph graph;
  std::vector<DesVertex> vertices;  // indexed by window VertexId
  std::vector<DesElement> edges;    // indexed by window EdgeId
  std::vector<bool> interior;       // excess < bound in every colour
  Degree bound;

  std::optional<VertexId> find(const DesVertex& v) const;
  /// Window vertex of the embedded Lambda vertex v.
  VertexId embedded(VertexId v) const;
  /// The window path representing e, if all of its edges lie in the window.
  std::optional<Path> path_of(const KGraph& g, const DesElement& e) const;
  /// The element represented by a window path.
  DesElement element_of(const KGraph& g, const Path& p) const;
  std::vector<VertexId> interior_vertices() const;

  std::map<std::vector<int>, EdgeId> edge_index;
  std::map<std::vector<int>, VertexId> vertex_index;
};

/// Throws BadDegree unless bound >= (1,...,1).
DesWindow des_window(const KGraph& g, const Degree& bound);

}  // namespace kgraphkit
