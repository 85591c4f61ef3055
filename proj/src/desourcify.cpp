#include "kgraphkit/desourcify.hpp"

#include "kgraphkit/error.hpp"

namespace kgraphkit {
namespace {

std::vector<int> vertex_key(const DesVertex& v) {
  std::vector<int> key{v.base};
  key.insert(key.end(), v.excess.entries().begin(), v.excess.entries().end());
  return key;
}

std::vector<int> element_key(const DesElement& e) {
  std::vector<int> key{e.core.range, -1};
  key.insert(key.end(), e.core.edges.begin(), e.core.edges.end());
  key.push_back(-2);
  key.insert(key.end(), e.range_excess.entries().begin(), e.range_excess.entries().end());
  key.push_back(-3);
  key.insert(key.end(), e.source_excess.entries().begin(), e.source_excess.entries().end());
  return key;
}

}  // namespace

bool is_valid_vertex(const KGraph& g, const DesVertex& v) {
  return avoiding_boundary_exists(g, v.base, v.excess.support());
}

bool is_valid_element(const KGraph& g, const DesElement& e) {
  const std::size_t k = e.core.degree.rank();
  if (e.range_excess.rank() != k || e.source_excess.rank() != k) return false;
  if (!(e.range_excess <= e.source_excess)) return false;
  for (std::size_t i = 0; i < k; ++i)
    if (e.range_excess[i] > 0 && e.core.degree[i] != 0) return false;
  return avoiding_boundary_exists(g, e.core.source, e.source_excess.support());
}

DesElement canonicalize_element(const KGraph& g, const BoundaryPath& x, const Degree& m,
                                const Degree& n) {
  if (!(m <= n)) throw Error(ErrorKind::OutOfRange, "element bounds " + m.to_string() + " > " + n.to_string());
  const Degree d = degree(x);
  const Degree lo = m.meet(d), hi = n.meet(d);
  return DesElement{segment(g, x, lo, hi), m - lo, n - hi};
}

Path project_pi(const KGraph& g, const DesElement& e) {
  if (!is_valid_element(g, e)) throw Error(ErrorKind::InvalidElement, describe(g, e) + " names no element");
  return e.core;
}

DesElement embed(const KGraph& g, const Path& lam) {
  const std::size_t k = static_cast<std::size_t>(g.rank());
  return DesElement{lam, Degree::zero(k), Degree::zero(k)};
}

DesElement des_identity(const KGraph& g, const DesVertex& v) {
  return DesElement{vertex_path(g, v.base), v.excess, v.excess};
}

DesElement des_compose(const KGraph& g, const DesElement& e1, const DesElement& e2) {
  if (!(e1.source() == e2.range()))
    throw Error(ErrorKind::NotComposable, "s(" + describe(g, e1) + ") differs from r(" + describe(g, e2) + ")");
  return DesElement{compose(g, e1.core, e2.core), e1.range_excess, e2.source_excess};
}

std::pair<DesElement, DesElement> des_factorize(const KGraph& g, const DesElement& e, const Degree& m) {
  const Degree total = e.degree();
  if (m.rank() != total.rank() || !(m <= total))
    throw Error(ErrorKind::BadDegree, "cannot split " + describe(g, e) + " at " + m.to_string());
  // Position along the core where the split lands; the rest is excess.
  const Degree reach = e.range_excess + m;
  const Degree p = reach.meet(e.core.degree);
  auto [head, tail] = factorize(g, e.core, p);
  DesElement first{std::move(head), e.range_excess, reach - p};
  DesElement second{std::move(tail), reach - p, e.source_excess};
  return {std::move(first), std::move(second)};
}

std::string label(const KGraph& g, const DesVertex& v) {
  return g.vertex_name(v.base) + "+" + v.excess.to_csv();
}

std::string describe(const KGraph& g, const DesElement& e) {
  return "[" + describe(g, e.core) + "; " + e.range_excess.to_string() + " -> " + e.source_excess.to_string() + "]";
}

std::optional<VertexId> DesWindow::find(const DesVertex& v) const {
  auto it = vertex_index.find(vertex_key(v));
  if (it == vertex_index.end()) return std::nullopt;
  return it->second;
}

VertexId DesWindow::embedded(VertexId v) const {
  auto id = find(DesVertex{v, Degree::zero(bound.rank())});
  if (!id) throw Error(ErrorKind::UnknownVertex, "vertex index " + std::to_string(v) + " has no embedded copy");
  return *id;
}

std::optional<Path> DesWindow::path_of(const KGraph& g, const DesElement& e) const {
  auto range = find(e.range());
  if (!range) return std::nullopt;
  std::vector<EdgeId> out;
  DesElement rest = e;
  const Degree d = e.degree();
  for (std::size_t c = 0; c < d.rank(); ++c) {
    for (int t = 0; t < d[c]; ++t) {
      auto [head, tail] = des_factorize(g, rest, Degree::unit(d.rank(), c));
      auto it = edge_index.find(element_key(head));
      if (it == edge_index.end()) return std::nullopt;
      out.push_back(it->second);
      rest = std::move(tail);
    }
  }
  return path_from_edges(graph, *range, out);
}

DesElement DesWindow::element_of(const KGraph& g, const Path& p) const {
  DesElement e = des_identity(g, vertices.at(p.range));
  for (EdgeId id : p.edges) e = des_compose(g, e, edges.at(id));
  return e;
}

std::vector<VertexId> DesWindow::interior_vertices() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < static_cast<VertexId>(interior.size()); ++v)
    if (interior[v]) out.push_back(v);
  return out;
}

DesWindow des_window(const KGraph& g, const Degree& bound) {
  const std::size_t k = static_cast<std::size_t>(g.rank());
  if (bound.rank() != k || !bound.is_finite() || !(Degree(k, 1) <= bound))
    throw Error(ErrorKind::BadDegree, "window bound " + bound.to_string() + " must be finite and >= 1");

  std::vector<std::vector<bool>> avoid(std::size_t{1} << k);
  for (ColorSet S = 0; S < (ColorSet{1} << k); ++S) avoid[S] = avoiding_set(g, S);

  std::vector<DesVertex> vertices;
  std::map<std::vector<int>, VertexId> vindex;
  for (VertexId w = 0; w < static_cast<VertexId>(g.vertex_count()); ++w) {
    for_each_in_box(Degree::zero(k), bound, [&](const Degree& p) {
      if (!avoid[p.support()][w]) return;
      vindex.emplace(vertex_key({w, p}), static_cast<VertexId>(vertices.size()));
      vertices.push_back({w, p});
    });
  }

  KGraphSpec spec;
  spec.rank = g.rank();
  for (const auto& v : vertices) spec.vertices.push_back(label(g, v));

  std::vector<DesElement> edges;
  std::vector<std::string> edge_names;
  std::map<std::vector<int>, EdgeId> eindex;
  auto add_edge = [&](DesElement e, int color, std::string name) {
    if (!vindex.count(vertex_key(e.source()))) return;
    eindex.emplace(element_key(e), static_cast<EdgeId>(edges.size()));
    spec.edges.push_back({name, color + 1, label(g, e.range()), label(g, e.source())});
    edges.push_back(std::move(e));
    edge_names.push_back(std::move(name));
  };
  for (const auto& v : vertices) {
    for (std::size_t i = 0; i < k; ++i) {
      if (v.excess[i] == 0) {
        for (EdgeId f : g.edges_at(v.base, static_cast<int>(i))) {
          if (!avoid[v.excess.support()][g.edge(f).source]) continue;
          add_edge(DesElement{edge_path(g, f), v.excess, v.excess}, static_cast<int>(i), g.edge(f).id + "+" + v.excess.to_csv());
        }
      }
      const Degree up = v.excess + Degree::unit(k, i);
      if (up[i] <= bound[i] && avoid[up.support()][v.base])
        add_edge(DesElement{vertex_path(g, v.base), v.excess, up}, static_cast<int>(i),
                 label(g, v) + "^" + std::to_string(i + 1));
    }
  }

  // Squares: every colour-i then colour-j pair (i < j) refactored at e_j.
  for (std::size_t a = 0; a < edges.size(); ++a) {
    const int ci = spec.edges[a].color - 1;
    for (std::size_t b = 0; b < edges.size(); ++b) {
      const int cj = spec.edges[b].color - 1;
      if (cj <= ci || !(edges[a].source() == edges[b].range())) continue;
      const DesElement both = des_compose(g, edges[a], edges[b]);
      auto [g2, f2] = des_factorize(g, both, Degree::unit(k, cj));
      const auto ig2 = eindex.find(element_key(g2));
      const auto if2 = eindex.find(element_key(f2));
      if (ig2 == eindex.end() || if2 == eindex.end())
        throw Error(ErrorKind::PreconditionViolated, "window square for " + edge_names[a] + " " + edge_names[b] +
                                                         " leaves the window");
      spec.squares.push_back({edge_names[a], edge_names[b], edge_names[ig2->second], edge_names[if2->second]});
    }
  }

  DesWindow window{KGraph::build(spec), std::move(vertices), std::move(edges), {}, bound, std::move(eindex),
                   std::move(vindex)};
  window.interior.resize(window.vertices.size());
  for (std::size_t v = 0; v < window.vertices.size(); ++v) {
    bool inside = true;
    for (std::size_t i = 0; i < k; ++i) inside = inside && window.vertices[v].excess[i] < bound[i];
    window.interior[v] = inside;
  }
  return window;
}

}  // namespace kgraphkit
