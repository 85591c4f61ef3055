#include "kgraphkit/kgraph.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "kgraphkit/error.hpp"

namespace kgraphkit {
namespace {

unsigned long long pair_key(EdgeId a, EdgeId b) {
  return (static_cast<unsigned long long>(static_cast<unsigned>(a)) << 32) |
         static_cast<unsigned>(b);
}

Degree color_histogram(const KGraph& g, std::span<const EdgeId> edges) {
  Degree d = Degree::zero(g.rank());
  for (EdgeId e : edges) ++d[g.edge(e).color];
  return d;
}

std::vector<int> sorted_colors(const Degree& d) {
  std::vector<int> colors;
  for (std::size_t i = 0; i < d.rank(); ++i)
    for (int t = 0; t < d[i]; ++t) colors.push_back(static_cast<int>(i));
  return colors;
}

Path make_path(const KGraph& g, VertexId range, std::vector<EdgeId> edges) {
  Path p;
  p.range = range;
  p.source = edges.empty() ? range : g.edge(edges.back()).source;
  p.degree = color_histogram(g, edges);
  p.edges = std::move(edges);
  return p;
}

}  // namespace

KGraph KGraph::build(const KGraphSpec& spec, const BuildOptions& options) {
  if (spec.rank < 1 || spec.rank > 32)
    throw Error(ErrorKind::BadColor, "rank must lie in 1..32, got " + std::to_string(spec.rank));

  KGraph g;
  g.rank_ = spec.rank;
  for (const auto& name : spec.vertices) {
    if (name.empty()) throw Error(ErrorKind::DuplicateId, "empty vertex id");
    if (!g.vertex_index_.emplace(name, static_cast<VertexId>(g.vertex_names_.size())).second)
      throw Error(ErrorKind::DuplicateId, "vertex '" + name + "' declared twice");
    g.vertex_names_.push_back(name);
  }

  for (const auto& es : spec.edges) {
    if (es.color < 1 || es.color > spec.rank)
      throw Error(ErrorKind::BadColor, "edge '" + es.id + "' has colour " +
                                           std::to_string(es.color) + " outside 1.." +
                                           std::to_string(spec.rank));
    auto r = g.find_vertex(es.range);
    auto s = g.find_vertex(es.source);
    if (!r || !s)
      throw Error(ErrorKind::DanglingReference,
                  "edge '" + es.id + "' references unknown vertex '" + (r ? es.source : es.range) + "'");
    if (!g.edge_index_.emplace(es.id, static_cast<EdgeId>(g.edges_.size())).second)
      throw Error(ErrorKind::DuplicateId, "edge '" + es.id + "' declared twice");
    g.edges_.push_back(Edge{es.id, es.color - 1, *r, *s});
  }

  g.in_edges_.assign(g.vertex_names_.size() * g.rank_, {});
  g.colors_at_.assign(g.vertex_names_.size(), 0);
  for (EdgeId e = 0; e < static_cast<EdgeId>(g.edges_.size()); ++e) {
    const Edge& ed = g.edges_[e];
    g.in_edges_[static_cast<std::size_t>(ed.range) * g.rank_ + ed.color].push_back(e);
    g.colors_at_[ed.range] |= ColorSet{1} << ed.color;
  }

  // Squares: shape, uniqueness, then completeness in both directions.
  std::map<std::pair<EdgeId, EdgeId>, std::size_t> left, right;
  for (const auto& sq : spec.squares) {
    auto lookup = [&](const std::string& id) {
      auto e = g.find_edge(id);
      if (!e) throw Error(ErrorKind::DanglingReference, "square references unknown edge '" + id + "'");
      return *e;
    };
    Square s{lookup(sq.f), lookup(sq.g), lookup(sq.g2), lookup(sq.f2)};
    const Edge &f = g.edges_[s.f], &gg = g.edges_[s.g], &g2 = g.edges_[s.g2], &f2 = g.edges_[s.f2];
    const std::string label = "square " + sq.f + " " + sq.g + " = " + sq.g2 + " " + sq.f2;
    if (!(f.color == f2.color && gg.color == g2.color && f.color < gg.color))
      throw Error(ErrorKind::MalformedSquare, label + ": colours must satisfy c(f)=c(f2)<c(g)=c(g2)");
    if (f.source != gg.range || g2.source != f2.range || f.range != g2.range || gg.source != f2.source)
      throw Error(ErrorKind::MalformedSquare, label + ": ranges and sources do not close up");
    if (!left.emplace(std::pair{s.f, s.g}, g.squares_.size()).second)
      throw Error(ErrorKind::DuplicateSquare, label + ": pair (" + sq.f + "," + sq.g + ") already factored");
    if (!right.emplace(std::pair{s.g2, s.f2}, g.squares_.size()).second)
      throw Error(ErrorKind::DuplicateSquare, label + ": pair (" + sq.g2 + "," + sq.f2 + ") already factored");
    g.squares_.push_back(s);
  }
  for (EdgeId a = 0; a < static_cast<EdgeId>(g.edges_.size()); ++a) {
    const Edge& ea = g.edges_[a];
    for (int c = 0; c < g.rank_; ++c) {
      if (c == ea.color) continue;
      for (EdgeId b : g.edges_at(ea.source, c)) {
        const bool ascending = ea.color < c;
        const auto& table = ascending ? left : right;
        if (!table.count({a, b}))
          throw Error(ErrorKind::MissingSquare, "composable pair (" + ea.id + "," + g.edges_[b].id +
                                                    ") has no commuting square");
      }
    }
  }
  for (const auto& s : g.squares_) {
    g.swap_[pair_key(s.f, s.g)] = {s.g2, s.f2};
    g.swap_[pair_key(s.g2, s.f2)] = {s.f, s.g};
  }

  // Associativity: every descending three-colour word sorts the same way
  // along both reduced words of the longest permutation.
  if (g.rank_ >= 3) {
    std::size_t inspected = 0;
    for (EdgeId a = 0; a < static_cast<EdgeId>(g.edges_.size()); ++a) {
      const Edge& ea = g.edges_[a];
      for (int cb = 0; cb < ea.color; ++cb) {
        for (EdgeId b : g.edges_at(ea.source, cb)) {
          for (int cc = 0; cc < cb; ++cc) {
            for (EdgeId c : g.edges_at(g.edges_[b].source, cc)) {
              if (++inspected > options.associativity_cap)
                throw Error(ErrorKind::TooLarge, "associativity check exceeds the triple cap of " +
                                                     std::to_string(options.associativity_cap));
              std::array<EdgeId, 3> w1{a, b, c}, w2{a, b, c};
              auto sw = [&](std::array<EdgeId, 3>& w, int i) {
                auto [x, y] = g.swap(w[i], w[i + 1]);
                w[i] = x;
                w[i + 1] = y;
              };
              sw(w1, 0), sw(w1, 1), sw(w1, 0);
              sw(w2, 1), sw(w2, 0), sw(w2, 1);
              if (w1 != w2)
                throw Error(ErrorKind::AssociativityViolation,
                            "triple (" + ea.id + "," + g.edges_[b].id + "," + g.edges_[c].id +
                                ") sorts to different edge triples");
            }
          }
        }
      }
    }
  }
  return g;
}

std::optional<VertexId> KGraph::find_vertex(std::string_view name) const {
  auto it = vertex_index_.find(std::string(name));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

VertexId KGraph::vertex(std::string_view name) const {
  auto v = find_vertex(name);
  if (!v) throw Error(ErrorKind::UnknownVertex, "no vertex named '" + std::string(name) + "'");
  return *v;
}

std::optional<EdgeId> KGraph::find_edge(std::string_view name) const {
  auto it = edge_index_.find(std::string(name));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

std::pair<EdgeId, EdgeId> KGraph::swap(EdgeId a, EdgeId b) const {
  auto it = swap_.find(pair_key(a, b));
  if (it == swap_.end())
    throw Error(ErrorKind::NotComposable,
                "edges " + edges_.at(a).id + " and " + edges_.at(b).id + " do not form a square side");
  return it->second;
}

KGraphSpec KGraph::to_spec() const {
  KGraphSpec spec;
  spec.rank = rank_;
  spec.vertices = vertex_names_;
  for (const auto& e : edges_)
    spec.edges.push_back({e.id, e.color + 1, vertex_names_[e.range], vertex_names_[e.source]});
  for (const auto& s : squares_)
    spec.squares.push_back({edges_[s.f].id, edges_[s.g].id, edges_[s.g2].id, edges_[s.f2].id});
  return spec;
}

bool path_less(const Path& a, const Path& b) {
  if (auto c = a.degree.lex_compare(b.degree); c != 0) return c < 0;
  if (a.range != b.range) return a.range < b.range;
  if (a.source != b.source) return a.source < b.source;
  return a.edges < b.edges;
}

std::string describe(const KGraph& g, const Path& p) {
  if (p.edges.empty()) return g.vertex_name(p.range);
  std::string s;
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (i) s += ' ';
    s += g.edge(p.edges[i]).id;
  }
  return s;
}

Path vertex_path(const KGraph& g, VertexId v) { return make_path(g, v, {}); }

Path edge_path(const KGraph& g, EdgeId e) { return make_path(g, g.edge(e).range, {e}); }

std::vector<EdgeId> reorder(const KGraph& g, std::vector<EdgeId> edges,
                            std::span<const int> target_colors) {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::size_t j = i;
    while (j < edges.size() && g.edge(edges[j]).color != target_colors[i]) ++j;
    if (j == edges.size())
      throw Error(ErrorKind::BadDegree, "target colour word is not a rearrangement of the path");
    for (std::size_t t = j; t > i; --t) {
      auto [x, y] = g.swap(edges[t - 1], edges[t]);
      edges[t - 1] = x;
      edges[t] = y;
    }
  }
  return edges;
}

Path path_from_edges(const KGraph& g, VertexId range, std::span<const EdgeId> edges) {
  VertexId cur = range;
  for (EdgeId e : edges) {
    if (g.edge(e).range != cur)
      throw Error(ErrorKind::NotComposable, "edge " + g.edge(e).id + " does not start at vertex " +
                                                g.vertex_name(cur));
    cur = g.edge(e).source;
  }
  const Degree d = color_histogram(g, edges);
  const auto target = sorted_colors(d);
  return make_path(g, range, reorder(g, {edges.begin(), edges.end()}, target));
}

Path compose(const KGraph& g, const Path& mu, const Path& nu) {
  if (mu.source != nu.range)
    throw Error(ErrorKind::NotComposable, "s(mu)=" + g.vertex_name(mu.source) +
                                              " differs from r(nu)=" + g.vertex_name(nu.range));
  std::vector<EdgeId> edges = mu.edges;
  edges.insert(edges.end(), nu.edges.begin(), nu.edges.end());
  const auto target = sorted_colors(mu.degree + nu.degree);
  return make_path(g, mu.range, reorder(g, std::move(edges), target));
}

std::pair<Path, Path> factorize(const KGraph& g, const Path& lam, const Degree& m) {
  if (m.rank() != lam.degree.rank() || !(m <= lam.degree))
    throw Error(ErrorKind::BadDegree, "cannot split a path of degree " + lam.degree.to_string() +
                                          " at " + m.to_string());
  auto target = sorted_colors(m);
  const auto rest = sorted_colors(lam.degree - m);
  const std::size_t cut = target.size();
  target.insert(target.end(), rest.begin(), rest.end());
  auto edges = reorder(g, lam.edges, target);
  std::vector<EdgeId> head(edges.begin(), edges.begin() + cut);
  std::vector<EdgeId> tail(edges.begin() + cut, edges.end());
  Path first = make_path(g, lam.range, std::move(head));
  Path second = make_path(g, first.source, std::move(tail));
  return {std::move(first), std::move(second)};
}

Path segment(const KGraph& g, const Path& lam, const Degree& p, const Degree& q) {
  if (!(p <= q))
    throw Error(ErrorKind::BadDegree, "segment bounds " + p.to_string() + " > " + q.to_string());
  auto tail = factorize(g, lam, p).second;
  return factorize(g, tail, q - p).first;
}

VertexId vertex_at(const KGraph& g, const Path& lam, const Degree& p) {
  return factorize(g, lam, p).first.source;
}

std::vector<Path> paths_of_degree(const KGraph& g, const Degree& n, std::optional<VertexId> v) {
  if (n.rank() != static_cast<std::size_t>(g.rank()))
    throw Error(ErrorKind::BadDegree, "degree " + n.to_string() + " has the wrong length");
  const auto word = sorted_colors(n);
  std::vector<Path> out;
  std::vector<EdgeId> stack;
  auto dfs = [&](auto&& self, VertexId start, VertexId cur) -> void {
    if (stack.size() == word.size()) {
      out.push_back(make_path(g, start, stack));
      return;
    }
    for (EdgeId e : g.edges_at(cur, word[stack.size()])) {
      stack.push_back(e);
      self(self, start, g.edge(e).source);
      stack.pop_back();
    }
  };
  if (v) {
    dfs(dfs, *v, *v);
  } else {
    for (VertexId u = 0; u < static_cast<VertexId>(g.vertex_count()); ++u) dfs(dfs, u, u);
  }
  std::sort(out.begin(), out.end(), path_less);
  return out;
}

std::vector<Path> paths_up_to(const KGraph& g, VertexId v, const Degree& n) {
  std::vector<Path> out;
  for_each_in_box(Degree::zero(n.rank()), n, [&](const Degree& d) {
    auto ps = paths_of_degree(g, d, v);
    out.insert(out.end(), std::make_move_iterator(ps.begin()), std::make_move_iterator(ps.end()));
  });
  std::sort(out.begin(), out.end(), path_less);
  return out;
}

std::vector<Path> le_paths(const KGraph& g, VertexId v, const Degree& n) {
  if (v < 0 || static_cast<std::size_t>(v) >= g.vertex_count())
    throw Error(ErrorKind::UnknownVertex, "vertex index " + std::to_string(v) + " out of range");
  std::vector<Path> out;
  for (auto& p : paths_up_to(g, v, n)) {
    bool ok = true;
    for (int i = 0; i < g.rank() && ok; ++i)
      if (p.degree[i] < n[i] && g.has_color(p.source, i)) ok = false;
    if (ok) out.push_back(std::move(p));
  }
  return out;
}

ShapeReport check_shape(const KGraph& g) {
  ShapeReport report;
  for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v) {
    for (int i = 0; i < g.rank(); ++i)
      if (!g.has_color(v, i)) report.sources.emplace_back(v, i);
    for (int i = 0; i < g.rank(); ++i) {
      for (EdgeId e : g.edges_at(v, i)) {
        for (int j = 0; j < g.rank(); ++j) {
          if (j == i || !g.has_color(v, j)) continue;
          if (!g.has_color(g.edge(e).source, j)) report.locally_convex = false;
        }
      }
    }
  }
  return report;
}

KGraph omega_graph(int k, const Degree& m) {
  if (k < 1 || m.rank() != static_cast<std::size_t>(k) || !m.is_finite())
    throw Error(ErrorKind::BadDegree, "omega_graph needs a finite degree of length k");
  KGraphSpec spec;
  spec.rank = k;
  auto name = [](const Degree& p) { return p.to_string(); };
  auto edge_name = [&](int color, const Degree& p) { return "c" + std::to_string(color + 1) + name(p); };
  for_each_in_box(Degree::zero(k), m, [&](const Degree& p) { spec.vertices.push_back(name(p)); });
  for_each_in_box(Degree::zero(k), m, [&](const Degree& p) {
    for (int i = 0; i < k; ++i) {
      Degree q = p + Degree::unit(k, i);
      if (q <= m) spec.edges.push_back({edge_name(i, p), i + 1, name(p), name(q)});
    }
  });
  for_each_in_box(Degree::zero(k), m, [&](const Degree& p) {
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        const Degree pi = p + Degree::unit(k, i);
        const Degree pj = p + Degree::unit(k, j);
        if (!(pi + Degree::unit(k, j) <= m)) continue;
        spec.squares.push_back({edge_name(i, p), edge_name(j, pi), edge_name(j, p), edge_name(i, pj)});
      }
    }
  });
  return KGraph::build(spec);
}

KGraph product_1graphs(std::span<const KGraph> graphs) {
  if (graphs.empty()) throw Error(ErrorKind::EmptyInput, "product of zero graphs");
  for (const auto& g : graphs)
    if (g.rank() != 1) throw Error(ErrorKind::PreconditionViolated, "product factors must have rank 1");
  if (graphs.size() == 1) return graphs.front();

  const int k = static_cast<int>(graphs.size());
  using Tuple = std::vector<VertexId>;
  auto tuple_name = [&](const Tuple& t) {
    std::string s = "(";
    for (int i = 0; i < k; ++i) {
      if (i) s += ',';
      s += graphs[i].vertex_name(t[i]);
    }
    return s + ")";
  };
  std::vector<Tuple> tuples{{}};
  for (int i = 0; i < k; ++i) {
    std::vector<Tuple> next;
    for (const auto& t : tuples)
      for (VertexId v = 0; v < static_cast<VertexId>(graphs[i].vertex_count()); ++v) {
        auto u = t;
        u.push_back(v);
        next.push_back(std::move(u));
      }
    tuples = std::move(next);
  }

  KGraphSpec spec;
  spec.rank = k;
  for (const auto& t : tuples) spec.vertices.push_back(tuple_name(t));
  // Edge instance of base edge e (colour i) whose range is tuple t.
  auto instance = [&](int i, EdgeId e, const Tuple& t) {
    return graphs[i].edge(e).id + "/" + std::to_string(i + 1) + "@" + tuple_name(t);
  };
  for (const auto& t : tuples) {
    for (int i = 0; i < k; ++i) {
      for (EdgeId e : graphs[i].edges_at(t[i], 0)) {
        Tuple s = t;
        s[i] = graphs[i].edge(e).source;
        spec.edges.push_back({instance(i, e, t), i + 1, tuple_name(t), tuple_name(s)});
      }
    }
  }
  for (const auto& t : tuples) {
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        for (EdgeId f : graphs[i].edges_at(t[i], 0)) {
          for (EdgeId e : graphs[j].edges_at(t[j], 0)) {
            Tuple after_f = t;
            after_f[i] = graphs[i].edge(f).source;
            Tuple after_e = t;
            after_e[j] = graphs[j].edge(e).source;
            spec.squares.push_back(
                {instance(i, f, t), instance(j, e, after_f), instance(j, e, t), instance(i, f, after_e)});
          }
        }
      }
    }
  }
  return KGraph::build(spec);
}

}  // namespace kgraphkit
