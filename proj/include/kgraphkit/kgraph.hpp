#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kgraphkit/degree.hpp"

namespace kgraphkit {

using VertexId = int;
using EdgeId = int;

/// Raw, unvalidated description of a k-graph as read from a file or built
/// programmatically. Colors are 1-based here, as in the file format.
struct KGraphSpec {
  struct EdgeSpec {
    std::string id;
    int color = 1;
    std::string range;
    std::string source;
  };
  /// Asserts f g = g2 f2 with color(f) = color(f2) < color(g) = color(g2).
  struct SquareSpec {
    std::string f, g, g2, f2;
  };

  int rank = 1;
  std::vector<std::string> vertices;
  std::vector<EdgeSpec> edges;
  std::vector<SquareSpec> squares;
};

struct BuildOptions {
  /// Upper bound on the number of composable three-colour triples inspected
  /// by the associativity check.
  std::size_t associativity_cap = 1'000'000;
};

struct Edge {
  std::string id;
  int color = 0;  // 0-based
  VertexId range = 0;
  VertexId source = 0;
};

struct Square {
  EdgeId f, g, g2, f2;
};

/// A validated finite row-finite k-graph given by its coloured 1-skeleton and
/// commuting squares. Immutable after construction.
class KGraph {
 public:
  /// Validates `spec` exhaustively; throws Error on the first violation.
  static KGraph build(const KGraphSpec& spec, const BuildOptions& options = {});

  int rank() const noexcept { return rank_; }
  std::size_t vertex_count() const noexcept { return vertex_names_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::string& vertex_name(VertexId v) const { return vertex_names_.at(v); }
  std::optional<VertexId> find_vertex(std::string_view name) const;
  VertexId vertex(std::string_view name) const;  // throws UnknownVertex
  std::optional<EdgeId> find_edge(std::string_view name) const;

  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Square>& squares() const noexcept { return squares_; }

  /// Edges of the given colour whose range is v (the set v Lambda^{e_i}).
  std::span<const EdgeId> edges_at(VertexId v, int color) const {
    return in_edges_[static_cast<std::size_t>(v) * rank_ + color];
  }
  bool has_color(VertexId v, int color) const { return !edges_at(v, color).empty(); }
  /// Colours i with v Lambda^{e_i} nonempty.
  ColorSet colors_at(VertexId v) const { return colors_at_[v]; }

  /// For adjacent edges a b (a on the range side) of distinct colours,
  /// returns the unique b' a' with a b = b' a' and colours swapped.
  std::pair<EdgeId, EdgeId> swap(EdgeId a, EdgeId b) const;

  KGraphSpec to_spec() const;

 private:
  KGraph() = default;

  int rank_ = 1;
  std::vector<std::string> vertex_names_;
  std::unordered_map<std::string, VertexId> vertex_index_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, EdgeId> edge_index_;
  std::vector<Square> squares_;
  std::vector<std::vector<EdgeId>> in_edges_;
  std::vector<ColorSet> colors_at_;
  std::unordered_map<unsigned long long, std::pair<EdgeId, EdgeId>> swap_;
};

/// A morphism of the k-graph: range, source, degree and its edges in normal
/// form (all colour-1 edges first, then colour 2, ...). Vertices are paths
/// with no edges.
struct Path {
  VertexId range = 0;
  VertexId source = 0;
  Degree degree;
  std::vector<EdgeId> edges;

  bool is_vertex() const noexcept { return edges.empty(); }
  friend bool operator==(const Path&, const Path&) = default;
};

/// Deterministic total order on paths (degree, range, source, edges).
bool path_less(const Path& a, const Path& b);

std::string describe(const KGraph& g, const Path& p);

Path vertex_path(const KGraph& g, VertexId v);
Path edge_path(const KGraph& g, EdgeId e);

/// Builds the path of a composable edge sequence (any colour order) and
/// rewrites it to normal form. Throws NotComposable.
Path path_from_edges(const KGraph& g, VertexId range, std::span<const EdgeId> edges);

/// Rewrites the edge word so its colour word equals `target_colors` using
/// commuting-square swaps. Requires equal colour multisets.
std::vector<EdgeId> reorder(const KGraph& g, std::vector<EdgeId> edges,
                            std::span<const int> target_colors);

Path compose(const KGraph& g, const Path& mu, const Path& nu);

/// The unique (mu, nu) with d(mu) = m and mu nu = lam. Throws BadDegree.
std::pair<Path, Path> factorize(const KGraph& g, const Path& lam, const Degree& m);

/// lam(p, q) for p <= q <= d(lam).
Path segment(const KGraph& g, const Path& lam, const Degree& p, const Degree& q);

/// The vertex lam(p).
VertexId vertex_at(const KGraph& g, const Path& lam, const Degree& p);

/// v Lambda^n (or Lambda^n when v is empty), sorted by path_less.
std::vector<Path> paths_of_degree(const KGraph& g, const Degree& n,
                                  std::optional<VertexId> v = std::nullopt);

/// All paths with range v and degree <= n.
std::vector<Path> paths_up_to(const KGraph& g, VertexId v, const Degree& n);

/// v Lambda^{<= n}.
std::vector<Path> le_paths(const KGraph& g, VertexId v, const Degree& n);

struct ShapeReport {
  std::vector<std::pair<VertexId, int>> sources;  // (vertex, 0-based colour)
  bool locally_convex = true;
};

ShapeReport check_shape(const KGraph& g);

/// Omega_{k,m}: vertices p <= m, one morphism (p, q) for each p <= q.
KGraph omega_graph(int k, const Degree& m);

/// Cartesian product of rank-1 graphs; colour i comes from graphs[i].
KGraph product_1graphs(std::span<const KGraph> graphs);

}  // namespace kgraphkit
