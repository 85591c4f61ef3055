#include "support.hpp"

#include <algorithm>
#include <array>

namespace kgraphkit::testing {

KGraph single_loop() { return SpecBuilder(1).vertex("v").edge("f", 1, "v", "v").build(); }

KGraph two_loop_vertex() {
  return SpecBuilder(1).vertex("v").edge("f", 1, "v", "v").edge("g", 1, "v", "v").build();
}

KGraph two_cycle() {
  return SpecBuilder(1).vertex("u").vertex("w").edge("a", 1, "u", "w").edge("b", 1, "w", "u").build();
}

KGraph edge_vw() { return SpecBuilder(1).vertex("v").vertex("w").edge("e", 1, "v", "w").build(); }

KGraph loop_to_loop() {
  return SpecBuilder(1)
      .vertex("v")
      .vertex("w")
      .edge("f", 1, "v", "v")
      .edge("e", 1, "v", "w")
      .edge("g", 1, "w", "w")
      .build();
}

KGraph isolated(int n) {
  SpecBuilder b(1);
  for (int i = 0; i < n; ++i) b.vertex("v" + std::to_string(i));
  return b.build();
}

KGraph product_of_loops() {
  const std::array<KGraph, 2> factors{single_loop(), single_loop()};
  return product_1graphs(factors);
}

bool brute_equivalent(const KGraph& g, const Path& mu, const Path& nu, int depth) {
  if (mu.source != nu.source || mu.range != nu.range) return false;
  const Degree n(g.rank(), depth);
  for (const Path& lam : le_paths(g, mu.source, n)) {
    for (int i = 0; i < g.rank(); ++i)
      if (lam.degree[i] < depth && mu.degree[i] != nu.degree[i]) return false;
    const Path a = compose(g, mu, lam);
    const Path b = compose(g, nu, lam);
    const Degree c = a.degree.meet(b.degree);
    if (factorize(g, a, c).first != factorize(g, b, c).first) return false;
  }
  return true;
}

IntSubgroup brute_per(const KGraph& g, int degree, int depth) {
  std::vector<IntVector> gens;
  for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v) {
    const auto paths = paths_up_to(g, v, Degree(g.rank(), degree));
    for (const auto& mu : paths)
      for (const auto& nu : paths)
        if (mu.degree != nu.degree && brute_equivalent(g, mu, nu, depth)) gens.push_back(difference(mu.degree, nu.degree));
  }
  return IntSubgroup::generated_by(g.rank(), gens);
}

bool same_class_direct(const KGraph& g, const BoundaryPath& x, const Degree& m, const Degree& n,
                       const BoundaryPath& y, const Degree& p, const Degree& q) {
  const Degree dx = degree(x), dy = degree(y);
  const Degree mx = m.meet(dx), nx = n.meet(dx), py = p.meet(dy), qy = q.meet(dy);
  if (m - mx != p - py) return false;
  if (difference(n, m) != difference(q, p)) return false;
  return segment(g, x, mx, nx) == segment(g, y, py, qy);
}

std::vector<CorpusEntry> fixed_corpus() {
  std::vector<CorpusEntry> out;
  out.push_back({"1-loop", single_loop()});
  out.push_back({"2-loop-vertex", two_loop_vertex()});
  out.push_back({"2-cycle", two_cycle()});
  out.push_back({"edge-v-w", edge_vw()});
  out.push_back({"loop-to-loop", loop_to_loop()});
  out.push_back({"isolated-2", isolated(2)});
  out.push_back({"isolated-3", isolated(3)});
  out.push_back({"isolated-4", isolated(4)});
  out.push_back({"omega-1-2", omega_graph(1, Degree{2})});
  out.push_back({"omega-2-11", omega_graph(2, Degree{1, 1})});
  out.push_back({"omega-3-111", omega_graph(3, Degree{1, 1, 1})});
  out.push_back({"loops-product", product_of_loops()});
  return out;
}

KGraph random_1graph(std::mt19937& rng, int vertices, double density) {
  std::bernoulli_distribution coin(density);
  SpecBuilder b(1);
  for (int i = 0; i < vertices; ++i) b.vertex("x" + std::to_string(i));
  int id = 0;
  for (int r = 0; r < vertices; ++r)
    for (int s = 0; s < vertices; ++s)
      if (coin(rng)) b.edge("e" + std::to_string(id++), 1, "x" + std::to_string(r), "x" + std::to_string(s));
  return b.build();
}

KGraph random_product_2graph(std::mt19937& rng) {
  std::uniform_int_distribution<int> size(1, 3);
  const int n1 = size(rng);
  const int n2 = std::uniform_int_distribution<int>(1, std::max(1, 6 / n1))(rng);
  const std::array<KGraph, 2> factors{random_1graph(rng, n1, 0.45), random_1graph(rng, std::min(n2, 3), 0.45)};
  return product_1graphs(factors);
}

KGraph random_commuting_2graph(std::mt19937& rng) {
  for (;;) {
    const int n = std::uniform_int_distribution<int>(2, 6)(rng);
    std::bernoulli_distribution coin(0.3);
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0)), b;
    for (auto& row : a)
      for (int& x : row) x = coin(rng) ? 1 : 0;
    // Colour-2 adjacency commuting with colour 1: A, A + I, or I.
    const int pick = std::uniform_int_distribution<int>(0, 2)(rng);
    b = a;
    for (int i = 0; i < n; ++i) {
      if (pick == 1) b[i][i] += 1;
      if (pick == 2)
        for (int j = 0; j < n; ++j) b[i][j] = i == j ? 1 : 0;
    }

    SpecBuilder sb(2);
    auto vname = [](int i) { return "y" + std::to_string(i); };
    for (int i = 0; i < n; ++i) sb.vertex(vname(i));
    struct E {
      std::string id;
      int r, s;
    };
    std::vector<E> c1, c2;
    for (int r = 0; r < n; ++r)
      for (int s = 0; s < n; ++s) {
        for (int t = 0; t < a[r][s]; ++t) {
          c1.push_back({"p" + std::to_string(c1.size()), r, s});
          sb.edge(c1.back().id, 1, vname(r), vname(s));
        }
        for (int t = 0; t < b[r][s]; ++t) {
          c2.push_back({"q" + std::to_string(c2.size()), r, s});
          sb.edge(c2.back().id, 2, vname(r), vname(s));
        }
      }
    // Pair colour-1-then-2 words with colour-2-then-1 words between the
    // same endpoints, in enumeration order.
    for (int u = 0; u < n; ++u) {
      for (int w = 0; w < n; ++w) {
        std::vector<std::pair<std::string, std::string>> left, right;
        for (const auto& f : c1)
          for (const auto& g : c2)
            if (f.r == u && f.s == g.r && g.s == w) left.emplace_back(f.id, g.id);
        for (const auto& g : c2)
          for (const auto& f : c1)
            if (g.r == u && g.s == f.r && f.s == w) right.emplace_back(g.id, f.id);
        for (std::size_t i = 0; i < left.size(); ++i)
          sb.square(left[i].first, left[i].second, right[i].first, right[i].second);
      }
    }
    KGraph g = sb.build();
    if (check_shape(g).locally_convex) return g;
  }
}

std::vector<CorpusEntry> random_corpus(int count, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<CorpusEntry> out;
  for (int i = 0; i < count; ++i) {
    const bool product = i % 2 == 0;
    KGraph g = product ? random_product_2graph(rng) : random_commuting_2graph(rng);
    out.push_back({(product ? "random-product-" : "random-commuting-") + std::to_string(i), std::move(g), true});
  }
  return out;
}

}  // namespace kgraphkit::testing
