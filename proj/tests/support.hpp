#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "kgraphkit/boundary.hpp"
#include "kgraphkit/int_subgroup.hpp"
#include "kgraphkit/kgraph.hpp"

namespace kgraphkit::testing {

/// Tiny builder for hand-written specs. Colours are 1-based.
class SpecBuilder {
 public:
  explicit SpecBuilder(int rank) { spec_.rank = rank; }
  SpecBuilder& vertex(const std::string& v) {
    spec_.vertices.push_back(v);
    return *this;
  }
  SpecBuilder& edge(const std::string& id, int color, const std::string& range, const std::string& source) {
    spec_.edges.push_back({id, color, range, source});
    return *this;
  }
  SpecBuilder& square(const std::string& f, const std::string& g, const std::string& g2, const std::string& f2) {
    spec_.squares.push_back({f, g, g2, f2});
    return *this;
  }
  const KGraphSpec& spec() const { return spec_; }
  KGraph build() const { return KGraph::build(spec_); }

 private:
  KGraphSpec spec_;
};

KGraph single_loop();      // v with loop f
KGraph two_loop_vertex();  // v with loops f, g
KGraph two_cycle();        // a: r=u s=w, b: r=w s=u
KGraph edge_vw();          // e: r=v s=w
KGraph loop_to_loop();     // loop f at v, e: r=v s=w, loop g at w
KGraph isolated(int n);    // vertices v0..v{n-1}, no edges
KGraph product_of_loops(); // single_loop x single_loop

/// Truncated check of mu ~ nu: compares mu lam and nu lam on their common
/// initial segment for every lam in s(mu) Lambda^{<= (depth,...,depth)}.
/// Necessary for equivalence, and exact once depth is large enough.
bool brute_equivalent(const KGraph& g, const Path& mu, const Path& nu, int depth);

/// Per generated by brute_equivalent pairs of degree <= (degree,...,degree).
IntSubgroup brute_per(const KGraph& g, int degree, int depth);

/// Direct check that [x; (m, n)] and [y; (p, q)] name the same class:
/// equal segments between m ^ d(x), n ^ d(x) and p ^ d(y), q ^ d(y), equal
/// excess m - m ^ d(x) = p - p ^ d(y), and n - m = q - p.
bool same_class_direct(const KGraph& g, const BoundaryPath& x, const Degree& m, const Degree& n,
                       const BoundaryPath& y, const Degree& p, const Degree& q);

struct CorpusEntry {
  std::string name;
  KGraph graph;
  bool random = false;
};

/// The fixed corpus (1-loop through Omega_{3,(1,1,1)}).
std::vector<CorpusEntry> fixed_corpus();

/// Random locally convex 2-graphs: products of random 1-graphs and
/// two-colour skeletons with commuting adjacency matrices.
std::vector<CorpusEntry> random_corpus(int count, std::uint32_t seed);

KGraph random_1graph(std::mt19937& rng, int vertices, double density);
KGraph random_product_2graph(std::mt19937& rng);
KGraph random_commuting_2graph(std::mt19937& rng);

}  // namespace kgraphkit::testing
