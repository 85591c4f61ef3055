#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kgraphkit/ideals.hpp"
#include "kgraphkit/periodicity.hpp"

namespace kgraphkit {

/// Exact rational number p/q with q > 0 in lowest terms.
class Rational {
 public:
  Rational(long long num = 0, long long den = 1);
  long long num() const noexcept { return num_; }
  long long den() const noexcept { return den_; }
  /// The representative of this number mod 1 in [0, 1).
  Rational fractional() const;
  Rational operator+(const Rational& other) const;
  Rational operator*(long long factor) const;
  friend bool operator==(const Rational&, const Rational&) = default;
  std::string to_string() const;  // "3/4", "0"

 private:
  long long num_ = 0;
  long long den_ = 1;
};

/// Parses "p/q" or "p". Throws BadDegree.
Rational parse_rational(const std::string& text);

struct TailConditions {
  bool closed_upward = false;  // (1): s(lam) in T implies r(lam) in T
  bool continues = false;      // (2), checked for n = saturation_bound
  bool directed = false;       // (3): T(v) and T(w) meet for v, w in T
  bool all() const noexcept { return closed_upward && continues && directed; }
};

TailConditions check_tail(const KGraph& g, const VertexSet& T, const BudgetConfig& budget);

struct MaximalTail {
  VertexSet members;
  VertexSet complement;  // saturated hereditary
};

/// Complements of lattice elements passing conditions (1)-(3), sorted by VertexSet order.
std::vector<MaximalTail> maximal_tails(const KGraph& g, const BudgetConfig& budget);
std::vector<MaximalTail> maximal_tails(const KGraph& g, const HSLattice& lattice, const BudgetConfig& budget);

struct TailVerdict {
  MaximalTail tail;
  PeriodicityVerdict verdict;  // of the graph on T
};

std::vector<TailVerdict> aperiodic_tails(const KGraph& g, const BudgetConfig& budget);

/// A relation s_mu - eta(d(mu) - d(nu)) s_nu of the generating set, with the
/// phase <t, d(mu) - d(nu)> mod 1. mu and nu are paths of the tail graph.
struct Relation {
  Path mu;
  Path nu;
  IntVector shift;
  Rational phase;
};

struct PrimIdeal {
  MaximalTail tail;
  KGraph tail_graph;  // the graph on T; vertex and edge ids as in g
  PeriodicityVerdict verdict;
  IntSubgroup per;
  bool per_exact = false;
  std::size_t character_rank = 0;
  std::vector<Rational> sample_character;
  std::vector<VertexId> killed_vertices;  // generators s_v, v in the complement (ids of g)
  HPerResult h_per;                       // vertex indices of tail_graph
  std::vector<Relation> relations;
};

struct CatalogueOptions {
  std::size_t relation_cap = 16;
};

/// One record per maximal tail with the trivial sample character.
std::vector<PrimIdeal> prim_catalogue(const KGraph& g, const BudgetConfig& budget, const CatalogueOptions& options = {});

/// The same ideal data for the character t in Q^k. Throws BadDegree on a rank mismatch.
PrimIdeal with_character(const PrimIdeal& ideal, const std::vector<Rational>& t);

struct PrimFlags {
  bool gauge_invariant = false;     // tail certified aperiodic
  bool maximal_ideal = false;       // tail minimal among maximal tails (sufficient only)
  bool cofinal_graph = false;       // lattice is {empty, Lambda^0}
  bool strongly_aperiodic = false;  // every quotient graph certified aperiodic
};

std::vector<PrimFlags> classify_prim(const KGraph& g, const std::vector<PrimIdeal>& catalogue,
                                     const HSLattice& lattice, const BudgetConfig& budget);

}  // namespace kgraphkit
