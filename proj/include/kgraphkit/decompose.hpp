#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "kgraphkit/ideals.hpp"

namespace kgraphkit {

struct DeltaOmega {
  VertexSet delta;  // v in H1 with T(v) disjoint from H2
  VertexSet omega;  // H1 \ (H2 u delta)
};

/// Throws NotNested unless H2 is contained in H1.
DeltaOmega delta_omega(const KGraph& g, const VertexSet& H1, const VertexSet& H2);

/// H1 > H2. Throws NotNested unless H2 is contained in H1.
bool succeeds(const KGraph& g, const VertexSet& H1, const VertexSet& H2, const BudgetConfig& budget);

struct Decomposability {
  /// Disjoint nonempty lattice elements whose union saturates to Lambda^0.
  std::optional<std::pair<VertexSet, VertexSet>> witness;
  /// A nonempty lattice element H with Lambda^0 > H.
  std::optional<VertexSet> succeeded_by;
};

Decomposability decomposability(const KGraph& g, const BudgetConfig& budget);
Decomposability decomposability(const KGraph& g, const HSLattice& lattice, const BudgetConfig& budget);

/// Lambda^0 = H_1 > H_2 > ... > H_n, all nonempty.
struct Chain {
  std::vector<VertexSet> elements;
  std::size_t length() const noexcept { return elements.size(); }
  friend bool operator==(const Chain&, const Chain&) = default;
};

struct ChainsResult {
  std::vector<Chain> maximal;
  std::size_t max_length = 0;
};

/// Throws TooLarge when more than `cap` chains are visited.
ChainsResult chains(const KGraph& g, const BudgetConfig& budget, std::size_t cap = 1 << 16);
ChainsResult chains(const KGraph& g, const HSLattice& lattice, const BudgetConfig& budget, std::size_t cap = 1 << 16);

struct Component {
  VertexSet summand;  // K_i
  KGraph graph;       // Lambda minus Lambda Sigma(union of the other K_j)
};

struct DecompositionReport {
  std::size_t n = 0;
  std::vector<Component> components;
  Chain chain;
  /// Minimal nonempty lattice elements with a complement in the lattice,
  /// computed without chains.
  std::vector<VertexSet> atoms;
  /// The summands equal the atoms up to order, and every maximal chain
  /// yields the same summands.
  bool unique = false;
};

/// Summands K_1, ..., K_n peeled off along `chain`, as subsets of Lambda^0.
std::vector<VertexSet> summands_along(const KGraph& g, const Chain& chain, const BudgetConfig& budget);

/// Throws BudgetExceeded when the chain search exceeds its cap.
DecompositionReport decompose(const KGraph& g, const BudgetConfig& budget);

}  // namespace kgraphkit
