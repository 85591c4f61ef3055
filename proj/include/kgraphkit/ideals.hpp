#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kgraphkit/budget.hpp"
#include "kgraphkit/kgraph.hpp"

namespace kgraphkit {

/// Subset of the vertex set of a fixed graph.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : bits_(universe, false) {}
  static VertexSet all(std::size_t universe);
  static VertexSet of(std::size_t universe, std::span<const VertexId> members);

  std::size_t universe() const noexcept { return bits_.size(); }
  bool contains(VertexId v) const { return bits_.at(v); }
  void insert(VertexId v) { bits_.at(v) = true; }
  void erase(VertexId v) { bits_.at(v) = false; }
  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }
  std::vector<VertexId> members() const;

  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;
  VertexSet operator|(const VertexSet& other) const;
  VertexSet operator&(const VertexSet& other) const;
  VertexSet operator-(const VertexSet& other) const;
  VertexSet complement() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  /// Smaller sets first, then by sorted member list.
  std::strong_ordering operator<=>(const VertexSet& other) const;

  std::string to_string(const KGraph& g) const;  // "{u,w}"
  const std::vector<bool>& bits() const noexcept { return bits_; }

 private:
  std::vector<bool> bits_;
};

/// T(V): everything reachable from V along paths.
VertexSet hereditary_closure(const KGraph& g, const VertexSet& V);
bool is_hereditary(const KGraph& g, const VertexSet& H);

/// s(v Lambda^{<= n}).
VertexSet sources_of_le(const KGraph& g, VertexId v, const Degree& n);

struct SubsetClass {
  bool hereditary = false;
  bool saturated = false;
};

/// Saturation quantifies n over 0 < n <= budget.saturation_bound.
SubsetClass classify_subset(const KGraph& g, const VertexSet& H, const BudgetConfig& budget);

/// Sigma(H). Throws NotHereditary.
VertexSet saturate(const KGraph& g, const VertexSet& H, const BudgetConfig& budget);

/// Fixpoint of adding v when, for some colour i, v Lambda^{e_i} is nonempty
/// and all of its sources lie in the set.
VertexSet saturate_single_color(const KGraph& g, const VertexSet& H);

/// Saturated hereditary subsets with meet (intersection) and join
/// (Sigma of the union) tables, sorted by VertexSet order.
struct HSLattice {
  std::vector<VertexSet> elements;
  std::vector<std::vector<int>> meet;
  std::vector<std::vector<int>> join;

  std::optional<int> index_of(const VertexSet& H) const;
  std::size_t size() const noexcept { return elements.size(); }
};

/// Throws TooLarge when more than `cap` hereditary sets are generated.
HSLattice enumerate_hs_lattice(const KGraph& g, const BudgetConfig& budget, std::size_t cap = 1 << 16);

enum class SubgraphMode { Remove, Restrict };

/// Remove: the graph on Lambda^0 \ H (H saturated hereditary).
/// Restrict: the graph on H (its complement saturated hereditary).
/// Vertex and edge ids are kept. Throws PreconditionViolated.
KGraph subgraph(const KGraph& g, const VertexSet& H, SubgraphMode mode, const BudgetConfig& budget);

/// The lattice is exactly {empty, Lambda^0}.
bool is_cofinal_graph(const KGraph& g, const BudgetConfig& budget);

}  // namespace kgraphkit
