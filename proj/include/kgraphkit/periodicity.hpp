#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kgraphkit/boundary.hpp"
#include "kgraphkit/budget.hpp"
#include "kgraphkit/desourcify.hpp"
#include "kgraphkit/ideals.hpp"
#include "kgraphkit/int_subgroup.hpp"

namespace kgraphkit {

enum class Answer { Yes, No, Unknown };
std::string to_string(Answer a);

struct Equivalence {
  Answer answer = Answer::Unknown;
  std::string reason;
  std::optional<BoundaryPath> witness;  // x with mu x != nu x, when one was found
};

/// Three-valued test of mu ~ nu. Yes and No are certified; Unknown is
/// returned only when the search exceeds kStateCap states.
class EquivalenceOracle {
 public:
  static constexpr std::size_t kStateCap = 1 << 16;

  EquivalenceOracle(const KGraph& g, BudgetConfig budget);

  Equivalence test(const Path& mu, const Path& nu);

  const KGraph& graph() const noexcept { return g_; }
  const BudgetConfig& budget() const noexcept { return budget_; }

  /// Some boundary path from v has finite colour-i degree.
  bool finite_in_color(VertexId v, int color) const { return finite_[color][v]; }
  const std::optional<BoundaryPath>& unique_path(VertexId v);
  const std::vector<Path>& steps_at(VertexId v);

 private:
  const std::optional<BoundaryPath>& any_boundary(VertexId v);
  const std::optional<BoundaryPath>& finite_boundary_in(VertexId v, int color);

  const KGraph& g_;
  BudgetConfig budget_;
  std::vector<std::vector<bool>> avoid_;
  std::vector<std::vector<bool>> finite_;
  std::vector<std::optional<std::optional<BoundaryPath>>> any_;
  std::vector<std::vector<std::optional<std::optional<BoundaryPath>>>> finite_witness_;
  std::vector<std::optional<std::optional<BoundaryPath>>> unique_;
  std::vector<std::optional<std::vector<Path>>> steps_;
};

struct PerResult {
  IntSubgroup group;
  /// No Unknown among the tested pairs and the generators stabilized.
  bool exact = false;
  /// The group generated from pairs of degree <= bound - 1 is the same.
  bool stabilized = false;
  std::size_t tested_pairs = 0;
  std::size_t unknown_pairs = 0;
  std::vector<std::pair<Path, Path>> witnesses;  // equivalent pairs with d(mu) != d(nu)
};

/// Subgroup generated by d(mu) - d(nu) over equivalent pairs with degrees
/// <= budget.degree_bound. With `ranges`, only pairs whose range is in it.
PerResult per_group(const KGraph& g, const BudgetConfig& budget,
                    const std::optional<std::vector<bool>>& ranges = std::nullopt);
PerResult per_group(EquivalenceOracle& oracle, const std::optional<std::vector<bool>>& ranges = std::nullopt);

enum class PeriodicityStatus { Aperiodic, Periodic, Unknown };
std::string to_string(PeriodicityStatus s);

struct PeriodicityVerdict {
  PeriodicityStatus status = PeriodicityStatus::Unknown;
  std::optional<std::pair<Path, Path>> witness;
  std::string criterion;
  BudgetConfig budget;
};

PeriodicityVerdict aperiodicity(const KGraph& g, const BudgetConfig& budget);

struct HPerResult {
  VertexSet members;
  VertexSet exact;  // vertices whose membership verdict is certified
};

/// H_Per tested for every vertex (or those flagged in `vertices`).
HPerResult h_per(const KGraph& g, const IntSubgroup& per, const BudgetConfig& budget,
                 const std::optional<std::vector<bool>>& vertices = std::nullopt);
HPerResult h_per(EquivalenceOracle& oracle, const IntSubgroup& per,
                 const std::optional<std::vector<bool>>& vertices = std::nullopt);

struct TransferReport {
  Answer window_side = Answer::Unknown;  // mu_bar ~ nu_bar in the window
  Answer base_side = Answer::Unknown;    // pi(mu_bar) ~ pi(nu_bar) and equal excess shifts
  Answer agree = Answer::Unknown;        // Unknown when either side is
};

/// Both sides of the transfer between a graph and its desourcification,
/// evaluated with the window oracle and the base oracle.
TransferReport transfer_check(EquivalenceOracle& base, EquivalenceOracle& window_oracle, const DesWindow& window,
                              const DesElement& mu_bar, const DesElement& nu_bar);
TransferReport transfer_check(const KGraph& g, const DesElement& mu_bar, const DesElement& nu_bar,
                              const BudgetConfig& budget, const Degree& window_bound);

}  // namespace kgraphkit
