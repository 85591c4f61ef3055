#pragma once

#include <string>

#include "kgraphkit/degree.hpp"

namespace kgraphkit {

class KGraph;

/// Search horizons for the unbounded quantifiers of the theory.
struct BudgetConfig {
  Degree degree_bound;         // paths compared in periodicity searches
  int presentation_bound = 8;  // max prefix + cycle edge count of a boundary witness
  Degree saturation_bound;     // horizon for "some n" in saturation and tail checks

  /// degree (6,...,6), presentation 8, saturation (|V|,...,|V|).
  static BudgetConfig defaults(const KGraph& g);

  /// Throws BadDegree unless every bound has length `rank` and is positive.
  void validate(int rank) const;

  std::string to_string() const;
};

}  // namespace kgraphkit
