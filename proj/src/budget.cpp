#include "kgraphkit/budget.hpp"

#include <algorithm>

#include "kgraphkit/error.hpp"
#include "kgraphkit/kgraph.hpp"

namespace kgraphkit {

BudgetConfig BudgetConfig::defaults(const KGraph& g) {
  BudgetConfig b;
  b.degree_bound = Degree(g.rank(), 6);
  b.presentation_bound = 8;
  b.saturation_bound = Degree(g.rank(), std::max<int>(1, static_cast<int>(g.vertex_count())));
  return b;
}

void BudgetConfig::validate(int rank) const {
  auto check = [&](const Degree& d, const char* name) {
    if (d.rank() != static_cast<std::size_t>(rank))
      throw Error(ErrorKind::BadDegree, std::string(name) + " bound " + d.to_string() +
                                            " does not have length " + std::to_string(rank));
    for (std::size_t i = 0; i < d.rank(); ++i)
      if (d[i] <= 0 || !d.is_finite(i))
        throw Error(ErrorKind::BadDegree, std::string(name) + " bound " + d.to_string() +
                                              " must be finite and positive");
  };
  check(degree_bound, "degree");
  check(saturation_bound, "saturation");
  if (presentation_bound <= 0)
    throw Error(ErrorKind::BadDegree, "presentation bound must be positive");
}

std::string BudgetConfig::to_string() const {
  return "degree=" + degree_bound.to_csv() + " presentation=" + std::to_string(presentation_bound) +
         " saturation=" + saturation_bound.to_csv();
}

}  // namespace kgraphkit
