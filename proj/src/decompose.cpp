#include "kgraphkit/decompose.hpp"

#include <algorithm>
#include <map>

#include "kgraphkit/error.hpp"

namespace kgraphkit {
namespace {

VertexSet future(const KGraph& g, VertexId v) {
  return hereditary_closure(g, VertexSet::of(g.vertex_count(), std::vector<VertexId>{v}));
}

std::vector<VertexSet> sorted(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end());
  return sets;
}

}  // namespace

DeltaOmega delta_omega(const KGraph& g, const VertexSet& H1, const VertexSet& H2) {
  if (!H2.is_subset_of(H1))
    throw Error(ErrorKind::NotNested, H2.to_string(g) + " is not contained in " + H1.to_string(g));
  DeltaOmega out{VertexSet(g.vertex_count()), VertexSet(g.vertex_count())};
  for (VertexId v : H1.members()) {
    if (!future(g, v).intersects(H2))
      out.delta.insert(v);
    else if (!H2.contains(v))
      out.omega.insert(v);
  }
  return out;
}

bool succeeds(const KGraph& g, const VertexSet& H1, const VertexSet& H2, const BudgetConfig& budget) {
  const DeltaOmega d = delta_omega(g, H1, H2);
  if (d.delta.empty()) return false;
  return d.omega.is_subset_of(saturate(g, H2 | d.delta, budget));
}

Decomposability decomposability(const KGraph& g, const BudgetConfig& budget) {
  return decomposability(g, enumerate_hs_lattice(g, budget), budget);
}

Decomposability decomposability(const KGraph& g, const HSLattice& lattice, const BudgetConfig& budget) {
  Decomposability out;
  const VertexSet all = VertexSet::all(g.vertex_count());
  const auto& els = lattice.elements;
  for (std::size_t a = 0; a < els.size() && !out.witness; ++a) {
    if (els[a].empty()) continue;
    for (std::size_t b = a + 1; b < els.size(); ++b) {
      if (els[b].empty() || els[a].intersects(els[b])) continue;
      if (els[lattice.join[a][b]] == all) {
        out.witness.emplace(els[a], els[b]);
        break;
      }
    }
  }
  for (const VertexSet& H : els) {
    if (!H.empty() && succeeds(g, all, H, budget)) {
      out.succeeded_by = H;
      break;
    }
  }
  return out;
}

ChainsResult chains(const KGraph& g, const BudgetConfig& budget, std::size_t cap) {
  return chains(g, enumerate_hs_lattice(g, budget), budget, cap);
}

ChainsResult chains(const KGraph& g, const HSLattice& lattice, const BudgetConfig& budget, std::size_t cap) {
  ChainsResult out;
  const auto& els = lattice.elements;
  const auto top = lattice.index_of(VertexSet::all(g.vertex_count()));
  if (!top || els[*top].empty()) return out;

  // below[a] = nonempty b with els[a] > els[b].
  std::vector<std::vector<int>> below(els.size());
  std::map<std::pair<int, int>, bool> succ;
  for (std::size_t a = 0; a < els.size(); ++a)
    for (std::size_t b = 0; b < els.size(); ++b) {
      const bool s = a != b && !els[b].empty() && els[b].is_subset_of(els[a]) && succeeds(g, els[a], els[b], budget);
      succ[{static_cast<int>(a), static_cast<int>(b)}] = s;
      if (s) below[a].push_back(static_cast<int>(b));
    }
  auto is_succ = [&](int a, int b) { return succ.at({a, b}); };

  auto maximal = [&](const std::vector<int>& c) {
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
      for (int h : below[c[i]])
        if (is_succ(h, c[i + 1])) return false;
    return below[c.back()].empty();
  };

  std::size_t visited = 0;
  std::vector<int> current{*top};
  auto dfs = [&](auto&& self) -> void {
    if (++visited > cap) throw Error(ErrorKind::TooLarge, "more than " + std::to_string(cap) + " chains");
    out.max_length = std::max(out.max_length, current.size());
    if (maximal(current)) {
      Chain c;
      for (int i : current) c.elements.push_back(els[i]);
      out.maximal.push_back(std::move(c));
    }
    for (int b : below[current.back()]) {
      current.push_back(b);
      self(self);
      current.pop_back();
    }
  };
  dfs(dfs);
  return out;
}

std::vector<VertexSet> summands_along(const KGraph& g, const Chain& chain, const BudgetConfig& budget) {
  std::vector<VertexSet> out;
  if (chain.elements.empty()) return out;
  // H_i is hereditary, so the graph on H_i sees the same Delta and the same
  // saturation as Lambda; H_i > H_{i+1} splits it as Sigma(Delta) + H_{i+1}.
  for (std::size_t i = 0; i + 1 < chain.elements.size(); ++i)
    out.push_back(saturate(g, delta_omega(g, chain.elements[i], chain.elements[i + 1]).delta, budget));
  out.push_back(chain.elements.back());
  return out;
}

DecompositionReport decompose(const KGraph& g, const BudgetConfig& budget) {
  const HSLattice lattice = enumerate_hs_lattice(g, budget);
  ChainsResult cr;
  try {
    cr = chains(g, lattice, budget);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::TooLarge) throw;
    throw Error(ErrorKind::BudgetExceeded, e.what());
  }
  DecompositionReport out;
  const VertexSet all = VertexSet::all(g.vertex_count());

  // Complemented elements; the minimal nonempty ones are the summands.
  std::vector<VertexSet> complemented;
  for (std::size_t a = 0; a < lattice.size(); ++a) {
    if (lattice.elements[a].empty()) continue;
    for (std::size_t b = 0; b < lattice.size(); ++b)
      if (!lattice.elements[a].intersects(lattice.elements[b]) && lattice.elements[lattice.join[a][b]] == all) {
        complemented.push_back(lattice.elements[a]);
        break;
      }
  }
  for (const VertexSet& c : complemented) {
    const bool minimal = std::none_of(complemented.begin(), complemented.end(),
                                      [&](const VertexSet& d) { return d != c && d.is_subset_of(c); });
    if (minimal) out.atoms.push_back(c);
  }
  out.atoms = sorted(out.atoms);

  const auto longest = std::find_if(cr.maximal.begin(), cr.maximal.end(),
                                    [&](const Chain& c) { return c.length() == cr.max_length; });
  if (longest == cr.maximal.end()) return out;
  out.chain = *longest;
  out.n = longest->length();
  const std::vector<VertexSet> ks = summands_along(g, out.chain, budget);

  out.unique = sorted(ks) == out.atoms;
  for (const Chain& c : cr.maximal)
    out.unique = out.unique && c.length() == out.n && sorted(summands_along(g, c, budget)) == out.atoms;

  for (std::size_t i = 0; i < ks.size(); ++i) {
    VertexSet others(g.vertex_count());
    for (std::size_t j = 0; j < ks.size(); ++j)
      if (j != i) others = others | ks[j];
    out.components.push_back({ks[i], subgraph(g, saturate(g, others, budget), SubgraphMode::Remove, budget)});
  }
  return out;
}

}  // namespace kgraphkit
