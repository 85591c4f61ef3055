#include "kgraphkit/periodicity.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "kgraphkit/error.hpp"

namespace kgraphkit {
namespace {

Answer conjunction(Answer a, Answer b) {
  if (a == Answer::No || b == Answer::No) return Answer::No;
  if (a == Answer::Unknown || b == Answer::Unknown) return Answer::Unknown;
  return Answer::Yes;
}

// Follows the first step whose source is allowed until a vertex repeats.
std::optional<BoundaryPath> greedy_boundary(const KGraph& g, VertexId start, const std::vector<bool>* allowed) {
  std::vector<int> index(g.vertex_count(), -1);
  std::vector<Path> walk;
  VertexId u = start;
  while (index[u] < 0) {
    index[u] = static_cast<int>(walk.size());
    std::optional<Path> chosen;
    for (auto& step : steps(g, u)) {
      if (allowed && !(*allowed)[step.source]) continue;
      chosen = std::move(step);
      break;
    }
    if (!chosen) return std::nullopt;
    if (chosen->is_vertex()) {
      Path p = vertex_path(g, start);
      for (const auto& s : walk) p = compose(g, p, s);
      return finite_boundary(g, std::move(p));
    }
    u = chosen->source;
    walk.push_back(std::move(*chosen));
  }
  Path prefix = vertex_path(g, start);
  for (int t = 0; t < index[u]; ++t) prefix = compose(g, prefix, walk[t]);
  Path cycle = vertex_path(g, u);
  for (std::size_t t = index[u]; t < walk.size(); ++t) cycle = compose(g, cycle, walk[t]);
  return canonical(g, BoundaryPath{std::move(prefix), std::move(cycle)});
}

// A path from v (range v) to some vertex of `target`, by breadth-first search.
std::optional<Path> path_into(const KGraph& g, VertexId v, const std::vector<bool>& target) {
  std::vector<EdgeId> via(g.vertex_count(), -1);
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<VertexId> queue{v};
  seen[v] = true;
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    if (target[u]) {
      std::vector<EdgeId> edges;
      for (VertexId w = u; w != v;) {
        edges.push_back(via[w]);
        w = g.edge(via[w]).range;
      }
      std::reverse(edges.begin(), edges.end());
      return path_from_edges(g, v, edges);
    }
    for (int c = 0; c < g.rank(); ++c) {
      for (EdgeId e : g.edges_at(u, c)) {
        const VertexId w = g.edge(e).source;
        if (seen[w]) continue;
        seen[w] = true;
        via[w] = e;
        queue.push_back(w);
      }
    }
  }
  return std::nullopt;
}

Degree bound_minus_one(const Degree& d) {
  Degree r = d;
  for (std::size_t i = 0; i < r.rank(); ++i) r[i] = std::max(0, r[i] - 1);
  return r;
}

}  // namespace

std::string to_string(Answer a) {
  switch (a) {
    case Answer::Yes:
      return "yes";
    case Answer::No:
      return "no";
    case Answer::Unknown:
      break;
  }
  return "unknown";
}

std::string to_string(PeriodicityStatus s) {
  switch (s) {
    case PeriodicityStatus::Aperiodic:
      return "aperiodic";
    case PeriodicityStatus::Periodic:
      return "periodic";
    case PeriodicityStatus::Unknown:
      break;
  }
  return "unknown";
}

EquivalenceOracle::EquivalenceOracle(const KGraph& g, BudgetConfig budget)
    : g_(g),
      budget_(std::move(budget)),
      any_(g.vertex_count()),
      finite_witness_(g.rank(), std::vector<std::optional<std::optional<BoundaryPath>>>(g.vertex_count())),
      unique_(g.vertex_count()),
      steps_(g.vertex_count()) {
  budget_.validate(g.rank());
  const std::size_t n = g.vertex_count();
  finite_.assign(g.rank(), std::vector<bool>(n, false));
  for (int i = 0; i < g.rank(); ++i) {
    avoid_.push_back(avoiding_set(g, ColorSet{1} << i));
    VertexSet target(n);
    for (VertexId v = 0; v < static_cast<VertexId>(n); ++v)
      if (avoid_[i][v]) target.insert(v);
    // v reaches the avoiding set iff T(v) meets it.
    for (VertexId v = 0; v < static_cast<VertexId>(n); ++v)
      finite_[i][v] = hereditary_closure(g, VertexSet::of(n, std::vector<VertexId>{v})).intersects(target);
  }
}

const std::optional<BoundaryPath>& EquivalenceOracle::unique_path(VertexId v) {
  auto& slot = unique_.at(v);
  if (!slot) slot = unique_boundary_path(g_, v);
  return *slot;
}

const std::vector<Path>& EquivalenceOracle::steps_at(VertexId v) {
  auto& slot = steps_.at(v);
  if (!slot) slot = steps(g_, v);
  return *slot;
}

const std::optional<BoundaryPath>& EquivalenceOracle::any_boundary(VertexId v) {
  auto& slot = any_.at(v);
  if (!slot) slot = greedy_boundary(g_, v, nullptr);
  return *slot;
}

const std::optional<BoundaryPath>& EquivalenceOracle::finite_boundary_in(VertexId v, int color) {
  auto& slot = finite_witness_.at(color).at(v);
  if (!slot) {
    slot.emplace();
    const auto& avoid = avoid_[color];
    if (auto lead = path_into(g_, v, avoid))
      if (auto tail = greedy_boundary(g_, lead->source, &avoid)) *slot = prepend(g_, *lead, *tail);
  }
  return *slot;
}

Equivalence EquivalenceOracle::test(const Path& mu, const Path& nu) {
  if (mu == nu) return {Answer::Yes, "identical paths", std::nullopt};
  if (mu.source != nu.source) return {Answer::No, "sources differ", std::nullopt};
  const VertexId s = mu.source;
  if (mu.range != nu.range) return {Answer::No, "ranges differ", any_boundary(s)};
  if (mu.degree == nu.degree) return {Answer::No, "distinct paths of equal degree", any_boundary(s)};

  const Degree m = mu.degree.meet(nu.degree);
  auto [head_mu, tail_mu] = factorize(g_, mu, m);
  auto [head_nu, tail_nu] = factorize(g_, nu, m);
  if (head_mu != head_nu)
    return {Answer::No, "initial segments of degree " + m.to_string() + " differ", any_boundary(s)};

  for (int i = 0; i < g_.rank(); ++i) {
    if (mu.degree[i] == nu.degree[i] || !finite_[i][s]) continue;
    return {Answer::No, "a boundary path with finite colour-" + std::to_string(i + 1) + " degree",
            finite_boundary_in(s, i)};
  }

  // Every boundary path from s is a sequence of steps. Read them one at a
  // time, keeping the parts of mu x and nu x beyond the step read so far;
  // the heads must agree after every step. There are finitely many states.
  struct State {
    Path a, b;
    int parent;
    const Path* step;
  };
  auto key = [](const Path& a, const Path& b) {
    std::vector<int> k{a.range, a.source};
    k.insert(k.end(), a.edges.begin(), a.edges.end());
    k.push_back(-1);
    k.push_back(b.range);
    k.insert(k.end(), b.edges.begin(), b.edges.end());
    return k;
  };
  auto walk_to = [&](const std::vector<State>& states, int at, const Path& last) {
    std::vector<const Path*> taken{&last};
    for (int t = at; states[t].parent >= 0; t = states[t].parent) taken.push_back(states[t].step);
    Path lam = vertex_path(g_, s);
    for (auto it = taken.rbegin(); it != taken.rend(); ++it) lam = compose(g_, lam, **it);
    std::optional<BoundaryPath> x;
    if (auto rest = greedy_boundary(g_, lam.source, nullptr)) x = prepend(g_, lam, *rest);
    return x;
  };

  std::vector<State> states{{std::move(tail_mu), std::move(tail_nu), -1, nullptr}};
  std::set<std::vector<int>> seen{key(states[0].a, states[0].b)};
  for (std::size_t at = 0; at < states.size(); ++at) {
    const Path a = states[at].a;
    const Path b = states[at].b;
    for (const Path& step : steps_at(a.source)) {
      if (step.is_vertex())
        return {Answer::No, "finite boundary path", walk_to(states, static_cast<int>(at), step)};
      auto [ha, ta] = factorize(g_, compose(g_, a, step), step.degree);
      auto [hb, tb] = factorize(g_, compose(g_, b, step), step.degree);
      if (ha != hb)
        return {Answer::No, "separating boundary path", walk_to(states, static_cast<int>(at), step)};
      if (!seen.insert(key(ta, tb)).second) continue;
      if (states.size() >= kStateCap)
        return {Answer::Unknown, "state limit reached", std::nullopt};
      states.push_back({std::move(ta), std::move(tb), static_cast<int>(at), &step});
    }
  }
  return {Answer::Yes, "all boundary paths from the source agree", std::nullopt};
}

PerResult per_group(const KGraph& g, const BudgetConfig& budget, const std::optional<std::vector<bool>>& ranges) {
  EquivalenceOracle oracle(g, budget);
  return per_group(oracle, ranges);
}

PerResult per_group(EquivalenceOracle& oracle, const std::optional<std::vector<bool>>& ranges) {
  const KGraph& g = oracle.graph();
  const Degree& bound = oracle.budget().degree_bound;
  const Degree inner = bound_minus_one(bound);
  PerResult out;
  std::vector<IntVector> all, early;
  for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v) {
    if (ranges && !(*ranges)[v]) continue;
    std::map<VertexId, std::vector<Path>> by_source;
    for (auto& p : paths_up_to(g, v, bound)) by_source[p.source].push_back(std::move(p));
    for (const auto& [s, group] : by_source) {
      for (std::size_t a = 0; a < group.size(); ++a) {
        for (std::size_t b = a + 1; b < group.size(); ++b) {
          const Path& mu = group[a];
          const Path& nu = group[b];
          if (mu.degree == nu.degree) continue;
          ++out.tested_pairs;
          const Equivalence eq = oracle.test(mu, nu);
          if (eq.answer == Answer::Unknown) {
            ++out.unknown_pairs;
          } else if (eq.answer == Answer::Yes) {
            all.push_back(difference(mu.degree, nu.degree));
            if (mu.degree <= inner && nu.degree <= inner) early.push_back(all.back());
            out.witnesses.emplace_back(mu, nu);
          }
        }
      }
    }
  }
  out.group = IntSubgroup::generated_by(g.rank(), all);
  out.stabilized = IntSubgroup::generated_by(g.rank(), early) == out.group;
  out.exact = out.stabilized && out.unknown_pairs == 0;
  return out;
}

PeriodicityVerdict aperiodicity(const KGraph& g, const BudgetConfig& budget) {
  PeriodicityVerdict out;
  out.budget = budget;
  EquivalenceOracle oracle(g, budget);
  const auto n = static_cast<VertexId>(g.vertex_count());

  for (VertexId v = 0; v < n; ++v) {
    const auto& x = oracle.unique_path(v);
    if (!x || x->is_finite()) continue;
    out.status = PeriodicityStatus::Periodic;
    out.witness.emplace(x->cycle, vertex_path(g, x->cycle.source));
    out.criterion = "cycle without entrance at " + g.vertex_name(x->cycle.source);
    return out;
  }
  if (g.rank() == 1) {
    out.status = PeriodicityStatus::Aperiodic;
    out.criterion = "every cycle has an entrance";
    return out;
  }
  bool all_finite = true;
  for (VertexId v = 0; v < n && all_finite; ++v)
    for (int i = 0; i < g.rank(); ++i) all_finite = all_finite && oracle.finite_in_color(v, i);
  if (all_finite) {
    out.status = PeriodicityStatus::Aperiodic;
    out.criterion = "every vertex reaches boundary paths of finite degree in each colour";
    return out;
  }
  const PerResult per = per_group(oracle);
  if (!per.witnesses.empty()) {
    out.status = PeriodicityStatus::Periodic;
    out.witness = per.witnesses.front();
    out.criterion = "equivalent pair within the degree bound";
    return out;
  }
  out.status = PeriodicityStatus::Unknown;
  out.criterion = per.unknown_pairs ? "undecided pairs within the budget" : "no equivalent pair within the degree bound";
  return out;
}

HPerResult h_per(const KGraph& g, const IntSubgroup& per, const BudgetConfig& budget,
                 const std::optional<std::vector<bool>>& vertices) {
  EquivalenceOracle oracle(g, budget);
  return h_per(oracle, per, vertices);
}

HPerResult h_per(EquivalenceOracle& oracle, const IntSubgroup& per, const std::optional<std::vector<bool>>& vertices) {
  const KGraph& g = oracle.graph();
  const Degree& bound = oracle.budget().degree_bound;
  const std::size_t n = g.vertex_count();
  if (per.ambient_rank() != static_cast<std::size_t>(g.rank()))
    throw Error(ErrorKind::BadDegree, "subgroup ambient rank differs from the graph rank");
  HPerResult out{VertexSet(n), VertexSet(n)};

  for (VertexId v = 0; v < static_cast<VertexId>(n); ++v) {
    if (vertices && !(*vertices)[v]) continue;
    const auto paths = paths_up_to(g, v, bound);
    std::map<std::vector<int>, std::vector<const Path*>> by_degree;
    for (const auto& p : paths) by_degree[p.degree.entries()].push_back(&p);

    bool member = true;
    bool exact = true;
    for (const auto& mu : paths) {
      if (!member && exact) break;
      for_each_in_box(Degree::zero(g.rank()), bound, [&](const Degree& m) {
        if (!member && exact) return;
        if (m == mu.degree || !per.contains(difference(mu.degree, m))) return;
        Answer found = Answer::No;
        if (auto it = by_degree.find(m.entries()); it != by_degree.end()) {
          for (const Path* nu : it->second) {
            if (nu->source != mu.source) continue;
            const Answer a = oracle.test(mu, *nu).answer;
            if (a == Answer::Yes) {
              found = Answer::Yes;
              break;
            }
            if (a == Answer::Unknown) found = Answer::Unknown;
          }
        }
        if (found == Answer::Yes) return;
        if (found == Answer::No) {
          member = false;
          exact = true;
        } else if (member) {
          member = false;
          exact = false;
        }
      });
    }
    if (member) out.members.insert(v);
    if (exact) out.exact.insert(v);
  }
  return out;
}

TransferReport transfer_check(EquivalenceOracle& base, EquivalenceOracle& window_oracle, const DesWindow& window,
                              const DesElement& mu_bar, const DesElement& nu_bar) {
  const KGraph& g = base.graph();
  TransferReport out;
  const auto mu_w = window.path_of(g, mu_bar);
  const auto nu_w = window.path_of(g, nu_bar);
  if (mu_w && nu_w) out.window_side = window_oracle.test(*mu_w, *nu_w).answer;

  const bool shifts_equal = difference(mu_bar.source_excess, mu_bar.range_excess) ==
                            difference(nu_bar.source_excess, nu_bar.range_excess);
  const Answer cores = mu_bar.core.source == nu_bar.core.source ? base.test(mu_bar.core, nu_bar.core).answer : Answer::No;
  out.base_side = conjunction(cores, shifts_equal ? Answer::Yes : Answer::No);

  if (out.window_side == Answer::Unknown || out.base_side == Answer::Unknown)
    out.agree = Answer::Unknown;
  else
    out.agree = out.window_side == out.base_side ? Answer::Yes : Answer::No;
  return out;
}

TransferReport transfer_check(const KGraph& g, const DesElement& mu_bar, const DesElement& nu_bar,
                              const BudgetConfig& budget, const Degree& window_bound) {
  const DesWindow window = des_window(g, window_bound);
  EquivalenceOracle base(g, budget);
  EquivalenceOracle window_oracle(window.graph, budget);
  return transfer_check(base, window_oracle, window, mu_bar, nu_bar);
}

}  // namespace kgraphkit
