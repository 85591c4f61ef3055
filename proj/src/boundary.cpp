#include "kgraphkit/boundary.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "kgraphkit/error.hpp"

namespace kgraphkit {
namespace {

struct CycleShape {
  int level = 0;      // L
  ColorSet colors = 0;  // J
};

CycleShape cycle_shape(const BoundaryPath& x) {
  return {x.cycle.degree.max_entry(), x.cycle.degree.support()};
}

Path unroll(const KGraph& g, const BoundaryPath& x, int copies) {
  Path w = x.prefix;
  for (int t = 0; t < copies; ++t) w = compose(g, w, x.cycle);
  return w;
}

void check_position(const BoundaryPath& x, const Degree& q) {
  const Degree d = degree(x);
  if (q.rank() != d.rank() || !q.is_finite() || !(q <= d))
    throw Error(ErrorKind::OutOfRange, "position " + q.to_string() + " exceeds d(x)=" + d.to_string());
}

// Copies of the cycle after which the unrolled prefix reaches position q.
int copies_needed(const BoundaryPath& x, const Degree& q) {
  const auto [level, colors] = cycle_shape(x);
  int copies = 0;
  for (std::size_t i = 0; i < q.rank(); ++i) {
    if (!contains_color(colors, i)) continue;
    const int gap = q[i] - x.prefix.degree[i];
    if (gap > 0) copies = std::max(copies, (gap + level - 1) / level);
  }
  return copies;
}

std::vector<int> boundary_key(const BoundaryPath& x) {
  std::vector<int> key{x.prefix.range};
  key.insert(key.end(), x.prefix.edges.begin(), x.prefix.edges.end());
  key.push_back(-1);
  key.insert(key.end(), x.cycle.edges.begin(), x.cycle.edges.end());
  key.push_back(-2);
  key.push_back(x.prefix.source);
  return key;
}

std::vector<bool> hereditary_reach(const KGraph& g, VertexId v) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<VertexId> queue{v};
  seen[v] = true;
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (int c = 0; c < g.rank(); ++c) {
      for (EdgeId e : g.edges_at(u, c)) {
        const VertexId w = g.edge(e).source;
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
  }
  return seen;
}

}  // namespace

BoundaryPath finite_boundary(const KGraph& g, Path prefix) {
  const VertexId s = prefix.source;
  return BoundaryPath{std::move(prefix), vertex_path(g, s)};
}

BoundaryPath periodic_boundary(const KGraph& g, Path prefix, Path cycle) {
  BoundaryPath x{std::move(prefix), std::move(cycle)};
  check_presentation(g, x);
  return x;
}

Degree degree(const BoundaryPath& x) {
  Degree d = x.prefix.degree;
  for (std::size_t i = 0; i < d.rank(); ++i)
    if (x.cycle.degree[i] > 0) d[i] = Degree::kInfinity;
  return d;
}

void check_presentation(const KGraph& g, const BoundaryPath& x) {
  if (x.cycle.range != x.prefix.source || x.cycle.source != x.prefix.source)
    throw Error(ErrorKind::MalformedPresentation,
                "cycle " + describe(g, x.cycle) + " is not a loop at " + g.vertex_name(x.prefix.source));
  const auto [level, colors] = cycle_shape(x);
  if (x.cycle.degree != Degree::indicator(x.cycle.degree.rank(), colors, level))
    throw Error(ErrorKind::MalformedPresentation,
                "cycle degree " + x.cycle.degree.to_string() + " is not uniform on its support");
}

bool validate_boundary(const KGraph& g, const BoundaryPath& x) {
  check_presentation(g, x);
  const Degree d = degree(x);
  const Path window = unroll(g, x, 1);
  bool ok = true;
  for_each_in_box(Degree::zero(d.rank()), window.degree, [&](const Degree& p) {
    if (!ok) return;
    VertexId u = -1;
    for (std::size_t i = 0; i < d.rank(); ++i) {
      if (!d.is_finite(i) || p[i] != d[i]) continue;
      if (u < 0) u = vertex_at(g, window, p);
      if (g.has_color(u, static_cast<int>(i))) ok = false;
    }
  });
  return ok;
}

Path segment(const KGraph& g, const BoundaryPath& x, const Degree& p, const Degree& q) {
  check_position(x, q);
  if (!(p <= q)) throw Error(ErrorKind::OutOfRange, "segment bounds " + p.to_string() + " > " + q.to_string());
  return segment(g, unroll(g, x, copies_needed(x, q)), p, q);
}

VertexId vertex_at(const KGraph& g, const BoundaryPath& x, const Degree& p) {
  return segment(g, x, p, p).range;
}

BoundaryPath shift(const KGraph& g, const BoundaryPath& x, const Degree& n) {
  check_position(x, n);
  const Path w = unroll(g, x, copies_needed(x, n));
  return BoundaryPath{factorize(g, w, n).second, x.cycle};
}

BoundaryPath prepend(const KGraph& g, const Path& lam, const BoundaryPath& x) {
  return BoundaryPath{compose(g, lam, x.prefix), x.cycle};
}

BoundaryPath canonical(const KGraph& g, const BoundaryPath& x) {
  check_presentation(g, x);
  if (x.is_finite()) return x;
  const auto [level, colors] = cycle_shape(x);
  const std::size_t k = x.prefix.degree.rank();
  const int t0 = x.prefix.degree.max_entry();
  const int horizon = t0 + 2 * level;
  auto position = [&](int t) {
    Degree p(k);
    for (std::size_t i = 0; i < k; ++i)
      p[i] = contains_color(colors, i) ? t : std::min(t, x.prefix.degree[i]);
    return p;
  };

  // Diagonal steps x(P(t), P(t+1)); periodic with period `level` from t0 on.
  std::vector<Path> step;
  Path rest = unroll(g, x, copies_needed(x, position(horizon)));
  for (int t = 0; t < horizon; ++t) {
    auto [head, tail] = factorize(g, rest, position(t + 1) - position(t));
    step.push_back(std::move(head));
    rest = std::move(tail);
  }
  int period = level;
  for (int p = 1; p < level; ++p) {
    if (level % p) continue;
    bool periodic = true;
    for (int t = t0; t < t0 + level && periodic; ++t) periodic = step[t] == step[t + p];
    if (periodic) {
      period = p;
      break;
    }
  }
  int start = t0;
  while (start > 0 && step[start - 1] == step[start - 1 + period]) --start;

  Path prefix = vertex_path(g, x.prefix.range);
  for (int t = 0; t < start; ++t) prefix = compose(g, prefix, step[t]);
  Path cycle = vertex_path(g, prefix.source);
  for (int t = start; t < start + period; ++t) cycle = compose(g, cycle, step[t]);
  return BoundaryPath{std::move(prefix), std::move(cycle)};
}

bool same_boundary_path(const KGraph& g, const BoundaryPath& x, const BoundaryPath& y) {
  if (x.range() != y.range() || degree(x) != degree(y)) return false;
  return canonical(g, x) == canonical(g, y);
}

bool is_cofinal_path(const KGraph& g, const BoundaryPath& x) {
  const Path window = unroll(g, x, 1);
  std::vector<bool> visited(g.vertex_count(), false);
  for_each_in_box(Degree::zero(window.degree.rank()), window.degree,
                  [&](const Degree& p) { visited[vertex_at(g, window, p)] = true; });
  for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v) {
    const auto reach = hereditary_reach(g, v);
    bool hit = false;
    for (std::size_t u = 0; u < reach.size() && !hit; ++u) hit = reach[u] && visited[u];
    if (!hit) return false;
  }
  return true;
}

std::vector<Path> steps(const KGraph& g, VertexId v) {
  return le_paths(g, v, Degree(g.rank(), 1));
}

std::vector<bool> avoiding_set(const KGraph& g, ColorSet S) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<Path>> step_table(n);
  std::vector<bool> in(n);
  for (VertexId v = 0; v < static_cast<VertexId>(n); ++v) {
    in[v] = (g.colors_at(v) & S) == 0;
    if (in[v]) step_table[v] = steps(g, v);
  }
  // Greatest fixpoint: keep w while some step from w lands in the set.
  for (bool changed = true; changed;) {
    changed = false;
    for (VertexId v = 0; v < static_cast<VertexId>(n); ++v) {
      if (!in[v]) continue;
      const bool alive = std::any_of(step_table[v].begin(), step_table[v].end(),
                                     [&](const Path& p) { return in[p.source]; });
      if (!alive) {
        in[v] = false;
        changed = true;
      }
    }
  }
  return in;
}

bool avoiding_boundary_exists(const KGraph& g, VertexId v, ColorSet S) {
  if (v < 0 || static_cast<std::size_t>(v) >= g.vertex_count())
    throw Error(ErrorKind::UnknownVertex, "vertex index " + std::to_string(v) + " out of range");
  return avoiding_set(g, S)[v];
}

std::vector<BoundaryPath> enumerate_boundary(const KGraph& g, VertexId v, int size_bound) {
  if (size_bound < 1) throw Error(ErrorKind::BadDegree, "presentation bound must be positive");
  std::vector<std::vector<Path>> step_table(g.vertex_count());
  for (VertexId u = 0; u < static_cast<VertexId>(g.vertex_count()); ++u) step_table[u] = steps(g, u);

  std::vector<BoundaryPath> out;
  std::set<std::vector<int>> seen;
  auto emit = [&](const BoundaryPath& x) {
    BoundaryPath c = canonical(g, x);
    if (seen.insert(boundary_key(c)).second) out.push_back(std::move(c));
  };

  std::vector<VertexId> visited{v};
  std::vector<const Path*> taken;
  auto joined = [&](std::size_t from, std::size_t to, VertexId start) {
    Path p = vertex_path(g, start);
    for (std::size_t t = from; t < to; ++t) p = compose(g, p, *taken[t]);
    return p;
  };
  auto dfs = [&](auto&& self, int used) -> void {
    const VertexId u = visited.back();
    for (const Path& step : step_table[u]) {
      if (step.is_vertex()) {
        emit(finite_boundary(g, joined(0, taken.size(), v)));
        continue;
      }
      const int cost = static_cast<int>(step.edges.size());
      if (used + cost > size_bound) continue;
      taken.push_back(&step);
      const VertexId w = step.source;
      for (std::size_t a = 0; a < visited.size(); ++a) {
        if (visited[a] != w) continue;
        BoundaryPath x{joined(0, a, v), joined(a, taken.size(), w)};
        const auto [level, colors] = cycle_shape(x);
        if (x.cycle.degree == Degree::indicator(x.cycle.degree.rank(), colors, level)) emit(x);
      }
      visited.push_back(w);
      self(self, used + cost);
      visited.pop_back();
      taken.pop_back();
    }
  };
  dfs(dfs, 0);
  return out;
}

std::optional<BoundaryPath> unique_boundary_path(const KGraph& g, VertexId v) {
  std::vector<int> index(g.vertex_count(), -1);
  std::vector<Path> walk;
  VertexId u = v;
  while (index[u] < 0) {
    index[u] = static_cast<int>(walk.size());
    auto options = steps(g, u);
    if (options.size() != 1) return std::nullopt;
    if (options.front().is_vertex()) {
      Path p = vertex_path(g, v);
      for (const auto& s : walk) p = compose(g, p, s);
      return finite_boundary(g, std::move(p));
    }
    u = options.front().source;
    walk.push_back(std::move(options.front()));
  }
  Path prefix = vertex_path(g, v);
  for (int t = 0; t < index[u]; ++t) prefix = compose(g, prefix, walk[t]);
  Path cycle = vertex_path(g, u);
  for (std::size_t t = index[u]; t < walk.size(); ++t) cycle = compose(g, cycle, walk[t]);
  return canonical(g, BoundaryPath{std::move(prefix), std::move(cycle)});
}

std::string describe(const KGraph& g, const BoundaryPath& x) {
  std::string s = describe(g, x.prefix);
  if (!x.is_finite()) s += " (" + describe(g, x.cycle) + ")^inf";
  return s;
}

}  // namespace kgraphkit
