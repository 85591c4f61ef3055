#include "kgraphkit/ideals.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "kgraphkit/error.hpp"

namespace kgraphkit {

VertexSet VertexSet::all(std::size_t universe) {
  VertexSet s(universe);
  s.bits_.assign(universe, true);
  return s;
}

VertexSet VertexSet::of(std::size_t universe, std::span<const VertexId> members) {
  VertexSet s(universe);
  for (VertexId v : members) s.insert(v);
  return s;
}

std::size_t VertexSet::size() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

std::vector<VertexId> VertexSet::members() const {
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) out.push_back(static_cast<VertexId>(i));
  return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] && !other.bits_[i]) return false;
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] && other.bits_[i]) return true;
  return false;
}

VertexSet VertexSet::operator|(const VertexSet& other) const {
  VertexSet r = *this;
  for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] || other.bits_[i];
  return r;
}

VertexSet VertexSet::operator&(const VertexSet& other) const {
  VertexSet r = *this;
  for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] && other.bits_[i];
  return r;
}

VertexSet VertexSet::operator-(const VertexSet& other) const {
  VertexSet r = *this;
  for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] && !other.bits_[i];
  return r;
}

VertexSet VertexSet::complement() const {
  VertexSet r = *this;
  r.bits_.flip();
  return r;
}

std::strong_ordering VertexSet::operator<=>(const VertexSet& other) const {
  if (auto c = size() <=> other.size(); c != 0) return c;
  return members() <=> other.members();
}

std::string VertexSet::to_string(const KGraph& g) const {
  std::string s = "{";
  bool first = true;
  for (VertexId v : members()) {
    if (!first) s += ',';
    s += g.vertex_name(v);
    first = false;
  }
  return s + "}";
}

VertexSet hereditary_closure(const KGraph& g, const VertexSet& V) {
  VertexSet out = V;
  std::deque<VertexId> queue;
  for (VertexId v : V.members()) queue.push_back(v);
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (int c = 0; c < g.rank(); ++c) {
      for (EdgeId e : g.edges_at(u, c)) {
        const VertexId w = g.edge(e).source;
        if (!out.contains(w)) {
          out.insert(w);
          queue.push_back(w);
        }
      }
    }
  }
  return out;
}

bool is_hereditary(const KGraph& g, const VertexSet& H) {
  for (const Edge& e : g.edges())
    if (H.contains(e.range) && !H.contains(e.source)) return false;
  return true;
}

namespace {

// Sources of v Lambda^d for every d in the box [0, bound], indexed in
// for_each_in_box order (last coordinate fastest).
class ReachTable {
 public:
  ReachTable(const KGraph& g, VertexId v, const Degree& bound) : g_(g), bound_(bound) {
    std::size_t total = 1;
    stride_.assign(bound.rank(), 1);
    for (std::size_t i = bound.rank(); i-- > 0;) {
      stride_[i] = total;
      total *= static_cast<std::size_t>(bound[i]) + 1;
    }
    table_.assign(total, VertexSet(g.vertex_count()));
    for_each_in_box(Degree::zero(bound.rank()), bound, [&](const Degree& d) {
      VertexSet& here = table_[index(d)];
      int last = -1;
      for (std::size_t i = 0; i < d.rank(); ++i)
        if (d[i] > 0) last = static_cast<int>(i);
      if (last < 0) {
        here.insert(v);
        return;
      }
      // Normal form ends with an edge of the highest colour present.
      Degree prev = d;
      --prev[last];
      for (VertexId u : table_[index(prev)].members())
        for (EdgeId e : g.edges_at(u, last)) here.insert(g.edge(e).source);
    });
  }

  const VertexSet& at(const Degree& d) const { return table_[index(d)]; }

  VertexSet le_sources(const Degree& n) const {
    VertexSet out(g_.vertex_count());
    for_each_in_box(Degree::zero(n.rank()), n, [&](const Degree& d) {
      for (VertexId u : at(d).members()) {
        bool stops = true;
        for (std::size_t i = 0; i < d.rank() && stops; ++i)
          if (d[i] < n[i] && g_.has_color(u, static_cast<int>(i))) stops = false;
        if (stops) out.insert(u);
      }
    });
    return out;
  }

 private:
  std::size_t index(const Degree& d) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < d.rank(); ++i) idx += stride_[i] * static_cast<std::size_t>(d[i]);
    return idx;
  }

  const KGraph& g_;
  Degree bound_;
  std::vector<std::size_t> stride_;
  std::vector<VertexSet> table_;
};

bool saturation_rule_fires(const KGraph& g, VertexId v, const VertexSet& H, const Degree& bound,
                           bool hereditary) {
  ReachTable reach(g, v, bound);
  if (hereditary) return reach.le_sources(bound).is_subset_of(H);
  bool fires = false;
  for_each_in_box(Degree::zero(bound.rank()), bound, [&](const Degree& n) {
    if (!fires && !n.is_zero()) fires = reach.le_sources(n).is_subset_of(H);
  });
  return fires;
}

}  // namespace

VertexSet sources_of_le(const KGraph& g, VertexId v, const Degree& n) {
  if (v < 0 || static_cast<std::size_t>(v) >= g.vertex_count())
    throw Error(ErrorKind::UnknownVertex, "vertex index " + std::to_string(v) + " out of range");
  return ReachTable(g, v, n).le_sources(n);
}

SubsetClass classify_subset(const KGraph& g, const VertexSet& H, const BudgetConfig& budget) {
  SubsetClass out;
  out.hereditary = is_hereditary(g, H);
  out.saturated = true;
  for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()) && out.saturated; ++v)
    if (!H.contains(v) && saturation_rule_fires(g, v, H, budget.saturation_bound, out.hereditary))
      out.saturated = false;
  return out;
}

VertexSet saturate(const KGraph& g, const VertexSet& H, const BudgetConfig& budget) {
  if (!is_hereditary(g, H)) throw Error(ErrorKind::NotHereditary, H.to_string(g) + " is not hereditary");
  VertexSet cur = H;
  for (bool changed = true; changed;) {
    changed = false;
    for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v) {
      if (cur.contains(v)) continue;
      if (saturation_rule_fires(g, v, cur, budget.saturation_bound, true)) {
        cur.insert(v);
        changed = true;
      }
    }
  }
  return cur;
}

VertexSet saturate_single_color(const KGraph& g, const VertexSet& H) {
  VertexSet cur = H;
  for (bool changed = true; changed;) {
    changed = false;
    for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v) {
      if (cur.contains(v)) continue;
      for (int c = 0; c < g.rank(); ++c) {
        auto es = g.edges_at(v, c);
        if (es.empty()) continue;
        if (std::all_of(es.begin(), es.end(), [&](EdgeId e) { return cur.contains(g.edge(e).source); })) {
          cur.insert(v);
          changed = true;
          break;
        }
      }
    }
  }
  return cur;
}

std::optional<int> HSLattice::index_of(const VertexSet& H) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), H);
  if (it == elements.end() || !(*it == H)) return std::nullopt;
  return static_cast<int>(it - elements.begin());
}

HSLattice enumerate_hs_lattice(const KGraph& g, const BudgetConfig& budget, std::size_t cap) {
  const std::size_t n = g.vertex_count();
  std::vector<VertexSet> futures;
  for (VertexId v = 0; v < static_cast<VertexId>(n); ++v)
    futures.push_back(hereditary_closure(g, VertexSet::of(n, std::span<const VertexId>(&v, 1))));

  // Hereditary sets are exactly the unions of futures T(v).
  std::set<std::vector<bool>> seen{VertexSet(n).bits()};
  std::vector<VertexSet> hereditary{VertexSet(n)};
  for (std::size_t head = 0; head < hereditary.size(); ++head) {
    for (VertexId v = 0; v < static_cast<VertexId>(n); ++v) {
      if (hereditary[head].contains(v)) continue;
      VertexSet next = hereditary[head] | futures[v];
      if (seen.insert(next.bits()).second) {
        if (hereditary.size() >= cap)
          throw Error(ErrorKind::TooLarge, "more than " + std::to_string(cap) + " hereditary sets");
        hereditary.push_back(std::move(next));
      }
    }
  }

  HSLattice lattice;
  for (const auto& H : hereditary)
    if (saturate(g, H, budget) == H) lattice.elements.push_back(H);
  std::sort(lattice.elements.begin(), lattice.elements.end());

  const std::size_t m = lattice.size();
  lattice.meet.assign(m, std::vector<int>(m, -1));
  lattice.join.assign(m, std::vector<int>(m, -1));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      auto meet = lattice.index_of(lattice.elements[a] & lattice.elements[b]);
      auto join = lattice.index_of(saturate(g, lattice.elements[a] | lattice.elements[b], budget));
      if (!meet || !join)
        throw Error(ErrorKind::PreconditionViolated, "lattice is not closed under meet and join");
      lattice.meet[a][b] = *meet;
      lattice.join[a][b] = *join;
    }
  }
  return lattice;
}

KGraph subgraph(const KGraph& g, const VertexSet& H, SubgraphMode mode, const BudgetConfig& budget) {
  const VertexSet removed = mode == SubgraphMode::Remove ? H : H.complement();
  const SubsetClass cls = classify_subset(g, removed, budget);
  if (!cls.hereditary || !cls.saturated)
    throw Error(ErrorKind::PreconditionViolated,
                removed.to_string(g) + " is not saturated hereditary, cannot cut the graph along it");
  const VertexSet kept = removed.complement();

  KGraphSpec spec;
  spec.rank = g.rank();
  for (VertexId v : kept.members()) spec.vertices.push_back(g.vertex_name(v));
  std::vector<bool> edge_kept(g.edge_count(), false);
  for (EdgeId e = 0; e < static_cast<EdgeId>(g.edge_count()); ++e) {
    const Edge& ed = g.edge(e);
    if (kept.contains(ed.range) && kept.contains(ed.source)) {
      edge_kept[e] = true;
      spec.edges.push_back({ed.id, ed.color + 1, g.vertex_name(ed.range), g.vertex_name(ed.source)});
    }
  }
  for (const Square& s : g.squares())
    if (edge_kept[s.f] && edge_kept[s.g] && edge_kept[s.g2] && edge_kept[s.f2])
      spec.squares.push_back({g.edge(s.f).id, g.edge(s.g).id, g.edge(s.g2).id, g.edge(s.f2).id});
  return KGraph::build(spec);
}

bool is_cofinal_graph(const KGraph& g, const BudgetConfig& budget) {
  return enumerate_hs_lattice(g, budget).size() == (g.vertex_count() == 0 ? 1 : 2);
}

}  // namespace kgraphkit
