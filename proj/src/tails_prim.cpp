#include "kgraphkit/tails_prim.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "kgraphkit/error.hpp"

namespace kgraphkit {

Rational::Rational(long long num, long long den) {
  if (den == 0) throw Error(ErrorKind::BadDegree, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const long long d = std::gcd(num, den);
  num_ = num / d;
  den_ = den / d;
}

Rational Rational::fractional() const {
  long long r = num_ % den_;
  if (r < 0) r += den_;
  return Rational(r, den_);
}

Rational Rational::operator+(const Rational& other) const {
  const long long l = std::lcm(den_, other.den_);
  return Rational(num_ * (l / den_) + other.num_ * (l / other.den_), l);
}

Rational Rational::operator*(long long factor) const { return Rational(num_ * factor, den_); }

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational parse_rational(const std::string& text) {
  auto parse = [&](std::string_view part) {
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc{} || ptr != part.data() + part.size() || part.empty())
      throw Error(ErrorKind::BadDegree, "not a rational number: '" + text + "'");
    return value;
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse(text));
  const long long den = parse(std::string_view(text).substr(slash + 1));
  if (den == 0) throw Error(ErrorKind::BadDegree, "zero denominator in '" + text + "'");
  return Rational(parse(std::string_view(text).substr(0, slash)), den);
}

TailConditions check_tail(const KGraph& g, const VertexSet& T, const BudgetConfig& budget) {
  TailConditions c;
  c.closed_upward = std::all_of(g.edges().begin(), g.edges().end(),
                                [&](const Edge& e) { return !T.contains(e.source) || T.contains(e.range); });
  const auto members = T.members();
  c.continues = std::all_of(members.begin(), members.end(), [&](VertexId v) {
    return sources_of_le(g, v, budget.saturation_bound).intersects(T);
  });
  std::vector<VertexSet> future;
  for (VertexId v : members) future.push_back(hereditary_closure(g, VertexSet::of(g.vertex_count(), std::vector{v})));
  c.directed = true;
  for (std::size_t a = 0; a < future.size() && c.directed; ++a)
    for (std::size_t b = a + 1; b < future.size() && c.directed; ++b) c.directed = future[a].intersects(future[b]);
  return c;
}

std::vector<MaximalTail> maximal_tails(const KGraph& g, const BudgetConfig& budget) {
  return maximal_tails(g, enumerate_hs_lattice(g, budget), budget);
}

std::vector<MaximalTail> maximal_tails(const KGraph& g, const HSLattice& lattice, const BudgetConfig& budget) {
  std::vector<MaximalTail> out;
  for (const VertexSet& H : lattice.elements) {
    const VertexSet T = H.complement();
    if (T.empty() || !check_tail(g, T, budget).all()) continue;
    out.push_back({T, H});
  }
  std::sort(out.begin(), out.end(), [](const MaximalTail& a, const MaximalTail& b) { return a.members < b.members; });
  return out;
}

std::vector<TailVerdict> aperiodic_tails(const KGraph& g, const BudgetConfig& budget) {
  std::vector<TailVerdict> out;
  for (auto& tail : maximal_tails(g, budget)) {
    const KGraph sub = subgraph(g, tail.complement, SubgraphMode::Remove, budget);
    out.push_back({std::move(tail), aperiodicity(sub, budget)});
  }
  return out;
}

namespace {

Rational pairing(const std::vector<Rational>& t, const IntVector& m) {
  Rational sum;
  for (std::size_t i = 0; i < t.size(); ++i) sum = sum + t[i] * m[i];
  return sum.fractional();
}

}  // namespace

std::vector<PrimIdeal> prim_catalogue(const KGraph& g, const BudgetConfig& budget, const CatalogueOptions& options) {
  std::vector<PrimIdeal> out;
  for (auto& tail : maximal_tails(g, budget)) {
    KGraph sub = subgraph(g, tail.complement, SubgraphMode::Remove, budget);
    EquivalenceOracle oracle(sub, budget);
    PerResult per = per_group(oracle);
    HPerResult h = h_per(oracle, per.group);
    std::vector<Relation> relations;
    for (const auto& [mu, nu] : per.witnesses) {
      if (relations.size() >= options.relation_cap) break;
      if (!h.members.contains(mu.range)) continue;
      relations.push_back({mu, nu, difference(mu.degree, nu.degree), Rational()});
    }
    PeriodicityVerdict verdict = aperiodicity(sub, budget);
    const auto killed = tail.complement.members();
    const std::size_t rank = per.group.rank();
    out.push_back(PrimIdeal{std::move(tail), std::move(sub), std::move(verdict), per.group, per.exact, rank,
                            std::vector<Rational>(g.rank()), killed, std::move(h), std::move(relations)});
  }
  return out;
}

PrimIdeal with_character(const PrimIdeal& ideal, const std::vector<Rational>& t) {
  if (t.size() != static_cast<std::size_t>(ideal.tail_graph.rank()))
    throw Error(ErrorKind::BadDegree, "character has " + std::to_string(t.size()) + " entries, expected " +
                                          std::to_string(ideal.tail_graph.rank()));
  PrimIdeal out = ideal;
  out.sample_character = t;
  for (auto& r : out.relations) r.phase = pairing(t, r.shift);
  return out;
}

std::vector<PrimFlags> classify_prim(const KGraph& g, const std::vector<PrimIdeal>& catalogue,
                                     const HSLattice& lattice, const BudgetConfig& budget) {
  const bool cofinal = lattice.size() == (g.vertex_count() == 0 ? 1 : 2);
  bool strongly = true;
  for (const VertexSet& H : lattice.elements) {
    if (H.size() == g.vertex_count()) continue;
    const KGraph quotient = subgraph(g, H, SubgraphMode::Remove, budget);
    if (aperiodicity(quotient, budget).status != PeriodicityStatus::Aperiodic) {
      strongly = false;
      break;
    }
  }
  std::vector<PrimFlags> out;
  for (const auto& ideal : catalogue) {
    PrimFlags f;
    f.gauge_invariant = ideal.verdict.status == PeriodicityStatus::Aperiodic;
    f.maximal_ideal = std::none_of(catalogue.begin(), catalogue.end(), [&](const PrimIdeal& other) {
      return other.tail.members != ideal.tail.members && other.tail.members.is_subset_of(ideal.tail.members);
    });
    f.cofinal_graph = cofinal;
    f.strongly_aperiodic = strongly;
    out.push_back(f);
  }
  return out;
}

}  // namespace kgraphkit
