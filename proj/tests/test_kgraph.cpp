#include <array>

#include "doctest.h"
#include "kgraphkit/error.hpp"
#include "kgraphkit/kgraph.hpp"
#include "support.hpp"

using namespace kgraphkit;
using namespace kgraphkit::testing;

namespace {

ErrorKind build_error(const KGraphSpec& spec) {
  try {
    KGraph::build(spec);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected build to throw");
  return ErrorKind::ParseError;
}

// Walks of the given length with range v in a 1-graph.
std::size_t count_walks(const KGraph& g, VertexId v, int length) {
  if (length == 0) return 1;
  std::size_t n = 0;
  for (EdgeId e : g.edges_at(v, 0)) n += count_walks(g, g.edge(e).source, length - 1);
  return n;
}

}  // namespace

TEST_CASE("build accepts the basic fixtures") {
  CHECK(single_loop().edge_count() == 1);
  KGraph omega = omega_graph(2, Degree{1, 1});
  CHECK(omega.vertex_count() == 4);
  CHECK(omega.edge_count() == 4);
  CHECK(omega.squares().size() == 1);
}

TEST_CASE("build reports structural violations") {
  KGraphSpec omega = omega_graph(2, Degree{1, 1}).to_spec();

  KGraphSpec missing = omega;
  missing.squares.clear();
  CHECK(build_error(missing) == ErrorKind::MissingSquare);

  KGraphSpec duplicate = omega;
  duplicate.squares.push_back(duplicate.squares.front());
  CHECK(build_error(duplicate) == ErrorKind::DuplicateSquare);

  KGraphSpec dangling = omega;
  dangling.edges.front().source = "nowhere";
  CHECK(build_error(dangling) == ErrorKind::DanglingReference);

  KGraphSpec color = omega;
  color.edges.front().color = 3;
  CHECK(build_error(color) == ErrorKind::BadColor);

  KGraphSpec dup_vertex = omega;
  dup_vertex.vertices.push_back(dup_vertex.vertices.front());
  CHECK(build_error(dup_vertex) == ErrorKind::DuplicateId);

  KGraphSpec malformed = omega;
  std::swap(malformed.squares.front().f, malformed.squares.front().g);
  CHECK(build_error(malformed) == ErrorKind::MalformedSquare);
}

TEST_CASE("associativity violations are detected") {
  // One vertex, one loop per colour: the unique squares are associative.
  const std::array<KGraph, 3> loops{single_loop(), single_loop(), single_loop()};
  KGraph cube = product_1graphs(loops);
  CHECK(cube.squares().size() == 3);

  // Two loops per colour; the 1-3 and 2-3 squares are chosen so that the
  // two sorting orders of a descending triple disagree.
  SpecBuilder b(3);
  b.vertex("v");
  for (int c = 1; c <= 3; ++c)
    for (const char* s : {"a", "b"}) b.edge(std::string(s) + std::to_string(c), c, "v", "v");
  for (const char* x : {"a", "b"})
    for (const char* y : {"a", "b"})
      b.square(std::string(x) + "1", std::string(y) + "2", std::string(y) + "2", std::string(x) + "1");
  b.square("a1", "a3", "b3", "b1").square("a1", "b3", "b3", "a1");
  b.square("b1", "a3", "a3", "a1").square("b1", "b3", "a3", "b1");
  b.square("a2", "a3", "a3", "b2").square("a2", "b3", "a3", "a2");
  b.square("b2", "a3", "b3", "b2").square("b2", "b3", "b3", "a2");
  try {
    b.build();
    FAIL("expected AssociativityViolation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::AssociativityViolation);
  }

  BuildOptions tight;
  tight.associativity_cap = 2;
  try {
    KGraph::build(cube.to_spec(), tight);
    CHECK(true);
  } catch (const Error&) {
    FAIL("one triple should fit under a cap of two");
  }
}

TEST_CASE("omega_graph shapes") {
  KGraph line = omega_graph(1, Degree{2});
  CHECK(line.vertex_count() == 3);
  CHECK(line.edge_count() == 2);
  CHECK(line.squares().empty());
  KGraph cube = omega_graph(3, Degree{1, 1, 1});
  CHECK(cube.vertex_count() == 8);
  CHECK(cube.edge_count() == 12);
  CHECK(cube.squares().size() == 6);
}

TEST_CASE("paths_of_degree") {
  KGraph omega = omega_graph(2, Degree{1, 1});
  CHECK(paths_of_degree(omega, Degree{1, 1}, omega.vertex("(0,0)")).size() == 1);
  CHECK(paths_of_degree(omega, Degree{1, 1}).size() == 1);
  CHECK(paths_of_degree(omega, Degree{1, 0}).size() == 2);

  auto fff = paths_of_degree(single_loop(), Degree{3});
  REQUIRE(fff.size() == 1);
  CHECK(fff[0].edges.size() == 3);

  KGraph cyc = two_cycle();
  auto ab = paths_of_degree(cyc, Degree{2}, cyc.vertex("u"));
  REQUIRE(ab.size() == 1);
  CHECK(describe(cyc, ab[0]) == "a b");

  KGraph loops = two_loop_vertex();
  for (int n = 0; n <= 5; ++n)
    CHECK(paths_of_degree(loops, Degree{n}).size() == count_walks(loops, 0, n));
}

TEST_CASE("compose and factorize") {
  KGraph omega = omega_graph(2, Degree{1, 1});
  const VertexId origin = omega.vertex("(0,0)");
  Path id = vertex_path(omega, origin);
  Path full = paths_of_degree(omega, Degree{1, 1}, origin).front();
  CHECK(compose(omega, id, full) == full);

  Path e1 = edge_path(omega, *omega.find_edge("c1(0,0)"));
  Path e2_after = edge_path(omega, *omega.find_edge("c2(1,0)"));
  Path e2 = edge_path(omega, *omega.find_edge("c2(0,0)"));
  Path e1_after = edge_path(omega, *omega.find_edge("c1(0,1)"));
  CHECK(compose(omega, e1, e2_after) == compose(omega, e2, e1_after));

  auto [head, tail] = factorize(omega, full, Degree{0, 1});
  CHECK(head == e2);
  CHECK(tail == e1_after);
  CHECK(factorize(omega, full, Degree{0, 0}).first == id);
  CHECK(factorize(omega, full, Degree{1, 1}).second == vertex_path(omega, omega.vertex("(1,1)")));
  CHECK_THROWS_AS(factorize(omega, e1, Degree{0, 1}), Error);

  KGraph cyc = two_cycle();
  Path a = edge_path(cyc, *cyc.find_edge("a"));
  Path b = edge_path(cyc, *cyc.find_edge("b"));
  Path ab = compose(cyc, a, b);
  CHECK(ab.degree == Degree{2});
  CHECK(ab.range == cyc.vertex("u"));
  CHECK(ab.source == cyc.vertex("u"));
  CHECK_THROWS_AS(compose(cyc, a, a), Error);
}

TEST_CASE("factorization round trip on the product of loops") {
  KGraph g = product_of_loops();
  for (const Path& lam : paths_up_to(g, 0, Degree{3, 3})) {
    for_each_in_box(Degree::zero(2), lam.degree, [&](const Degree& m) {
      auto [mu, nu] = factorize(g, lam, m);
      CHECK(mu.degree == m);
      CHECK(compose(g, mu, nu) == lam);
    });
  }
}

TEST_CASE("le_paths") {
  KGraph bare = isolated(2);
  auto only = le_paths(bare, 0, Degree{4});
  REQUIRE(only.size() == 1);
  CHECK(only[0].is_vertex());

  KGraph omega = omega_graph(2, Degree{1, 1});
  auto le = le_paths(omega, omega.vertex("(0,1)"), Degree{1, 0});
  REQUIRE(le.size() == 1);
  CHECK(describe(omega, le[0]) == "c1(0,1)");

  KGraph loops = product_of_loops();
  CHECK(le_paths(loops, 0, Degree{2, 1}) == paths_of_degree(loops, Degree{2, 1}, 0));
  CHECK_THROWS_AS(le_paths(omega, 17, Degree{1, 1}), Error);
}

TEST_CASE("check_shape") {
  KGraph omega = omega_graph(2, Degree{1, 1});
  auto report = check_shape(omega);
  CHECK(report.locally_convex);
  std::vector<std::pair<std::string, int>> named;
  for (auto [v, c] : report.sources) named.emplace_back(omega.vertex_name(v), c + 1);
  std::sort(named.begin(), named.end());
  const std::vector<std::pair<std::string, int>> expected{
      {"(0,1)", 2}, {"(1,0)", 1}, {"(1,1)", 1}, {"(1,1)", 2}};
  CHECK(named == expected);
  CHECK(check_shape(two_loop_vertex()).locally_convex);
  CHECK(check_shape(product_of_loops()).sources.empty());

  // A colour-1 edge into a vertex lacking colour 2 at a vertex that has both.
  KGraph bad = SpecBuilder(2)
                   .vertex("v")
                   .vertex("w")
                   .vertex("z")
                   .edge("f", 1, "v", "w")
                   .edge("g", 2, "v", "z")
                   .build();
  CHECK_FALSE(check_shape(bad).locally_convex);
}

TEST_CASE("product_1graphs") {
  KGraph loops = product_of_loops();
  CHECK(loops.vertex_count() == 1);
  CHECK(loops.edge_count() == 2);
  CHECK(loops.squares().size() == 1);

  const std::array<KGraph, 2> mixed{single_loop(), two_cycle()};
  KGraph m = product_1graphs(mixed);
  CHECK(m.vertex_count() == 2);
  CHECK(m.rank() == 2);

  const std::array<KGraph, 1> one{two_cycle()};
  CHECK(product_1graphs(one).to_spec().edges.size() == 2);
  CHECK_THROWS_AS(product_1graphs(std::span<const KGraph>{}), Error);
}
