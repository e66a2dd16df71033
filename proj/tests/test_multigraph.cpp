#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "regmatch/errors.hpp"
#include "regmatch/multigraph.hpp"
#include "regmatch/rng.hpp"

using namespace regmatch;

TEST_CASE("multigraph construction normalizes and validates") {
  Multigraph g(3, {{2, 0, 1}, {0, 2, 2}, {1, 2, 1}});
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_record_count() == 2);  // {0,2} merged to multiplicity 3
  CHECK(g.multiplicity(0, 2) == 3);
  CHECK(g.multiplicity(2, 0) == 3);
  CHECK(g.degree(2) == 4);
  CHECK(g.neighbor_count(2) == 2);
  CHECK(!g.is_simple());
  CHECK_THROWS_AS(Multigraph(2, {{0, 0, 1}}), InputError);
  CHECK_THROWS_AS(Multigraph(2, {{0, 1, 0}}), InputError);
  CHECK_THROWS_AS(Multigraph(2, {{0, 2, 1}}), InputError);
}

TEST_CASE("degree profile") {
  CHECK(*degree_profile(parse_mel("n 2\n0 1 1")).regular_k == 1);
  auto dtri = fixture("dtri");
  auto p = degree_profile(dtri);
  CHECK(p.min_degree == 4);
  CHECK(p.max_degree == 4);
  CHECK(*p.regular_k == 4);
  // path on three vertices is not regular
  auto path = parse_mel("n 3\n0 1 1\n1 2 1");
  auto pp = degree_profile(path);
  CHECK(pp.min_degree == 1);
  CHECK(pp.max_degree == 2);
  CHECK(!pp.regular_k.has_value());
}

TEST_CASE("graph6 parsing") {
  auto k2 = parse_graph6("A_");
  CHECK(k2.vertex_count() == 2);
  CHECK(k2.has_edge(0, 1));

  auto k3 = parse_graph6("Bw");
  CHECK(k3.vertex_count() == 3);
  CHECK(k3.total_multiplicity() == 3);
  CHECK(k3.has_edge(0, 1));
  CHECK(k3.has_edge(0, 2));
  CHECK(k3.has_edge(1, 2));

  auto e2 = parse_graph6("A?");
  CHECK(e2.vertex_count() == 2);
  CHECK(e2.total_multiplicity() == 0);

  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("B"), ParseError);    // truncated bits
  CHECK_THROWS_AS(parse_graph6("~~~"), ParseError);  // long form rejected
  CHECK_THROWS_AS(parse_graph6("A\x1f"), ParseError);
  try {
    parse_graph6("B");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 1);
  }
}

TEST_CASE("graph6 round trip on random simple graphs") {
  SeededRng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = testutil::random_simple_graph(rng, 1 + rng.below(12), 40);
    auto back = parse_graph6(to_graph6(g));
    CHECK(back.edges() == g.edges());
    CHECK(back.vertex_count() == g.vertex_count());
  }
}

TEST_CASE("MEL parsing") {
  auto four = parse_mel("n 2\n0 1 4\n");
  CHECK(four.vertex_count() == 2);
  CHECK(four.multiplicity(0, 1) == 4);
  CHECK(*degree_profile(four).regular_k == 4);

  auto dtri = parse_mel("n 3\n0 1 2\n0 2 2\n1 2 2\n");
  CHECK(*degree_profile(dtri).regular_k == 4);

  CHECK_THROWS_AS(parse_mel("n 2\n0 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_mel("n 2\n0 1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_mel("n 2\n0 1 -3\n"), ParseError);
  CHECK_THROWS_AS(parse_mel("0 1 1\n"), ParseError);  // missing header
  CHECK_THROWS_AS(parse_mel("n 2\n0 1\n"), ParseError);

  // comments and duplicate merging
  auto merged = parse_mel("# doubled pair\nn 3\n0 1 1\n1 0 2  # tail\n");
  CHECK(merged.multiplicity(0, 1) == 3);
}

TEST_CASE("MEL round trip preserves edge records") {
  SeededRng rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = testutil::random_multigraph(rng, 10, 4);
    auto back = parse_mel(serialize_mel(g));
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.edges() == g.edges());
  }
}

TEST_CASE("degree sum equals twice the total multiplicity") {
  SeededRng rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = testutil::random_multigraph(rng, 12, 5);
    long long sum = 0;
    for (int v = 0; v < g.vertex_count(); ++v) sum += g.degree(v);
    CHECK(sum == 2LL * g.total_multiplicity());
    CHECK(sum % 2 == 0);
  }
}

TEST_CASE("random regular generator") {
  // unique simple 3-regular graph on 4 vertices
  for (std::uint64_t seed : {0ULL, 1ULL, 42ULL}) {
    auto g = gen_random_regular(4, 3, true, seed);
    CHECK(g.total_multiplicity() == 6);
    for (int u = 0; u < 4; ++u)
      for (int v = u + 1; v < 4; ++v) CHECK(g.has_edge(u, v));
  }

  CHECK_THROWS_AS(gen_random_regular(3, 3, false, 1), InputError);
  CHECK_THROWS_AS(gen_random_regular(4, 4, true, 1), InputError);
  CHECK_THROWS_AS(gen_random_regular(1, 2, false, 1), InputError);  // loops only

  auto g = gen_random_regular(8, 4, false, 7);
  CHECK(*degree_profile(g).regular_k == 4);

  // deterministic for a fixed seed, simple flag respected
  SeededRng rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 * (3 + rng.below(4));
    const int k = 1 + rng.below(4);
    const std::uint64_t seed = rng.next();
    auto a = gen_random_regular(n, k, true, seed);
    auto b = gen_random_regular(n, k, true, seed);
    CHECK(a.edges() == b.edges());
    CHECK(a.is_simple());
    CHECK(*degree_profile(a).regular_k == k);
    auto c = gen_random_regular(n, k, false, seed);
    CHECK(*degree_profile(c).regular_k == k);
  }
}

TEST_CASE("fixtures") {
  auto qt4 = fixture("qt4");
  CHECK(qt4.vertex_count() == 14);
  CHECK(*degree_profile(qt4).regular_k == 4);
  CHECK(!qt4.is_simple());

  auto penta5 = fixture("penta5");
  CHECK(penta5.vertex_count() == 14);
  CHECK(*degree_profile(penta5).regular_k == 5);
  CHECK(!penta5.is_simple());

  auto petersen = fixture("petersen");
  CHECK(petersen.vertex_count() == 10);
  CHECK(petersen.is_simple());
  CHECK(*degree_profile(petersen).regular_k == 3);

  auto dtri = fixture("dtri");
  CHECK(dtri.vertex_count() == 3);
  CHECK(*degree_profile(dtri).regular_k == 4);

  CHECK_THROWS_AS(fixture("nope"), InputError);
}

TEST_CASE("connected components and induced subgraphs") {
  auto two = parse_mel("n 6\n0 1 1\n1 2 1\n4 5 2\n");
  auto comps = connected_components(two);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == VertexSet{0, 1, 2});
  CHECK(comps[1] == VertexSet{3});
  CHECK(comps[2] == VertexSet{4, 5});

  std::vector<int> old_of_new;
  auto sub = two.induced({4, 5}, &old_of_new);
  CHECK(sub.vertex_count() == 2);
  CHECK(sub.multiplicity(0, 1) == 2);
  CHECK(old_of_new == std::vector<int>{4, 5});
}
