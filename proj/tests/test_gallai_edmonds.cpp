#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "regmatch/errors.hpp"
#include "regmatch/gallai_edmonds.hpp"
#include "regmatch/oracle.hpp"

using namespace regmatch;

namespace {

Multigraph cycle(int n) {
  std::vector<EdgeRecord> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n, 1});
  return Multigraph(n, std::move(e));
}

}  // namespace

TEST_CASE("decompose on basic shapes") {
  auto ge3 = decompose(cycle(3));
  CHECK(ge3.d == VertexSet{0, 1, 2});
  CHECK(ge3.a.empty());
  CHECK(ge3.c.empty());
  CHECK(ge3.component_count() == 1);

  auto k2 = parse_mel("n 2\n0 1 1");
  auto ge2 = decompose(k2);
  CHECK(ge2.d.empty());
  CHECK(ge2.a.empty());
  CHECK(ge2.c == VertexSet{0, 1});

  auto path = parse_mel("n 3\n0 1 1\n1 2 1");
  auto gep = decompose(path);
  CHECK(gep.d == VertexSet{0, 2});
  CHECK(gep.a == VertexSet{1});
  CHECK(gep.c.empty());
  CHECK(gep.component_count() == 2);
}

TEST_CASE("decompose qt4") {
  auto qt4 = fixture("qt4");
  auto ge = decompose(qt4);
  CHECK(ge.a == VertexSet{0, 1});  // the hubs
  CHECK(ge.c.empty());
  CHECK(ge.component_count() == 4);
  CHECK(ge.nu == 6);
  CHECK(ge.deficiency == 2);
  for (const auto& comp : ge.components) {
    CHECK(comp.vertices.size() == 3);
    CHECK(comp.edges_to_a == 2);
  }
}

TEST_CASE("decompose matches the per-vertex oracle on small graphs") {
  SeededRng rng(202);
  int checked = 0;
  for (int trial = 0; trial < 150; ++trial) {
    auto g = testutil::random_simple_graph(rng, 2 + rng.below(8), 40);
    if (g.simple_support().edge_record_count() > kOracleEdgeBudget) continue;
    auto ge = decompose(g);
    // v in D iff some enumerated maximum matching misses v
    std::vector<char> missed(g.vertex_count(), 0);
    for (const auto& m : enumerate_maximum_matchings(g))
      for (int v = 0; v < g.vertex_count(); ++v)
        if (!m.covers(v)) missed[v] = 1;
    for (int v = 0; v < g.vertex_count(); ++v) {
      const bool in_d = std::binary_search(ge.d.begin(), ge.d.end(), v);
      CHECK(in_d == static_cast<bool>(missed[v]));
    }
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("decompose invariants on random multigraphs") {
  SeededRng rng(303);
  for (int trial = 0; trial < 150; ++trial) {
    auto g = testutil::random_multigraph(rng, 9, 3);
    auto ge = decompose(g);  // throws TheoryViolation when invariants fail
    // partition check
    CHECK(static_cast<int>(ge.d.size() + ge.a.size() + ge.c.size()) ==
          g.vertex_count());
    // A = N(D) \ D
    std::vector<char> in_d(g.vertex_count(), 0);
    for (int v : ge.d) in_d[v] = 1;
    for (int v : ge.a) {
      bool touches_d = false;
      for (const auto& [w, m] : g.neighbors(v)) {
        (void)m;
        if (in_d[w]) touches_d = true;
      }
      CHECK(touches_d);
    }
    for (int v : ge.c) {
      for (const auto& [w, m] : g.neighbors(v)) {
        (void)m;
        CHECK(!in_d[w]);
      }
    }
    CHECK(ge.deficiency == ge.component_count() - static_cast<int>(ge.a.size()));
  }
}

TEST_CASE("factor-critical certification") {
  CHECK(certify_factor_critical(cycle(5)));
  CHECK(certify_factor_critical(cycle(3)));
  CHECK_FALSE(certify_factor_critical(parse_mel("n 2\n0 1 1")));
  CHECK_FALSE(certify_factor_critical(parse_mel("n 3\n0 1 1\n1 2 1")));
  CHECK(certify_factor_critical(testutil::k5_two_doubles_gadget().graph));
  CHECK(certify_factor_critical(testutil::closed_c7_squared()));
  CHECK(certify_factor_critical(testutil::simple_d1_gadget_k5().graph));
  CHECK(certify_factor_critical(testutil::simple_d3_gadget_k5().graph));
}

TEST_CASE("good vertices") {
  auto qt4 = fixture("qt4");
  auto ge = decompose(qt4);
  // each triangle gadget's apex x_i is its only good vertex
  for (const auto& comp : ge.components) {
    CHECK(comp.good.size() == 1);
    CHECK(comp.good.front() == comp.vertices.front());  // x has lowest id
  }

  auto penta5 = fixture("penta5");
  auto gep = decompose(penta5);
  REQUIRE(gep.component_count() == 3);
  // the doubled triangle has no good vertex; the K5 gadgets have four each
  CHECK(good_vertices(penta5, gep.components[0].vertices).empty());
  CHECK(good_vertices(penta5, gep.components[1].vertices).size() == 4);

  // singleton component attached to A has no good vertex
  auto star = parse_mel("n 3\n0 1 1\n0 2 1");
  auto ges = decompose(star);
  for (const auto& comp : ges.components)
    CHECK(comp.good.empty());
}

TEST_CASE("contract on qt4") {
  auto qt4 = fixture("qt4");
  auto ge = decompose(qt4);
  auto cb = contract(qt4, ge, 4);
  CHECK(cb.a_vertices == VertexSet{0, 1});
  CHECK(cb.h.left_count == 2);
  CHECK(cb.h.right_count == 4);
  for (int b = 0; b < 4; ++b) CHECK(cb.b_degree[b] == 2);
  CHECK(cb.w.empty());
  CHECK(cb.u.empty());  // k = 4 never populates U
  CHECK(bipartite_max_matching(cb.h).size() == 2);
}

TEST_CASE("contract on penta5") {
  auto penta5 = fixture("penta5");
  auto ge = decompose(penta5);
  auto cb = contract(penta5, ge, 5);
  CHECK(cb.h.left_count == 1);
  CHECK(cb.h.right_count == 3);
  CHECK(cb.b_degree == std::vector<int>{3, 1, 1});
  CHECK(cb.w.empty());
  CHECK(cb.u == std::vector<int>{0});
  // the degree-3 vertex is the doubled triangle {1,2,3}
  CHECK(ge.components[cb.component_of_b[0]].vertices == VertexSet{1, 2, 3});
}

TEST_CASE("contract on a perfectly matchable graph is empty") {
  auto petersen = fixture("petersen");
  auto ge = decompose(petersen);
  CHECK(ge.d.empty());
  auto cb = contract(petersen, ge, 3);
  CHECK(cb.h.left_count == 0);
  CHECK(cb.h.right_count == 0);
}

TEST_CASE("contract rejects non-regular graphs") {
  auto path = parse_mel("n 3\n0 1 1\n1 2 1");
  auto ge = decompose(path);
  CHECK_THROWS_AS(contract(path, ge, 2), ContractViolation);
}

TEST_CASE("regular deficient graphs satisfy the counting bounds") {
  SeededRng rng(404);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = trial % 2 == 0 ? testutil::random_deficient_4regular(rng)
                            : testutil::random_deficient_5regular(rng);
    const int k = trial % 2 == 0 ? 4 : 5;
    REQUIRE(*degree_profile(g).regular_k == k);
    auto ge = decompose(g);
    REQUIRE(ge.deficiency >= 2);
    CHECK(ge.component_count() >= static_cast<int>(ge.a.size()) + 2);
    for (const auto& comp : ge.components)
      CHECK((comp.edges_to_a - k) % 2 == 0);
    auto cb = contract(g, ge, k);
    // ordering is non-increasing with ties by smallest vertex
    for (std::size_t b = 1; b < cb.b_degree.size(); ++b) {
      CHECK(cb.b_degree[b - 1] >= cb.b_degree[b]);
      if (cb.b_degree[b - 1] == cb.b_degree[b])
        CHECK(ge.components[cb.component_of_b[b - 1]].vertices.front() <
              ge.components[cb.component_of_b[b]].vertices.front());
    }
  }
}
