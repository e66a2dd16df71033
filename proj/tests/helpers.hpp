#ifndef REGMATCH_TESTS_HELPERS_HPP
#define REGMATCH_TESTS_HELPERS_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "regmatch/bipartite.hpp"
#include "regmatch/matching.hpp"
#include "regmatch/multigraph.hpp"
#include "regmatch/rng.hpp"

namespace testutil {

using regmatch::BipartiteGraph;
using regmatch::EdgeRecord;
using regmatch::Multigraph;
using regmatch::SeededRng;

/// Arbitrary small multigraph: n in [0, max_n], random pairs, random
/// multiplicities in [1, max_mult].
inline Multigraph random_multigraph(SeededRng& rng, int max_n, int max_mult) {
  const int n = rng.below(max_n + 1);
  std::vector<EdgeRecord> edges;
  if (n >= 2) {
    const int attempts = rng.below(2 * n + 1);
    for (int i = 0; i < attempts; ++i) {
      const int u = rng.below(n);
      int v = rng.below(n);
      if (u == v) continue;
      edges.push_back({u, v, 1 + rng.below(max_mult)});
    }
  }
  return Multigraph(n, std::move(edges));
}

/// Random simple graph G(n, p~dens) for oracle cross-checks.
inline Multigraph random_simple_graph(SeededRng& rng, int n, int percent) {
  std::vector<EdgeRecord> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.below(100) < percent) edges.push_back({u, v, 1});
  return Multigraph(n, std::move(edges));
}

// ---------------------------------------------------------------------
// Deficient regular families: a hub set A plus factor-critical gadgets
// whose boundary vertices carry "slots" (edges to a hub). Used to exercise
// the decomposition-based pipelines on inputs with deficiency >= 2.

struct Gadget {
  Multigraph graph;
  std::vector<int> slot_vertices;  // one entry per hub edge, repeats allowed
};

inline Gadget triangle_gadget_k4() {  // d_H = 2
  return {Multigraph(3, {{0, 1, 2}, {0, 2, 2}, {1, 2, 1}}), {1, 2}};
}

inline Gadget k5_minus_edge_gadget() {  // simple, d_H = 2
  std::vector<EdgeRecord> e;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (!(i == 3 && j == 4)) e.push_back({i, j, 1});
  return {Multigraph(5, std::move(e)), {3, 4}};
}

inline Gadget k5_minus_two_edges_gadget() {  // simple, d_H = 4 (a W gadget)
  std::vector<EdgeRecord> e;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (!(i == 1 && j == 2) && !(i == 3 && j == 4)) e.push_back({i, j, 1});
  return {Multigraph(5, std::move(e)), {1, 2, 3, 4}};
}

inline Gadget doubled_triangle_gadget_k5() {  // d_H = 3
  return {Multigraph(3, {{0, 1, 2}, {0, 2, 2}, {1, 2, 2}}), {0, 1, 2}};
}

inline Gadget k5_two_doubles_gadget() {  // d_H = 1 (the penta5 gadget)
  std::vector<EdgeRecord> e;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) e.push_back({i, j, 1});
  e.push_back({0, 1, 1});
  e.push_back({2, 3, 1});
  return {Multigraph(5, std::move(e)), {4}};
}

inline Gadget k5_one_double_gadget() {  // d_H = 3
  std::vector<EdgeRecord> e;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) e.push_back({i, j, 1});
  e.push_back({0, 1, 1});
  return {Multigraph(5, std::move(e)), {2, 3, 4}};
}

inline Gadget k5_plain_gadget() {  // d_H = 5 (a W gadget)
  std::vector<EdgeRecord> e;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) e.push_back({i, j, 1});
  return {Multigraph(5, std::move(e)), {0, 1, 2, 3, 4}};
}

inline Gadget simple_d1_gadget_k5() {  // K7 minus {01,02,34,56}; slot at 0
  std::vector<EdgeRecord> e;
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j) {
      if ((i == 0 && (j == 1 || j == 2)) || (i == 3 && j == 4) ||
          (i == 5 && j == 6))
        continue;
      e.push_back({i, j, 1});
    }
  return {Multigraph(7, std::move(e)), {0}};
}

inline Gadget simple_d3_gadget_k5() {  // K7 minus C3(012) and {34},{56}
  std::vector<EdgeRecord> e;
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j) {
      if ((i == 0 && j == 1) || (i == 0 && j == 2) || (i == 1 && j == 2) ||
          (i == 3 && j == 4) || (i == 5 && j == 6))
        continue;
      e.push_back({i, j, 1});
    }
  return {Multigraph(7, std::move(e)), {0, 1, 2}};
}

// k-regular factor-critical graphs used as closed (degree-0) components
inline Multigraph closed_dtri() {
  return Multigraph(3, {{0, 1, 2}, {0, 2, 2}, {1, 2, 2}});
}
inline Multigraph closed_k5() {
  std::vector<EdgeRecord> e;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) e.push_back({i, j, 1});
  return Multigraph(5, std::move(e));
}
inline Multigraph closed_c7_squared() {  // 4-regular circulant C7(1,2)
  std::vector<EdgeRecord> e;
  for (int i = 0; i < 7; ++i) {
    e.push_back({i, (i + 1) % 7, 1});
    e.push_back({i, (i + 2) % 7, 1});
  }
  return Multigraph(7, std::move(e));
}

/// Assembles hubs + gadgets + closed components into one graph. Each
/// gadget's slots are wired to the hub listed in `slot_hub` (one entry per
/// slot, in gadget order). hub_hub_mult adds parallel edges between hubs 0
/// and 1 when there are two hubs.
inline Multigraph assemble_deficient(
    int hubs, int hub_hub_mult, const std::vector<Gadget>& gadgets,
    const std::vector<std::vector<int>>& slot_hub,
    const std::vector<Multigraph>& closed = {}) {
  std::vector<EdgeRecord> edges;
  int base = hubs;
  if (hub_hub_mult > 0) edges.push_back({0, 1, hub_hub_mult});
  for (std::size_t gi = 0; gi < gadgets.size(); ++gi) {
    const Gadget& g = gadgets[gi];
    for (const auto& e : g.graph.edges())
      edges.push_back({base + e.u, base + e.v, e.mult});
    for (std::size_t si = 0; si < g.slot_vertices.size(); ++si)
      edges.push_back({slot_hub[gi][si], base + g.slot_vertices[si], 1});
    base += g.graph.vertex_count();
  }
  for (const Multigraph& comp : closed) {
    for (const auto& e : comp.edges())
      edges.push_back({base + e.u, base + e.v, e.mult});
    base += comp.vertex_count();
  }
  return Multigraph(base, std::move(edges));
}

/// Random 4-regular multigraph with deficiency >= 2 (hub templates).
inline Multigraph random_deficient_4regular(SeededRng& rng) {
  auto pick2 = [&](bool allow_w) {
    const int r = rng.below(allow_w ? 3 : 2);
    if (r == 0) return triangle_gadget_k4();
    if (r == 1) return k5_minus_edge_gadget();
    return k5_minus_two_edges_gadget();
  };
  switch (rng.below(3)) {
    case 0: {  // qt4 shape: two hubs, four d2 gadgets
      std::vector<Gadget> gs = {pick2(false), pick2(false), pick2(false),
                                pick2(false)};
      return assemble_deficient(2, 0, gs,
                                {{0, 0}, {0, 0}, {1, 1}, {1, 1}});
    }
    case 1: {  // one gadget split across the two hubs
      std::vector<Gadget> gs = {pick2(false), pick2(false), pick2(false),
                                pick2(false)};
      return assemble_deficient(2, 0, gs,
                                {{0, 1}, {0, 0}, {1, 1}, {0, 1}});
    }
    default: {  // W gadget present: hubs 0 and 1 both feed it
      std::vector<Gadget> gs = {k5_minus_two_edges_gadget(), pick2(false),
                                pick2(false)};
      return assemble_deficient(2, 0, gs, {{0, 0, 1, 1}, {0, 0}, {1, 1}},
                                {closed_dtri()});
    }
  }
}

/// Random 5-regular multigraph with deficiency >= 2.
inline Multigraph random_deficient_5regular(SeededRng& rng) {
  auto pick3 = [&] {
    return rng.below(2) == 0 ? doubled_triangle_gadget_k5()
                             : k5_one_double_gadget();
  };
  switch (rng.below(4)) {
    case 0: {  // penta5 shape
      std::vector<Gadget> gs = {pick3(), k5_two_doubles_gadget(),
                                k5_two_doubles_gadget()};
      return assemble_deficient(1, 0, gs, {{0, 0, 0}, {0}, {0}});
    }
    case 1: {  // five d1 gadgets on one hub
      std::vector<Gadget> gs(5, k5_two_doubles_gadget());
      return assemble_deficient(1, 0, gs, {{0}, {0}, {0}, {0}, {0}});
    }
    case 2: {  // two hubs, one W gadget
      std::vector<Gadget> gs = {k5_plain_gadget(), pick3(),
                                k5_two_doubles_gadget(),
                                k5_two_doubles_gadget()};
      // hub0: 3+1+1 = 5, hub1: 2+3 = 5
      return assemble_deficient(2, 0, gs,
                                {{0, 0, 0, 1, 1}, {1, 1, 1}, {0}, {0}});
    }
    default: {  // parallel hub pair
      std::vector<Gadget> gs = {k5_two_doubles_gadget(),
                                k5_two_doubles_gadget(),
                                k5_two_doubles_gadget(),
                                k5_two_doubles_gadget()};
      return assemble_deficient(2, 3, gs, {{0}, {0}, {1}, {1}});
    }
  }
}

/// Simple 5-regular graph with deficiency >= 2 (hub + K7-based gadgets).
inline Multigraph simple_deficient_5regular(SeededRng& rng) {
  if (rng.below(2) == 0) {
    std::vector<Gadget> gs = {simple_d3_gadget_k5(), simple_d1_gadget_k5(),
                              simple_d1_gadget_k5()};
    return assemble_deficient(1, 0, gs, {{0, 0, 0}, {0}, {0}});
  }
  std::vector<Gadget> gs(5, simple_d1_gadget_k5());
  return assemble_deficient(1, 0, gs, {{0}, {0}, {0}, {0}, {0}});
}

/// Simple 4-regular graph with deficiency >= 2.
inline Multigraph simple_deficient_4regular(SeededRng& rng) {
  switch (rng.below(3)) {
    case 0:
      return assemble_deficient(0, 0, {}, {}, {closed_k5(), closed_k5()});
    case 1:
      return assemble_deficient(0, 0, {}, {},
                                {closed_k5(), closed_c7_squared()});
    default: {
      std::vector<Gadget> gs = {k5_minus_edge_gadget(), k5_minus_edge_gadget(),
                                k5_minus_edge_gadget(), k5_minus_edge_gadget()};
      return assemble_deficient(2, 0, gs, {{0, 0}, {0, 0}, {1, 1}, {1, 1}});
    }
  }
}

/// 7-regular multigraph on 14 vertices whose best-effort construction is
/// certain to fail: at least one triple-edge triangle stays unmatched and
/// carries no good vertex.
inline Multigraph seven_regular_witness() {
  std::vector<EdgeRecord> e;
  for (int base : {1, 4}) {  // two triangles with all pairs tripled
    e.push_back({base, base + 1, 3});
    e.push_back({base, base + 2, 3});
    e.push_back({base + 1, base + 2, 3});
    for (int i = 0; i < 3; ++i) e.push_back({0, base + i, 1});
  }
  for (int i = 7; i < 14; ++i)  // K7 plus three doubled edges
    for (int j = i + 1; j < 14; ++j) e.push_back({i, j, 1});
  e.push_back({8, 9, 1});
  e.push_back({10, 11, 1});
  e.push_back({12, 13, 1});
  e.push_back({0, 7, 1});
  return Multigraph(14, std::move(e));
}

// ---------------------------------------------------------------------
// Random bipartite instances for the packing subroutines. All generators
// retry until nu(H) = |A| so the A-saturation precondition holds.

struct BipartiteInstance {
  BipartiteGraph h;
  std::vector<int> w;
  std::vector<int> u;
};

/// Random bipartite graph where every maximum matching covers A. W is the
/// set of B vertices with weighted degree >= Delta(A), which makes
/// delta(W) >= Delta(A) hold by construction.
inline BipartiteInstance random_saturating_instance(SeededRng& rng,
                                                    int max_left,
                                                    int max_right,
                                                    bool allow_mult) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const int left = 1 + rng.below(max_left);
    const int right = left + rng.below(max_right - left + 1);
    std::vector<EdgeRecord> edges;
    for (int a = 0; a < left; ++a)
      for (int b = 0; b < right; ++b)
        if (rng.below(100) < 55)
          edges.push_back({a, b, allow_mult ? 1 + rng.below(2) : 1});
    BipartiteGraph h = BipartiteGraph::make(left, right, edges);
    if (regmatch::bipartite_max_matching(h).size() != left) continue;
    int delta_a = 0;
    for (int a = 0; a < left; ++a) delta_a = std::max(delta_a, h.left_degree(a));
    BipartiteInstance inst;
    inst.h = std::move(h);
    for (int b = 0; b < right; ++b)
      if (inst.h.right_degree(b) >= delta_a) inst.w.push_back(b);
    return inst;
  }
  throw std::runtime_error("random_saturating_instance: no instance found");
}

/// Instance for the refined packing: W as above, U a random subset of the
/// B vertices with ceil(Delta(A)/2) <= d(b) < Delta(A).
inline BipartiteInstance random_refined_instance(SeededRng& rng, int max_left,
                                                 int max_right,
                                                 bool allow_mult) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    BipartiteInstance inst =
        random_saturating_instance(rng, max_left, max_right, allow_mult);
    int delta_a = 0;
    for (int a = 0; a < inst.h.left_count; ++a)
      delta_a = std::max(delta_a, inst.h.left_degree(a));
    for (int b = 0; b < inst.h.right_count; ++b) {
      const int d = inst.h.right_degree(b);
      if (d < delta_a && 2 * d >= delta_a && rng.below(100) < 70)
        inst.u.push_back(b);
    }
    return inst;
  }
  throw std::runtime_error("random_refined_instance: no instance found");
}

}  // namespace testutil

#endif
