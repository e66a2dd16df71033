#include "regmatch/construct.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "regmatch/errors.hpp"
#include "regmatch/oracle.hpp"

namespace regmatch {

std::string regime_name(Regime r) {
  switch (r) {
    case Regime::deficiency_le1: return "deficiency<=1";
    case Regime::simple_k: return "simple-k";
    case Regime::multi3: return "multi-3";
    case Regime::multi4: return "multi-4";
    case Regime::multi5: return "multi-5";
    case Regime::best_effort: return "best-effort";
  }
  return "unknown";
}

bool verify_property(const Multigraph& g, const Matching& m) {
  if (!is_valid_matching(g, m))
    throw ContractViolation("verify_property: input is not a matching of g");
  if (!is_maximum(g, m)) return false;
  const VertexSet exposed = m.unsaturated();
  for (std::size_t i = 0; i < exposed.size(); ++i) {
    for (std::size_t j = i + 1; j < exposed.size(); ++j) {
      // shared neighbor test over distinct neighborhoods
      const auto& nu = g.neighbors(exposed[i]);
      const auto& nv = g.neighbors(exposed[j]);
      std::size_t p = 0, q = 0;
      while (p < nu.size() && q < nv.size()) {
        if (nu[p].first == nv[q].first) return false;
        if (nu[p].first < nv[q].first)
          ++p;
        else
          ++q;
      }
    }
  }
  return true;
}

namespace {

// Lowest-id vertex of the component adjacent to a; the deterministic
// realization of a contracted H-edge.
int lift_endpoint(const Multigraph& g, const ComponentInfo& comp, int a) {
  for (const int v : comp.vertices)
    if (g.has_edge(a, v)) return v;
  throw TheoryViolation("H-edge has no realization in the component",
                        "a=" + std::to_string(a));
}

ConstructionReport report_shell(const Multigraph& g, int k,
                                const GallaiEdmonds& ge) {
  ConstructionReport r;
  r.n = g.vertex_count();
  r.k = k;
  r.simple = g.is_simple();
  r.nu = ge.nu;
  r.deficiency = ge.deficiency;
  r.d_size = static_cast<int>(ge.d.size());
  r.a_size = static_cast<int>(ge.a.size());
  r.c_size = static_cast<int>(ge.c.size());
  r.component_count = ge.component_count();
  r.component_avoid.assign(ge.component_count(), -1);
  return r;
}

ConstructionReport trivial_report(const Multigraph& g, int k) {
  const GallaiEdmonds ge = decompose(g);
  ConstructionReport r = report_shell(g, k, ge);
  r.regime = Regime::deficiency_le1;
  r.matching = maximum_matching(g);
  r.unsaturated = r.matching.unsaturated();
  r.property_holds = verify_property(g, r.matching);
  if (!r.property_holds)
    throw TheoryViolation(
        "a maximum matching with at most one exposed vertex must satisfy "
        "the property",
        "deficiency=" + std::to_string(ge.deficiency));
  return r;
}

// Shared saturate-W pipeline: matched components avoid the lifted matched
// endpoint, unmatched components avoid a good vertex. The simple case
// guarantees |Q_i| > k for unmatched components, the 4-regular case
// d_H = 2 and |Q_i| >= 3; both are asserted, not assumed.
ConstructionReport saturating_pipeline(const Multigraph& g, int k,
                                       Regime regime) {
  const GallaiEdmonds ge = decompose(g);
  if (ge.deficiency <= 1) return trivial_report(g, k);
  if (k == 0) {
    // edgeless graph: the empty matching is maximum and nothing shares
    // a neighbor
    ConstructionReport r = report_shell(g, 0, ge);
    r.regime = regime;
    r.matching = Matching(g.vertex_count());
    r.unsaturated = r.matching.unsaturated();
    r.property_holds = verify_property(g, r.matching);
    return r;
  }
  ConstructionReport r = report_shell(g, k, ge);
  r.regime = regime;

  ConstructionPlan plan;
  plan.cb = contract(g, ge, k);
  const ContractedBipartite& cb = plan.cb;
  plan.h_matching = saturate_w(cb.h, cb.w);
  plan.avoid_of_component.assign(ge.component_count(), -1);

  for (int b = 0; b < cb.h.right_count; ++b) {
    const int ci = cb.component_of_b[b];
    const ComponentInfo& comp = ge.components[ci];
    const int matched_a = plan.h_matching.left_of_right[b];
    if (matched_a >= 0) {
      plan.avoid_of_component[ci] =
          lift_endpoint(g, comp, cb.a_vertices[matched_a]);
      continue;
    }
    if (cb.b_degree[b] >= k)
      throw TheoryViolation("unmatched component has degree >= k",
                            "b=" + std::to_string(b));
    if (regime == Regime::multi4) {
      if (cb.b_degree[b] % 2 != 0)
        throw TheoryViolation(
            "parity violation: odd |[Q_i,A]| in a 4-regular graph",
            "d_H=" + std::to_string(cb.b_degree[b]));
      if (static_cast<int>(comp.vertices.size()) < 3 && cb.b_degree[b] > 0)
        throw TheoryViolation(
            "unmatched component of a 4-regular graph has fewer than "
            "three vertices",
            "size=" + std::to_string(comp.vertices.size()));
    }
    if (regime == Regime::simple_k &&
        static_cast<int>(comp.vertices.size()) <= k)
      throw TheoryViolation(
          "simple-graph counting failed: unmatched component with "
          "|Q_i| <= k",
          "|Q_i|=" + std::to_string(comp.vertices.size()) +
              " k=" + std::to_string(k) +
              " d_H=" + std::to_string(cb.b_degree[b]));
    if (comp.good.empty())
      throw TheoryViolation(
          "unmatched component has no good vertex",
          "component size=" + std::to_string(comp.vertices.size()) +
              " d_H=" + std::to_string(cb.b_degree[b]));
    plan.avoid_of_component[ci] = comp.good.front();
    plan.x.push_back(comp.good.front());
  }
  std::sort(plan.x.begin(), plan.x.end());

  r.matching = assemble(g, ge, plan);
  r.unsaturated = r.matching.unsaturated();
  r.component_avoid = plan.avoid_of_component;
  r.property_holds = verify_property(g, r.matching);
  if (!r.property_holds)
    throw TheoryViolation(
        "constructed matching fails the shared-neighbor property",
        "regime=" + regime_name(regime));
  return r;
}

}  // namespace

Matching assemble(const Multigraph& g, const GallaiEdmonds& ge,
                  const ConstructionPlan& plan) {
  if (static_cast<int>(plan.avoid_of_component.size()) != ge.component_count())
    throw ContractViolation("plan has the wrong number of avoid entries");

  std::vector<std::pair<int, int>> edges;

  // H-matching lifted to G
  const ContractedBipartite& cb = plan.cb;
  for (int b = 0; b < cb.h.right_count; ++b) {
    const int a_idx = plan.h_matching.left_of_right.empty()
                          ? -1
                          : plan.h_matching.left_of_right[b];
    if (a_idx < 0) continue;
    const int ci = cb.component_of_b[b];
    const int a = cb.a_vertices[a_idx];
    const int v = lift_endpoint(g, ge.components[ci], a);
    if (plan.avoid_of_component[ci] != v)
      throw ContractViolation(
          "avoid vertex of a matched component must be the lifted endpoint");
    edges.emplace_back(a, v);
  }

  // perfect matching of G[C]
  if (!ge.c.empty()) {
    std::vector<int> old_of_new;
    const Multigraph gc = g.induced(ge.c, &old_of_new);
    const auto pm = perfect_matching(gc);
    if (!pm)
      throw TheoryViolation("G[C] lost its perfect matching",
                            "C size=" + std::to_string(ge.c.size()));
    for (const auto& [u, v] : pm->pairs())
      edges.emplace_back(old_of_new[u], old_of_new[v]);
  }

  // near-perfect matching of every component, avoiding the designated vertex
  for (int ci = 0; ci < ge.component_count(); ++ci) {
    const ComponentInfo& comp = ge.components[ci];
    const int avoid = plan.avoid_of_component[ci];
    const auto it =
        std::lower_bound(comp.vertices.begin(), comp.vertices.end(), avoid);
    if (it == comp.vertices.end() || *it != avoid)
      throw ContractViolation("avoid vertex lies outside its component");
    std::vector<int> old_of_new;
    const Multigraph q = g.induced(comp.vertices, &old_of_new);
    const int local_avoid =
        static_cast<int>(it - comp.vertices.begin());
    const Matching mi = near_perfect_avoiding(q, local_avoid);
    for (const auto& [u, v] : mi.pairs())
      edges.emplace_back(old_of_new[u], old_of_new[v]);
  }

  Matching m_star = Matching::from_pairs(g, std::move(edges));

  const int expected = static_cast<int>(ge.c.size()) / 2 +
                       (static_cast<int>(ge.d.size()) - ge.component_count()) / 2 +
                       static_cast<int>(ge.a.size());
  if (m_star.size() != expected || m_star.size() != ge.nu)
    throw TheoryViolation(
        "assembled matching has the wrong size",
        "size=" + std::to_string(m_star.size()) +
            " expected=" + std::to_string(expected) +
            " nu=" + std::to_string(ge.nu));

  // the restriction to [A, D] must match A into distinct components
  {
    std::vector<int> comp_of(g.vertex_count(), -1);
    for (int ci = 0; ci < ge.component_count(); ++ci)
      for (const int v : ge.components[ci].vertices) comp_of[v] = ci;
    std::vector<char> in_a(g.vertex_count(), 0), used(ge.component_count(), 0);
    for (const int a : ge.a) in_a[a] = 1;
    int matched_a = 0;
    for (const auto& [u, v] : m_star.pairs()) {
      const int a = in_a[u] ? u : (in_a[v] ? v : -1);
      if (a == -1) continue;
      const int other = a == u ? v : u;
      if (comp_of[other] < 0) continue;
      ++matched_a;
      if (used[comp_of[other]])
        throw TheoryViolation("two A vertices matched into one component",
                              "component=" + std::to_string(comp_of[other]));
      used[comp_of[other]] = 1;
    }
    if (matched_a != static_cast<int>(ge.a.size()))
      throw TheoryViolation("assembled matching does not match all of A into D",
                            "matched=" + std::to_string(matched_a));
  }
  return m_star;
}

ConstructionReport construct_simple(const Multigraph& g, int k) {
  if (!g.is_simple())
    throw ContractViolation("construct_simple requires a simple graph");
  const auto profile = degree_profile(g);
  if (!profile.regular_k || *profile.regular_k != k)
    throw ContractViolation("construct_simple: graph is not k-regular");
  return saturating_pipeline(g, k, Regime::simple_k);
}

ConstructionReport construct_4regular(const Multigraph& g) {
  const auto profile = degree_profile(g);
  if (!profile.regular_k || *profile.regular_k != 4)
    throw ContractViolation("construct_4regular: graph is not 4-regular");
  return saturating_pipeline(g, 4, Regime::multi4);
}

ConstructionReport construct_5regular(const Multigraph& g) {
  const auto profile = degree_profile(g);
  if (!profile.regular_k || *profile.regular_k != 5)
    throw ContractViolation("construct_5regular: graph is not 5-regular");

  const GallaiEdmonds ge = decompose(g);
  if (ge.deficiency <= 1) return trivial_report(g, 5);
  ConstructionReport r = report_shell(g, 5, ge);
  r.regime = Regime::multi5;

  ConstructionPlan plan;
  plan.cb = contract(g, ge, 5);
  const ContractedBipartite& cb = plan.cb;

  const Packing s = refined_packing(cb.h, cb.w, cb.u);
  auto [m, m_prime] = split_packing(s, cb.h, cb.w);
  plan.h_matching = std::move(m);
  plan.h_matching_aux = std::move(m_prime);
  plan.avoid_of_component.assign(ge.component_count(), -1);

  for (int b = 0; b < cb.h.right_count; ++b) {
    const int ci = cb.component_of_b[b];
    const ComponentInfo& comp = ge.components[ci];
    const int matched_a = plan.h_matching.left_of_right[b];
    if (matched_a >= 0) {
      plan.avoid_of_component[ci] =
          lift_endpoint(g, comp, cb.a_vertices[matched_a]);
      continue;
    }
    if (cb.b_degree[b] >= 5)
      throw TheoryViolation("W component left unmatched by M",
                            "b=" + std::to_string(b));
    if (!comp.good.empty()) {
      plan.avoid_of_component[ci] = comp.good.front();
      plan.x.push_back(comp.good.front());
      continue;
    }
    // no good vertex: this must be a three-vertex component with exactly
    // three edges into A, one per vertex, and M' must cover it
    if (cb.b_degree[b] != 3 || static_cast<int>(comp.vertices.size()) != 3)
      throw TheoryViolation(
          "component without a good vertex is not a (|Q|=3, d_H=3) "
          "component",
          "|Q|=" + std::to_string(comp.vertices.size()) +
              " d_H=" + std::to_string(cb.b_degree[b]));
    for (const int v : comp.vertices) {
      int outside = 0, outside_neighbors = 0;
      for (const auto& [w2, mult] : g.neighbors(v)) {
        if (std::binary_search(comp.vertices.begin(), comp.vertices.end(), w2))
          continue;
        outside += mult;
        ++outside_neighbors;
      }
      if (outside != 1 || outside_neighbors != 1)
        throw TheoryViolation(
            "vertex of a good-vertex-free component lacks a unique "
            "A-neighbor",
            "v=" + std::to_string(v) + " outside=" + std::to_string(outside));
    }
    const int aux_a = plan.h_matching_aux.left_of_right[b];
    if (aux_a < 0)
      throw TheoryViolation(
          "M-unsaturated U component is not covered by M'",
          "b=" + std::to_string(b));
    const int v = lift_endpoint(g, comp, cb.a_vertices[aux_a]);
    plan.avoid_of_component[ci] = v;
    plan.x.push_back(v);
  }
  std::sort(plan.x.begin(), plan.x.end());

  r.matching = assemble(g, ge, plan);
  r.unsaturated = r.matching.unsaturated();
  r.component_avoid = plan.avoid_of_component;
  r.property_holds = verify_property(g, r.matching);
  if (!r.property_holds)
    throw TheoryViolation(
        "two designated vertices share a neighbor after assembly",
        "regime=multi-5");
  return r;
}

ConstructionReport construct(const Multigraph& g) {
  const auto profile = degree_profile(g);
  if (!profile.regular_k)
    throw InputError("construct requires a regular graph (degrees range " +
                     std::to_string(profile.min_degree) + ".." +
                     std::to_string(profile.max_degree) + ")");
  const int k = *profile.regular_k;

  const int nu = matching_number(g);
  const int deficiency = g.vertex_count() - 2 * nu;
  if (deficiency <= 1) return trivial_report(g, k);

  if (g.is_simple()) return construct_simple(g, k);
  if (k == 4) return construct_4regular(g);
  if (k == 5) return construct_5regular(g);
  if (k <= 3) {
    // the simple-pipeline logic still applies: components with d_H < k
    // have good vertices when k <= 3; fall back to the oracle should the
    // attempt fail on a small graph
    try {
      return saturating_pipeline(g, k, Regime::multi3);
    } catch (const TheoryViolation&) {
      if (g.simple_support().edge_record_count() > kOracleEdgeBudget) throw;
      const OracleVerdict verdict = exists_good_maximum_matching(g);
      const GallaiEdmonds ge = decompose(g);
      ConstructionReport r = report_shell(g, k, ge);
      r.regime = Regime::multi3;
      if (verdict.good_exists) {
        r.matching = *verdict.witness;
        r.property_holds = true;
      } else {
        r.matching = maximum_matching(g);
        r.property_holds = false;
      }
      r.unsaturated = r.matching.unsaturated();
      return r;
    }
  }
  if (k == 6)
    throw UnsupportedRegime(
        "6-regular multigraphs with deficiency >= 2 are not supported");

  // k >= 7: attempt the saturating pipeline; counterexamples exist in this
  // regime, so a failure is reported as unsupported rather than as a
  // theory violation, and it does not certify that no good matching exists
  try {
    return saturating_pipeline(g, k, Regime::best_effort);
  } catch (const TheoryViolation& e) {
    throw UnsupportedRegime(
        "best-effort attempt failed for a " + std::to_string(k) +
        "-regular multigraph (" + e.what() +
        "); this does not certify that no good maximum matching exists");
  }
}

}  // namespace regmatch
