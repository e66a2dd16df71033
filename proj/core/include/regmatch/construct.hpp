#ifndef REGMATCH_CONSTRUCT_HPP
#define REGMATCH_CONSTRUCT_HPP

#include <string>
#include <vector>

#include "regmatch/gallai_edmonds.hpp"
#include "regmatch/matching.hpp"
#include "regmatch/multigraph.hpp"
#include "regmatch/packing.hpp"

namespace regmatch {

enum class Regime {
  deficiency_le1,  // at most one exposed vertex, any maximum matching works
  simple_k,        // simple k-regular pipeline
  multi3,          // multigraph k <= 3, simple-pipeline logic (extension)
  multi4,          // 4-regular multigraph pipeline
  multi5,          // 5-regular multigraph pipeline
  best_effort,     // k >= 7 multigraph, attempt happened to succeed
};

std::string regime_name(Regime r);

/// Everything assemble() needs on top of the decomposition: the H-level
/// matchings, the designated uncovered representatives X, and the vertex
/// each component's near-perfect matching must avoid.
struct ConstructionPlan {
  ContractedBipartite cb;
  BipartiteMatching h_matching;      // M
  BipartiteMatching h_matching_aux;  // M' (empty outside the k=5 pipeline)
  VertexSet x;                       // designated uncovered vertices
  std::vector<int> avoid_of_component;  // ge-component index -> vertex
};

struct ConstructionReport {
  Matching matching;
  VertexSet unsaturated;
  bool property_holds = false;
  Regime regime = Regime::deficiency_le1;

  // decomposition summary
  int n = 0;
  int k = 0;
  bool simple = true;
  int nu = 0;
  int deficiency = 0;
  int d_size = 0, a_size = 0, c_size = 0;
  int component_count = 0;
  std::vector<int> component_avoid;  // per ge component; -1 when absent
};

/// True iff m is maximum (Berge) and no two m-unsaturated vertices share a
/// neighbor. Throws ContractViolation when m is not a matching of g.
bool verify_property(const Multigraph& g, const Matching& m);

/// Lifts the plan back to g: H-matching edges realized by the lowest-id
/// component vertex adjacent to the matched A-vertex, a perfect matching of
/// G[C], and a near-perfect matching of each component avoiding its
/// designated vertex. Asserts |M*| = |C|/2 + (|D| - c(D))/2 + |A|.
Matching assemble(const Multigraph& g, const GallaiEdmonds& ge,
                  const ConstructionPlan& plan);

/// Simple k-regular pipeline: W = {d_H >= k}, saturate W, avoid the matched
/// endpoint in matched components and a good vertex elsewhere.
ConstructionReport construct_simple(const Multigraph& g, int k);

/// 4-regular multigraph pipeline (unmatched components have d_H = 2 and at
/// least three vertices, hence a good vertex).
ConstructionReport construct_4regular(const Multigraph& g);

/// 5-regular multigraph pipeline: refined packing, split into (M, M'),
/// X built from good vertices and M'-covered vertices of the
/// three-vertex components without good vertices.
ConstructionReport construct_5regular(const Multigraph& g);

/// Regime dispatch. Deficiency <= 1 short-circuits every other case; then
/// simple graphs take the simple pipeline, 4-/5-regular multigraphs their
/// dedicated cases, multigraphs with k <= 3 the simple-pipeline logic with
/// an oracle fallback, k = 6 raises UnsupportedRegime, and k >= 7 makes a
/// best-effort attempt that reports failure without certifying that no
/// good maximum matching exists. Non-regular input raises InputError.
ConstructionReport construct(const Multigraph& g);

}  // namespace regmatch

#endif
