#ifndef REGMATCH_GALLAI_EDMONDS_HPP
#define REGMATCH_GALLAI_EDMONDS_HPP

#include <vector>

#include "regmatch/bipartite.hpp"
#include "regmatch/multigraph.hpp"

namespace regmatch {

struct ComponentInfo {
  VertexSet vertices;   // sorted
  int edges_to_a = 0;   // |[Q_i, A]| with multiplicity
  VertexSet good;       // vertices whose whole neighborhood stays inside
};

/// The partition (D, A, C) together with the components of G[D].
/// D = vertices missed by at least one maximum matching, A = N(D) \ D,
/// C = the rest. Components are listed by smallest contained vertex.
struct GallaiEdmonds {
  VertexSet d, a, c;
  std::vector<ComponentInfo> components;
  int nu = 0;
  int deficiency = 0;

  int component_count() const { return static_cast<int>(components.size()); }
};

/// Computes the decomposition by n+1 maximum-matching runs (v in D iff
/// nu(G - v) = nu(G)) and asserts its structural invariants: every
/// component factor-critical, G[C] perfectly matchable, c(D) >= |A| + 2
/// when the deficiency is at least 2, and |[Q_i, A]| = k (mod 2) on
/// k-regular inputs. Violations raise TheoryViolation.
GallaiEdmonds decompose(const Multigraph& g);

/// Direct check: every one-vertex deletion leaves a perfect matching.
bool certify_factor_critical(const Multigraph& q);

/// Vertices of q whose neighbors all lie inside q.
VertexSet good_vertices(const Multigraph& g, const VertexSet& q);

/// The bipartite graph H(A, B) with each component of G[D] contracted to a
/// single vertex. B-side order: degree non-increasing, ties by smallest
/// contained vertex. W and U are the degree classes d_H >= k and d_H == 3
/// (the latter populated only for k = 5).
struct ContractedBipartite {
  BipartiteGraph h;                // left = A order, right = B order
  VertexSet a_vertices;            // original ids, ascending
  std::vector<int> component_of_b; // B index -> index into ge.components
  std::vector<int> b_degree;       // d_H, multiplicity-weighted
  std::vector<int> w;              // B indices with d_H >= k
  std::vector<int> u;              // B indices with d_H == 3 (k = 5 only)
  int k = 0;
};

/// Throws ContractViolation unless g is k-regular and ge = decompose(g).
/// Asserts nu(H) = |A| and, when the deficiency is >= 2, that some
/// component has d_H < k.
ContractedBipartite contract(const Multigraph& g, const GallaiEdmonds& ge,
                             int k);

}  // namespace regmatch

#endif
