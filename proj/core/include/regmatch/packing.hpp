#ifndef REGMATCH_PACKING_HPP
#define REGMATCH_PACKING_HPP

#include <utility>
#include <vector>

#include "regmatch/bipartite.hpp"

namespace regmatch {

/// One component of a {P2,P3}-packing of a bipartite graph: the center `a`
/// lies on the A-side, leaves on the B-side; b2 < 0 encodes a P2.
struct PackComponent {
  int a = -1;
  int b1 = -1;
  int b2 = -1;

  bool is_p3() const { return b2 >= 0; }
};

/// Vertex-disjoint packing with every B-vertex in at most one component.
/// Components are kept sorted by center.
struct Packing {
  std::vector<PackComponent> components;

  int degree_of_a(int a) const;
  /// Component index covering B vertex b, or -1.
  int component_of_b(int b) const;
  bool covers_b(int b) const { return component_of_b(b) >= 0; }
};

/// Maximum matching of `h` covering every vertex of `w` (B-side indices)
/// and all of the A-side.
///
/// Preconditions (checked): every maximum matching of h covers A
/// (equivalently nu(h) = |A|), and delta(w) >= Delta(A) with
/// multiplicity-weighted degrees. Construction: first saturate w inside the
/// subgraph on w and its neighborhood (Hall's condition follows from the
/// degree bound), then augment to maximum cardinality; augmenting never
/// unsaturates a covered vertex, so w stays covered.
BipartiteMatching saturate_w(const BipartiteGraph& h, const std::vector<int>& w);

/// {P2,P3}-packing covering all of A and all of `w`, with every B-vertex in
/// at most one component. Preconditions (checked): nu(h) = |A| and
/// Delta(A) <= 2 delta(w). Starts from an A-saturating matching and grows
/// W-coverage one vertex per exchange along oriented alternating paths; a
/// stalled search is a theory violation and carries the reachable-set
/// counting witness.
Packing p2p3_packing(const BipartiteGraph& h, const std::vector<int>& w);

/// Packing covering A, w and u such that no component contains two vertices
/// of w. Preconditions (checked): nu(h) = |A| and
/// Delta(u) < Delta(A) <= min(delta(w), 2 delta(u)). Repairs two-W
/// components by the oriented-path exchange with the minimal-length target
/// rule; each repair round strictly reduces (two-W components, W-carrying
/// P3 components) lexicographically.
Packing refined_packing(const BipartiteGraph& h, const std::vector<int>& w,
                        const std::vector<int>& u);

/// Splits a packing satisfying the refined conclusions into (M, M'):
/// every P2 goes to M; from each P3 the edge meeting w goes to M and the
/// other to M'; when neither leaf is in w the lower B index goes to M.
/// M covers A and w; M' covers the M-unsaturated vertices of u.
std::pair<BipartiteMatching, BipartiteMatching> split_packing(
    const Packing& s, const BipartiteGraph& h, const std::vector<int>& w);

}  // namespace regmatch

#endif
