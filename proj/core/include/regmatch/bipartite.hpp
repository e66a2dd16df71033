#ifndef REGMATCH_BIPARTITE_HPP
#define REGMATCH_BIPARTITE_HPP

#include <utility>
#include <vector>

#include "regmatch/matching.hpp"
#include "regmatch/multigraph.hpp"

namespace regmatch {

/// Bipartite multigraph with declared sides. Left/right indices are dense
/// and local to the graph; degrees count multiplicities.
struct BipartiteGraph {
  int left_count = 0;
  int right_count = 0;
  /// Per left vertex: (right index, multiplicity), sorted by right index.
  std::vector<std::vector<std::pair<int, int>>> adj_left;
  /// Per right vertex: (left index, multiplicity), sorted by left index.
  std::vector<std::vector<std::pair<int, int>>> adj_right;

  static BipartiteGraph make(int left_count, int right_count,
                             const std::vector<EdgeRecord>& edges);

  /// View of a general graph with declared sides; throws ContractViolation
  /// when the sides do not partition V or an edge stays within a side.
  static BipartiteGraph from_graph(const Multigraph& g, const VertexSet& left,
                                   const VertexSet& right);

  int left_degree(int a) const;
  int right_degree(int b) const;
  int multiplicity(int a, int b) const;
  /// Left/right embedded into one vertex space (right offset by left_count).
  Multigraph to_multigraph() const;
};

struct BipartiteMatching {
  std::vector<int> right_of_left;  // -1 when exposed
  std::vector<int> left_of_right;

  int size() const;
  bool covers_left(int a) const { return right_of_left[a] >= 0; }
  bool covers_right(int b) const { return left_of_right[b] >= 0; }
  std::vector<std::pair<int, int>> pairs() const;  // (left, right), sorted
};

/// Hopcroft-Karp. Deterministic for fixed adjacency order.
BipartiteMatching bipartite_max_matching(const BipartiteGraph& g);

/// Convenience overload on a general graph with declared sides: result is a
/// Matching over g's own vertex ids.
Matching bipartite_max_matching(const Multigraph& g, const VertexSet& left,
                                const VertexSet& right);

}  // namespace regmatch

#endif
