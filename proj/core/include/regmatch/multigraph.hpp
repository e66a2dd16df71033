#ifndef REGMATCH_MULTIGRAPH_HPP
#define REGMATCH_MULTIGRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace regmatch {

/// Sorted list of distinct vertex ids within a host graph.
using VertexSet = std::vector<int>;

/// One edge record: unordered pair {u, v} with u < v and multiplicity >= 1.
struct EdgeRecord {
  int u = 0;
  int v = 0;
  int mult = 1;

  friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

/// Immutable loopless multigraph on vertices 0..n-1. Parallel edges are a
/// multiplicity on the unordered pair, never distinct objects. Degrees
/// count multiplicities; neighborhoods count distinct neighbors. (The two
/// notions differ on multigraphs and both are needed: edge counting uses
/// degrees, the shared-neighbor predicate uses neighborhoods.)
class Multigraph {
 public:
  Multigraph() = default;

  /// Records are normalized to u < v, duplicates of the same pair merged by
  /// summing multiplicities. Throws InputError on loops, multiplicities < 1,
  /// or out-of-range ids.
  Multigraph(int n, std::vector<EdgeRecord> edges);

  int vertex_count() const { return n_; }
  int edge_record_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<EdgeRecord>& edges() const { return edges_; }

  /// (neighbor, multiplicity) pairs sorted by neighbor id.
  const std::vector<std::pair<int, int>>& neighbors(int v) const {
    return adj_[v];
  }

  /// Multiplicity-counting degree: sum of multiplicities at v.
  int degree(int v) const { return degree_[v]; }
  /// |N(v)|, the number of distinct neighbors.
  int neighbor_count(int v) const { return static_cast<int>(adj_[v].size()); }
  /// Multiplicity of pair {u, v}; 0 if not an edge.
  int multiplicity(int u, int v) const;
  bool has_edge(int u, int v) const { return multiplicity(u, v) > 0; }

  bool is_simple() const { return simple_; }
  /// Sum of all multiplicities (the multigraph edge count).
  int total_multiplicity() const { return total_mult_; }

  /// Same vertices and pairs, all multiplicities collapsed to 1.
  Multigraph simple_support() const;

  /// Subgraph induced by `keep` (sorted). New ids are positions in `keep`;
  /// old_of_new receives the reverse map when non-null.
  Multigraph induced(const VertexSet& keep,
                     std::vector<int>* old_of_new = nullptr) const;
  Multigraph without_vertex(int v, std::vector<int>* old_of_new = nullptr) const;

 private:
  int n_ = 0;
  bool simple_ = true;
  int total_mult_ = 0;
  std::vector<EdgeRecord> edges_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
  std::vector<int> degree_;
};

struct DegreeProfile {
  int min_degree = 0;
  int max_degree = 0;
  std::optional<int> regular_k;  // present iff min == max
};

DegreeProfile degree_profile(const Multigraph& g);

/// Connected components as sorted vertex sets, ordered by smallest vertex.
std::vector<VertexSet> connected_components(const Multigraph& g);

/// graph6 (simple graphs, n <= 62). Parse errors carry the byte offset.
Multigraph parse_graph6(std::string_view text);
std::string to_graph6(const Multigraph& g);

/// MEL multigraph edge list: header "n <count>", then "u v m" lines,
/// '#' starts a comment. Duplicate pairs merge by summation.
Multigraph parse_mel(std::string_view text);
std::string serialize_mel(const Multigraph& g);

/// Configuration-model k-regular generator with rejection of loops (always)
/// and of parallel edges (when simple). Deterministic for a fixed seed.
Multigraph gen_random_regular(int n, int k, bool simple, std::uint64_t seed);

/// Named test graphs: petersen, qt4, penta5, dtri.
Multigraph fixture(std::string_view name);

}  // namespace regmatch

#endif
