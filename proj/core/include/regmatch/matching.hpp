#ifndef REGMATCH_MATCHING_HPP
#define REGMATCH_MATCHING_HPP

#include <optional>
#include <utility>
#include <vector>

#include "regmatch/multigraph.hpp"

namespace regmatch {

/// A set of pairwise vertex-disjoint edges of a host graph. Stored as
/// normalized pairs (u < v, sorted); the host is identified by its vertex
/// count only, validation against concrete graphs happens at construction.
class Matching {
 public:
  Matching() = default;
  explicit Matching(int n) : n_(n), mate_(n, -1) {}

  /// Validates that every pair is an edge of `host` and that the pairs are
  /// vertex-disjoint; throws ContractViolation otherwise.
  static Matching from_pairs(const Multigraph& host,
                             std::vector<std::pair<int, int>> pairs);
  /// mate[v] = partner or -1; must be symmetric.
  static Matching from_mate(const std::vector<int>& mate);

  int host_vertex_count() const { return n_; }
  int size() const { return static_cast<int>(pairs_.size()); }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  const std::vector<int>& mate() const { return mate_; }

  bool covers(int v) const { return mate_[v] >= 0; }
  VertexSet saturated() const;
  VertexSet unsaturated() const;

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<int> mate_;
};

/// True iff `m` is a matching of `g` (disjoint pairs backed by edges).
bool is_valid_matching(const Multigraph& g, const Matching& m);

/// Maximum-cardinality matching via blossom augmentation on the simple
/// support. Deterministic: BFS from the lowest-id exposed vertex, sorted
/// adjacency. Each augmenting step is checked to grow the matching by one
/// edge without unsaturating any covered vertex.
Matching maximum_matching(const Multigraph& g);

/// nu(G) = |maximum_matching(g)|.
int matching_number(const Multigraph& g);

/// Berge certificate: true iff no augmenting path exists for `m`.
/// Throws ContractViolation if `m` is not a matching of `g`.
bool is_maximum(const Multigraph& g, const Matching& m);

/// Perfect matching, or nullopt when nu(G) < n/2 (odd n short-circuits).
std::optional<Matching> perfect_matching(const Multigraph& g);

/// Perfect matching of Q - v for factor-critical Q. Throws TheoryViolation
/// when Q - v has none (an upstream decomposition handed over a component
/// that is not factor-critical).
Matching near_perfect_avoiding(const Multigraph& q, int avoid);

}  // namespace regmatch

#endif
