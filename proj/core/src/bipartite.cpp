#include "regmatch/bipartite.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <string>

#include "regmatch/errors.hpp"

namespace regmatch {

BipartiteGraph BipartiteGraph::make(int left_count, int right_count,
                                    const std::vector<EdgeRecord>& edges) {
  BipartiteGraph g;
  g.left_count = left_count;
  g.right_count = right_count;
  g.adj_left.assign(left_count, {});
  g.adj_right.assign(right_count, {});
  std::map<std::pair<int, int>, int> merged;
  for (const auto& e : edges) {
    if (e.u < 0 || e.u >= left_count || e.v < 0 || e.v >= right_count)
      throw ContractViolation("bipartite edge endpoint out of range");
    if (e.mult < 1) throw ContractViolation("bipartite multiplicity < 1");
    merged[{e.u, e.v}] += e.mult;
  }
  for (const auto& [pair, m] : merged) {
    g.adj_left[pair.first].emplace_back(pair.second, m);
    g.adj_right[pair.second].emplace_back(pair.first, m);
  }
  for (auto& list : g.adj_left) std::sort(list.begin(), list.end());
  for (auto& list : g.adj_right) std::sort(list.begin(), list.end());
  return g;
}

BipartiteGraph BipartiteGraph::from_graph(const Multigraph& g,
                                          const VertexSet& left,
                                          const VertexSet& right) {
  const int n = g.vertex_count();
  std::vector<int> side(n, -1), local(n, -1);
  for (std::size_t i = 0; i < left.size(); ++i) {
    const int v = left[i];
    if (v < 0 || v >= n || side[v] != -1)
      throw ContractViolation("bipartite sides are not a partition");
    side[v] = 0;
    local[v] = static_cast<int>(i);
  }
  for (std::size_t i = 0; i < right.size(); ++i) {
    const int v = right[i];
    if (v < 0 || v >= n || side[v] != -1)
      throw ContractViolation("bipartite sides are not a partition");
    side[v] = 1;
    local[v] = static_cast<int>(i);
  }
  for (int v = 0; v < n; ++v)
    if (side[v] == -1)
      throw ContractViolation("bipartite sides do not cover all vertices");
  std::vector<EdgeRecord> edges;
  for (const auto& e : g.edges()) {
    if (side[e.u] == side[e.v])
      throw ContractViolation("declared-bipartite graph has an edge inside side " +
                              std::to_string(side[e.u]));
    const int a = side[e.u] == 0 ? e.u : e.v;
    const int b = side[e.u] == 0 ? e.v : e.u;
    edges.push_back({local[a], local[b], e.mult});
  }
  return make(static_cast<int>(left.size()), static_cast<int>(right.size()),
              edges);
}

int BipartiteGraph::left_degree(int a) const {
  int d = 0;
  for (const auto& [b, m] : adj_left[a]) {
    (void)b;
    d += m;
  }
  return d;
}

int BipartiteGraph::right_degree(int b) const {
  int d = 0;
  for (const auto& [a, m] : adj_right[b]) {
    (void)a;
    d += m;
  }
  return d;
}

int BipartiteGraph::multiplicity(int a, int b) const {
  const auto& list = adj_left[a];
  auto it = std::lower_bound(list.begin(), list.end(), std::pair{b, 0});
  if (it != list.end() && it->first == b) return it->second;
  return 0;
}

Multigraph BipartiteGraph::to_multigraph() const {
  std::vector<EdgeRecord> edges;
  for (int a = 0; a < left_count; ++a)
    for (const auto& [b, m] : adj_left[a])
      edges.push_back({a, left_count + b, m});
  return Multigraph(left_count + right_count, std::move(edges));
}

int BipartiteMatching::size() const {
  int s = 0;
  for (const int b : right_of_left)
    if (b >= 0) ++s;
  return s;
}

std::vector<std::pair<int, int>> BipartiteMatching::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < static_cast<int>(right_of_left.size()); ++a)
    if (right_of_left[a] >= 0) out.emplace_back(a, right_of_left[a]);
  return out;
}

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

// Hopcroft-Karp over the simple support of the bipartite graph.
struct HopcroftKarp {
  const BipartiteGraph& g;
  std::vector<int>& match_l;
  std::vector<int>& match_r;
  std::vector<int> dist;

  HopcroftKarp(const BipartiteGraph& graph, std::vector<int>& ml,
               std::vector<int>& mr)
      : g(graph), match_l(ml), match_r(mr), dist(graph.left_count) {}

  bool bfs() {
    std::queue<int> q;
    bool reachable_free = false;
    for (int a = 0; a < g.left_count; ++a) {
      if (match_l[a] == -1) {
        dist[a] = 0;
        q.push(a);
      } else {
        dist[a] = kInf;
      }
    }
    while (!q.empty()) {
      const int a = q.front();
      q.pop();
      for (const auto& [b, m] : g.adj_left[a]) {
        (void)m;
        const int a2 = match_r[b];
        if (a2 == -1) {
          reachable_free = true;
        } else if (dist[a2] == kInf) {
          dist[a2] = dist[a] + 1;
          q.push(a2);
        }
      }
    }
    return reachable_free;
  }

  bool dfs(int a) {
    for (const auto& [b, m] : g.adj_left[a]) {
      (void)m;
      const int a2 = match_r[b];
      if (a2 == -1 || (dist[a2] == dist[a] + 1 && dfs(a2))) {
        match_l[a] = b;
        match_r[b] = a;
        return true;
      }
    }
    dist[a] = kInf;
    return false;
  }

  void run() {
    while (bfs())
      for (int a = 0; a < g.left_count; ++a)
        if (match_l[a] == -1) dfs(a);
  }
};

}  // namespace

BipartiteMatching bipartite_max_matching(const BipartiteGraph& g) {
  BipartiteMatching m;
  m.right_of_left.assign(g.left_count, -1);
  m.left_of_right.assign(g.right_count, -1);
  HopcroftKarp hk(g, m.right_of_left, m.left_of_right);
  hk.run();
  return m;
}

Matching bipartite_max_matching(const Multigraph& g, const VertexSet& left,
                                const VertexSet& right) {
  const BipartiteGraph h = BipartiteGraph::from_graph(g, left, right);
  const BipartiteMatching bm = bipartite_max_matching(h);
  std::vector<std::pair<int, int>> pairs;
  for (const auto& [a, b] : bm.pairs()) pairs.emplace_back(left[a], right[b]);
  return Matching::from_pairs(g, std::move(pairs));
}

}  // namespace regmatch
