#include "regmatch/multigraph.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "regmatch/errors.hpp"

namespace regmatch {

Multigraph::Multigraph(int n, std::vector<EdgeRecord> edges) : n_(n) {
  if (n < 0) throw InputError("vertex count must be non-negative");
  std::map<std::pair<int, int>, long long> merged;
  for (const auto& e : edges) {
    int u = e.u, v = e.v;
    if (u == v)
      throw InputError("loop edge " + std::to_string(u) + "-" +
                       std::to_string(v) + " rejected: graphs are loopless");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InputError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                       " out of range for n=" + std::to_string(n));
    if (e.mult < 1)
      throw InputError("edge multiplicity must be >= 1, got " +
                       std::to_string(e.mult));
    if (u > v) std::swap(u, v);
    merged[{u, v}] += e.mult;
  }
  edges_.reserve(merged.size());
  adj_.assign(n_, {});
  degree_.assign(n_, 0);
  for (const auto& [pair, mult] : merged) {
    if (mult > 1'000'000) throw InputError("edge multiplicity overflow");
    const int m = static_cast<int>(mult);
    edges_.push_back({pair.first, pair.second, m});
    adj_[pair.first].emplace_back(pair.second, m);
    adj_[pair.second].emplace_back(pair.first, m);
    degree_[pair.first] += m;
    degree_[pair.second] += m;
    total_mult_ += m;
    if (m > 1) simple_ = false;
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

int Multigraph::multiplicity(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return 0;
  const auto& list = adj_[u];
  auto it = std::lower_bound(list.begin(), list.end(), std::pair{v, 0});
  if (it != list.end() && it->first == v) return it->second;
  return 0;
}

Multigraph Multigraph::simple_support() const {
  std::vector<EdgeRecord> flat;
  flat.reserve(edges_.size());
  for (const auto& e : edges_) flat.push_back({e.u, e.v, 1});
  return Multigraph(n_, std::move(flat));
}

Multigraph Multigraph::induced(const VertexSet& keep,
                               std::vector<int>* old_of_new) const {
  std::vector<int> new_id(n_, -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    const int v = keep[i];
    if (v < 0 || v >= n_) throw InputError("induced: vertex out of range");
    if (new_id[v] != -1) throw InputError("induced: duplicate vertex");
    new_id[v] = static_cast<int>(i);
  }
  std::vector<EdgeRecord> sub;
  for (const auto& e : edges_)
    if (new_id[e.u] != -1 && new_id[e.v] != -1)
      sub.push_back({new_id[e.u], new_id[e.v], e.mult});
  if (old_of_new) *old_of_new = keep;
  return Multigraph(static_cast<int>(keep.size()), std::move(sub));
}

Multigraph Multigraph::without_vertex(int v,
                                      std::vector<int>* old_of_new) const {
  VertexSet keep;
  keep.reserve(n_ > 0 ? n_ - 1 : 0);
  for (int u = 0; u < n_; ++u)
    if (u != v) keep.push_back(u);
  return induced(keep, old_of_new);
}

DegreeProfile degree_profile(const Multigraph& g) {
  DegreeProfile p;
  const int n = g.vertex_count();
  if (n == 0) {
    p.regular_k = 0;
    return p;
  }
  p.min_degree = g.degree(0);
  p.max_degree = g.degree(0);
  for (int v = 1; v < n; ++v) {
    p.min_degree = std::min(p.min_degree, g.degree(v));
    p.max_degree = std::max(p.max_degree, g.degree(v));
  }
  if (p.min_degree == p.max_degree) p.regular_k = p.min_degree;
  return p;
}

std::vector<VertexSet> connected_components(const Multigraph& g) {
  const int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<VertexSet> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::queue<int> q;
    q.push(s);
    comp[s] = id;
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      out[id].push_back(v);
      for (const auto& [w, m] : g.neighbors(v)) {
        (void)m;
        if (comp[w] == -1) {
          comp[w] = id;
          q.push(w);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

}  // namespace regmatch
