#include "regmatch/gallai_edmonds.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "regmatch/errors.hpp"
#include "regmatch/matching.hpp"

namespace regmatch {

namespace {

std::string join_ids(const VertexSet& s) {
  std::ostringstream out;
  for (std::size_t i = 0; i < s.size(); ++i)
    out << (i ? " " : "") << s[i];
  return out.str();
}

}  // namespace

bool certify_factor_critical(const Multigraph& q) {
  const int n = q.vertex_count();
  if (n % 2 == 0) return false;
  for (int v = 0; v < n; ++v)
    if (!perfect_matching(q.without_vertex(v))) return false;
  return true;
}

VertexSet good_vertices(const Multigraph& g, const VertexSet& q) {
  std::vector<char> inside(g.vertex_count(), 0);
  for (const int v : q) inside[v] = 1;
  VertexSet out;
  for (const int v : q) {
    bool good = true;
    for (const auto& [w, m] : g.neighbors(v)) {
      (void)m;
      if (!inside[w]) {
        good = false;
        break;
      }
    }
    if (good) out.push_back(v);
  }
  return out;
}

GallaiEdmonds decompose(const Multigraph& g) {
  const int n = g.vertex_count();
  GallaiEdmonds ge;
  ge.nu = matching_number(g);
  ge.deficiency = n - 2 * ge.nu;

  // v is in D exactly when deleting it does not lower the matching number.
  std::vector<char> in_d(n, 0);
  for (int v = 0; v < n; ++v)
    if (matching_number(g.without_vertex(v)) == ge.nu) in_d[v] = 1;

  std::vector<char> in_a(n, 0);
  for (int v = 0; v < n; ++v) {
    if (in_d[v]) continue;
    for (const auto& [w, m] : g.neighbors(v)) {
      (void)m;
      if (in_d[w]) {
        in_a[v] = 1;
        break;
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    if (in_d[v])
      ge.d.push_back(v);
    else if (in_a[v])
      ge.a.push_back(v);
    else
      ge.c.push_back(v);
  }

  // components of G[D], listed by smallest contained vertex
  std::vector<int> old_of_new;
  const Multigraph gd = g.induced(ge.d, &old_of_new);
  for (const VertexSet& comp_local : connected_components(gd)) {
    ComponentInfo info;
    for (const int v : comp_local) info.vertices.push_back(old_of_new[v]);
    std::sort(info.vertices.begin(), info.vertices.end());
    for (const int v : info.vertices)
      for (const auto& [w, m] : g.neighbors(v))
        if (in_a[w]) info.edges_to_a += m;
    info.good = good_vertices(g, info.vertices);
    ge.components.push_back(std::move(info));
  }
  std::sort(ge.components.begin(), ge.components.end(),
            [](const ComponentInfo& x, const ComponentInfo& y) {
              return x.vertices.front() < y.vertices.front();
            });

  // structural checks; every failure is a decomposition bug, not an input
  for (const ComponentInfo& comp : ge.components) {
    if (!certify_factor_critical(g.induced(comp.vertices)))
      throw TheoryViolation("component of G[D] is not factor-critical",
                            "component: " + join_ids(comp.vertices));
  }
  if (!ge.c.empty() && !perfect_matching(g.induced(ge.c)))
    throw TheoryViolation("G[C] has no perfect matching",
                          "C: " + join_ids(ge.c));
  const int c_d = ge.component_count();
  if (ge.deficiency >= 2 &&
      c_d < static_cast<int>(ge.a.size()) + 2)
    throw TheoryViolation(
        "expected c(D) >= |A| + 2",
        "c(D)=" + std::to_string(c_d) + " |A|=" + std::to_string(ge.a.size()));
  if (c_d - static_cast<int>(ge.a.size()) != ge.deficiency)
    throw TheoryViolation("deficiency does not match c(D) - |A|",
                          "c(D)=" + std::to_string(c_d) +
                              " |A|=" + std::to_string(ge.a.size()) +
                              " deficiency=" + std::to_string(ge.deficiency));
  const auto profile = degree_profile(g);
  if (profile.regular_k && *profile.regular_k > 0) {
    for (const ComponentInfo& comp : ge.components)
      if ((comp.edges_to_a - *profile.regular_k) % 2 != 0)
        throw TheoryViolation(
            "|[Q_i,A]| parity differs from k",
            "component: " + join_ids(comp.vertices) +
                " edges_to_A=" + std::to_string(comp.edges_to_a) +
                " k=" + std::to_string(*profile.regular_k));
  }
  return ge;
}

ContractedBipartite contract(const Multigraph& g, const GallaiEdmonds& ge,
                             int k) {
  const auto profile = degree_profile(g);
  if (!profile.regular_k || *profile.regular_k != k)
    throw ContractViolation("contract: graph is not " + std::to_string(k) +
                            "-regular");

  ContractedBipartite cb;
  cb.k = k;
  cb.a_vertices = ge.a;

  // B-side order: degree non-increasing, ties by smallest contained vertex.
  const int comp_count = ge.component_count();
  std::vector<int> order(comp_count);
  for (int i = 0; i < comp_count; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    const int dx = ge.components[x].edges_to_a;
    const int dy = ge.components[y].edges_to_a;
    if (dx != dy) return dx > dy;
    return ge.components[x].vertices.front() < ge.components[y].vertices.front();
  });
  cb.component_of_b = order;

  std::vector<int> a_index(g.vertex_count(), -1);
  for (std::size_t i = 0; i < ge.a.size(); ++i) a_index[ge.a[i]] = static_cast<int>(i);

  std::vector<EdgeRecord> edges;
  cb.b_degree.assign(comp_count, 0);
  for (int b = 0; b < comp_count; ++b) {
    const ComponentInfo& comp = ge.components[order[b]];
    for (const int v : comp.vertices)
      for (const auto& [w, m] : g.neighbors(v))
        if (a_index[w] != -1) edges.push_back({a_index[w], b, m});
    cb.b_degree[b] = comp.edges_to_a;
  }
  cb.h = BipartiteGraph::make(static_cast<int>(ge.a.size()), comp_count, edges);

  long long degree_sum = 0;
  for (int b = 0; b < comp_count; ++b) {
    if (cb.h.right_degree(b) != cb.b_degree[b])
      throw TheoryViolation("contracted degree disagrees with |[Q_i,A]|",
                            "b=" + std::to_string(b));
    degree_sum += cb.b_degree[b];
    if (cb.b_degree[b] >= k) cb.w.push_back(b);
    if (k == 5 && cb.b_degree[b] == 3) cb.u.push_back(b);
  }
  if (degree_sum > static_cast<long long>(k) * static_cast<long long>(ge.a.size()))
    throw TheoryViolation(
        "sum of |[Q_i,A]| exceeds k|A|",
        "sum=" + std::to_string(degree_sum) + " k|A|=" +
            std::to_string(static_cast<long long>(k) * ge.a.size()));
  if (k >= 1 && ge.deficiency >= 2 && comp_count > 0 &&
      static_cast<int>(cb.w.size()) == comp_count)
    throw TheoryViolation(
        "every contracted component has degree >= k; the edge count forbids this",
        "c(D)=" + std::to_string(comp_count) +
            " |A|=" + std::to_string(ge.a.size()) + " k=" + std::to_string(k));

  // every maximum matching of H covers A
  if (bipartite_max_matching(cb.h).size() != static_cast<int>(ge.a.size()))
    throw TheoryViolation("nu(H) != |A|: H does not saturate A",
                          "|A|=" + std::to_string(ge.a.size()));
  return cb;
}

}  // namespace regmatch
