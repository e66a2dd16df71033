#include "regmatch/packing.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <limits>
#include <sstream>
#include <string>

#include "regmatch/errors.hpp"

namespace regmatch {

int Packing::degree_of_a(int a) const {
  for (const auto& c : components)
    if (c.a == a) return c.is_p3() ? 2 : 1;
  return 0;
}

int Packing::component_of_b(int b) const {
  for (std::size_t i = 0; i < components.size(); ++i)
    if (components[i].b1 == b || components[i].b2 == b)
      return static_cast<int>(i);
  return -1;
}

namespace {

constexpr int kNoVertex = -1;

int weighted_left_max(const BipartiteGraph& h) {
  int d = 0;
  for (int a = 0; a < h.left_count; ++a) d = std::max(d, h.left_degree(a));
  return d;
}

int weighted_min_over(const BipartiteGraph& h, const std::vector<int>& set) {
  int d = std::numeric_limits<int>::max();
  for (const int b : set) d = std::min(d, h.right_degree(b));
  return d;
}

int weighted_max_over(const BipartiteGraph& h, const std::vector<int>& set) {
  int d = 0;
  for (const int b : set) d = std::max(d, h.right_degree(b));
  return d;
}

void check_b_subset(const BipartiteGraph& h, const std::vector<int>& set,
                    const char* name) {
  int prev = -1;
  for (const int b : set) {
    if (b < 0 || b >= h.right_count)
      throw ContractViolation(std::string(name) + " index out of range");
    if (b <= prev)
      throw ContractViolation(std::string(name) +
                              " must be sorted and duplicate-free");
    if (h.right_degree(b) < 1)
      throw ContractViolation(std::string(name) +
                              " vertex has no edges; preconditions cannot hold");
    prev = b;
  }
}

// nu(H) = |A| is equivalent to "every maximum matching covers A".
void check_a_saturating(const BipartiteGraph& h) {
  if (bipartite_max_matching(h).size() != h.left_count)
    throw ContractViolation(
        "precondition failed: some maximum matching leaves A uncovered "
        "(nu(H) != |A|)");
}

// Kuhn augmentation from one exposed left vertex; keeps covered vertices
// covered, which is what saturating constructions rely on.
bool kuhn_augment(const BipartiteGraph& h, int a, std::vector<char>& visited,
                  std::vector<int>& match_l, std::vector<int>& match_r) {
  for (const auto& [b, mult] : h.adj_left[a]) {
    (void)mult;
    if (visited[b]) continue;
    visited[b] = 1;
    if (match_r[b] == kNoVertex ||
        kuhn_augment(h, match_r[b], visited, match_l, match_r)) {
      match_l[a] = b;
      match_r[b] = a;
      return true;
    }
  }
  return false;
}

// Mutable view of a {P2,P3}-packing: per-center leaf slots plus the
// covering center of every B vertex.
struct PackingState {
  const BipartiteGraph& h;
  std::vector<std::array<int, 2>> leaves;  // per A vertex, -1 padded
  std::vector<int> center_of_b;

  explicit PackingState(const BipartiteGraph& graph)
      : h(graph),
        leaves(graph.left_count, {kNoVertex, kNoVertex}),
        center_of_b(graph.right_count, kNoVertex) {}

  int ds_a(int a) const {
    return (leaves[a][0] >= 0 ? 1 : 0) + (leaves[a][1] >= 0 ? 1 : 0);
  }
  bool covers_b(int b) const { return center_of_b[b] >= 0; }
  bool has(int a, int b) const {
    return leaves[a][0] == b || leaves[a][1] == b;
  }

  void add(int a, int b) {
    if (center_of_b[b] != kNoVertex)
      throw TheoryViolation("packing exchange would cover a B vertex twice",
                            "b=" + std::to_string(b));
    if (leaves[a][0] == kNoVertex)
      leaves[a][0] = b;
    else if (leaves[a][1] == kNoVertex)
      leaves[a][1] = b;
    else
      throw TheoryViolation("packing exchange would give an A vertex degree 3",
                            "a=" + std::to_string(a));
    center_of_b[b] = a;
    normalize(a);
  }

  void remove(int a, int b) {
    if (leaves[a][0] == b)
      leaves[a][0] = kNoVertex;
    else if (leaves[a][1] == b)
      leaves[a][1] = kNoVertex;
    else
      throw TheoryViolation("packing exchange removed a non-edge",
                            "a=" + std::to_string(a) + " b=" + std::to_string(b));
    center_of_b[b] = kNoVertex;
    normalize(a);
  }

  void normalize(int a) {
    auto& l = leaves[a];
    if (l[0] == kNoVertex && l[1] != kNoVertex) std::swap(l[0], l[1]);
    if (l[0] != kNoVertex && l[1] != kNoVertex && l[0] > l[1])
      std::swap(l[0], l[1]);
  }

  // Toggle the edges of an alternating path given as a vertex sequence in
  // the combined id space (A: 0..L-1, B: L..L+R-1). Removals run first so
  // the degree caps never trip on transient states.
  void toggle_path(const std::vector<int>& path, std::size_t limit) {
    std::vector<std::pair<int, int>> to_remove, to_add;
    for (std::size_t i = 0; i + 1 < limit; ++i) {
      int x = path[i], y = path[i + 1];
      int a = x < h.left_count ? x : y;
      int b = x < h.left_count ? y : x;
      b -= h.left_count;
      if (has(a, b))
        to_remove.emplace_back(a, b);
      else
        to_add.emplace_back(a, b);
    }
    for (const auto& [a, b] : to_remove) remove(a, b);
    for (const auto& [a, b] : to_add) add(a, b);
  }

  int covered_w_count(const std::vector<char>& w_bit) const {
    int count = 0;
    for (int b = 0; b < h.right_count; ++b)
      if (w_bit[b] && covers_b(b)) ++count;
    return count;
  }

  Packing snapshot() const {
    Packing s;
    for (int a = 0; a < h.left_count; ++a)
      if (ds_a(a) > 0) s.components.push_back({a, leaves[a][0], leaves[a][1]});
    return s;
  }

  void validate() const {
    for (int a = 0; a < h.left_count; ++a)
      for (const int b : leaves[a])
        if (b != kNoVertex) {
          if (h.multiplicity(a, b) < 1)
            throw TheoryViolation("packing uses a non-edge",
                                  "a=" + std::to_string(a) +
                                      " b=" + std::to_string(b));
          if (center_of_b[b] != a)
            throw TheoryViolation("packing bookkeeping out of sync",
                                  "b=" + std::to_string(b));
        }
  }
};

std::vector<char> bitset_of(const std::vector<int>& set, int size) {
  std::vector<char> bit(size, 0);
  for (const int b : set) bit[b] = 1;
  return bit;
}

std::string describe_set(const std::vector<int>& xs) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? " " : "") << xs[i];
  out << "}";
  return out.str();
}

// Directed search used by both packing lemmas: edges of S point A -> B,
// all other support edges point B -> A. Parents identify the alternating
// path; distances are BFS layers.
struct OrientedSearch {
  const BipartiteGraph& h;
  const PackingState& s;
  std::vector<int> parent, dist;
  std::vector<int> pop_order;

  OrientedSearch(const BipartiteGraph& graph, const PackingState& state)
      : h(graph), s(state), parent(graph.left_count + graph.right_count, -2),
        dist(graph.left_count + graph.right_count, -1) {}

  int b_id(int b) const { return h.left_count + b; }

  void run(int root) {
    std::deque<int> queue{root};
    parent[root] = kNoVertex;
    dist[root] = 0;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      pop_order.push_back(v);
      if (v < h.left_count) {
        for (const int b : s.leaves[v])
          if (b != kNoVertex && parent[b_id(b)] == -2) {
            parent[b_id(b)] = v;
            dist[b_id(b)] = dist[v] + 1;
            queue.push_back(b_id(b));
          }
      } else {
        const int b = v - h.left_count;
        for (const auto& [a, mult] : h.adj_right[b]) {
          (void)mult;
          if (s.has(a, b)) continue;  // S pairs point the other way
          if (parent[a] == -2) {
            parent[a] = v;
            dist[a] = dist[v] + 1;
            queue.push_back(a);
          }
        }
      }
    }
  }

  std::vector<int> path_to(int node) const {
    std::vector<int> path;
    for (int v = node; v != kNoVertex; v = parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
  }
};

}  // namespace

BipartiteMatching saturate_w(const BipartiteGraph& h,
                             const std::vector<int>& w) {
  check_b_subset(h, w, "W");
  check_a_saturating(h);
  const int delta_a = weighted_left_max(h);
  if (!w.empty() && weighted_min_over(h, w) < delta_a)
    throw ContractViolation("precondition failed: delta(W) < Delta(A)");

  BipartiteMatching m;
  m.right_of_left.assign(h.left_count, kNoVertex);
  m.left_of_right.assign(h.right_count, kNoVertex);

  // Phase 1: saturate W inside the subgraph on W and N(W). Hall's condition
  // holds because W degrees dominate A degrees; a deficiency here is
  // evidence against the theory and ships the violating set.
  if (!w.empty()) {
    BipartiteGraph flipped;  // left = positions in w, right = A
    flipped.left_count = static_cast<int>(w.size());
    flipped.right_count = h.left_count;
    flipped.adj_left.assign(w.size(), {});
    flipped.adj_right.assign(h.left_count, {});
    for (std::size_t i = 0; i < w.size(); ++i)
      for (const auto& [a, mult] : h.adj_right[w[i]]) {
        flipped.adj_left[i].emplace_back(a, mult);
        flipped.adj_right[a].emplace_back(static_cast<int>(i), mult);
      }
    const BipartiteMatching wm = bipartite_max_matching(flipped);
    if (wm.size() != static_cast<int>(w.size())) {
      // Hall violator: W vertices reachable from an exposed one by
      // alternating paths; their neighborhood is strictly smaller.
      std::vector<char> seen_w(w.size(), 0), seen_a(h.left_count, 0);
      std::deque<int> queue;
      for (std::size_t i = 0; i < w.size(); ++i)
        if (wm.right_of_left[i] == kNoVertex) {
          seen_w[i] = 1;
          queue.push_back(static_cast<int>(i));
        }
      while (!queue.empty()) {
        const int i = queue.front();
        queue.pop_front();
        for (const auto& [a, mult] : flipped.adj_left[i]) {
          (void)mult;
          if (seen_a[a]) continue;
          seen_a[a] = 1;
          const int j = wm.left_of_right[a];
          if (j != kNoVertex && !seen_w[j]) {
            seen_w[j] = 1;
            queue.push_back(j);
          }
        }
      }
      std::vector<int> violator, neighborhood;
      for (std::size_t i = 0; i < w.size(); ++i)
        if (seen_w[i]) violator.push_back(w[i]);
      for (int a = 0; a < h.left_count; ++a)
        if (seen_a[a]) neighborhood.push_back(a);
      throw TheoryViolation(
          "Hall violation on W despite delta(W) >= Delta(A)",
          "violator=" + describe_set(violator) +
              " neighborhood=" + describe_set(neighborhood));
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
      const int a = wm.right_of_left[i];
      m.right_of_left[a] = w[i];
      m.left_of_right[w[i]] = a;
    }
  }

  // Phase 2: augment to maximum cardinality. Augmenting paths only ever
  // add coverage, so W stays saturated.
  for (int a = 0; a < h.left_count; ++a) {
    if (m.right_of_left[a] != kNoVertex) continue;
    std::vector<char> visited(h.right_count, 0);
    kuhn_augment(h, a, visited, m.right_of_left, m.left_of_right);
  }

  if (m.size() != h.left_count)
    throw TheoryViolation("saturating matching failed to cover A",
                          "size=" + std::to_string(m.size()));
  for (const int b : w)
    if (m.left_of_right[b] == kNoVertex)
      throw TheoryViolation("augmentation lost a W vertex",
                            "b=" + std::to_string(b));
  return m;
}

Packing p2p3_packing(const BipartiteGraph& h, const std::vector<int>& w) {
  check_b_subset(h, w, "W");
  check_a_saturating(h);
  const int delta_a = weighted_left_max(h);
  if (!w.empty() && 2 * weighted_min_over(h, w) < delta_a)
    throw ContractViolation("precondition failed: Delta(A) > 2 delta(W)");

  const std::vector<char> w_bit = bitset_of(w, h.right_count);
  PackingState s(h);
  {
    const BipartiteMatching base = saturate_w(h, {});
    for (int a = 0; a < h.left_count; ++a)
      if (base.right_of_left[a] != kNoVertex) s.add(a, base.right_of_left[a]);
  }

  while (true) {
    int x = kNoVertex;
    for (const int b : w)
      if (!s.covers_b(b)) {
        x = b;
        break;
      }
    if (x == kNoVertex) break;
    const int covered_before = s.covered_w_count(w_bit);

    // cheap move first: extend a neighboring P2 to a P3
    int extend_a = kNoVertex;
    for (const auto& [a, mult] : h.adj_right[x]) {
      (void)mult;
      if (s.ds_a(a) == 0)
        throw TheoryViolation("packing lost A coverage",
                              "a=" + std::to_string(a));
      if (s.ds_a(a) == 1) {
        extend_a = a;
        break;
      }
    }
    if (extend_a != kNoVertex) {
      s.add(extend_a, x);
    } else {
      // all neighbors sit in P3s; hunt for an exchange path
      OrientedSearch search(h, s);
      search.run(search.b_id(x));
      int target = kNoVertex;
      for (const int v : search.pop_order) {
        if (v == search.b_id(x)) continue;
        if (v < h.left_count && s.ds_a(v) <= 1) {
          target = v;
          break;
        }
        if (v >= h.left_count && !w_bit[v - h.left_count]) {
          target = v;
          break;
        }
      }
      if (target == kNoVertex) {
        // stalled: the reachable-set counting from the theory must hold,
        // yet the precondition says it cannot; ship both as the witness
        std::vector<int> ra, rb;
        for (const int v : search.pop_order)
          (v < h.left_count ? ra : rb).push_back(v < h.left_count
                                                     ? v
                                                     : v - h.left_count);
        const int delta_w = w.empty() ? 0 : weighted_min_over(h, w);
        const long long lhs =
            static_cast<long long>(delta_w) * static_cast<long long>(rb.size());
        const long long rhs =
            static_cast<long long>(delta_a) * static_cast<long long>(ra.size());
        std::ostringstream witness;
        witness << "R_A=" << describe_set(ra) << " R_B=" << describe_set(rb)
                << " 2|R_A|=" << 2 * ra.size() << " |R_B|-1=" << rb.size() - 1
                << " delta(W)|R_B|=" << lhs << " Delta(A)|R_A|=" << rhs;
        if (lhs > rhs)
          witness << " (counting inequality UNEXPECTEDLY violated)";
        throw TheoryViolation(
            "packing augmentation stalled with an uncovered W vertex",
            witness.str());
      }
      s.toggle_path(search.path_to(target), search.path_to(target).size());
      s.validate();
    }

    if (s.covered_w_count(w_bit) != covered_before + 1)
      throw TheoryViolation(
          "exchange did not increase W coverage by exactly one",
          "before=" + std::to_string(covered_before));
  }

  for (int a = 0; a < h.left_count; ++a)
    if (s.ds_a(a) < 1)
      throw TheoryViolation("packing does not cover A", "a=" + std::to_string(a));
  return s.snapshot();
}

namespace {

struct TwoWMetrics {
  int two_w = 0;     // components with two W leaves
  int w_p3 = 0;      // P3 components carrying at least one W leaf
};

TwoWMetrics metrics_of(const PackingState& s, const std::vector<char>& w_bit) {
  TwoWMetrics m;
  for (int a = 0; a < s.h.left_count; ++a) {
    if (s.ds_a(a) != 2) continue;
    const int wb = (w_bit[s.leaves[a][0]] ? 1 : 0) +
                   (w_bit[s.leaves[a][1]] ? 1 : 0);
    if (wb == 2) ++m.two_w;
    if (wb >= 1) ++m.w_p3;
  }
  return m;
}

}  // namespace

Packing refined_packing(const BipartiteGraph& h, const std::vector<int>& w,
                        const std::vector<int>& u) {
  check_b_subset(h, w, "W");
  check_b_subset(h, u, "U");
  check_a_saturating(h);
  const int delta_a = weighted_left_max(h);
  const int delta_w = w.empty() ? std::numeric_limits<int>::max()
                                : weighted_min_over(h, w);
  const int delta_u_min = u.empty() ? std::numeric_limits<int>::max()
                                    : weighted_min_over(h, u);
  const int delta_u_max = u.empty() ? -1 : weighted_max_over(h, u);
  if (delta_u_max >= delta_a)
    throw ContractViolation("precondition failed: Delta(U) >= Delta(A)");
  if (delta_a > delta_w)
    throw ContractViolation("precondition failed: Delta(A) > delta(W)");
  if (!u.empty() && delta_a > 2 * delta_u_min)
    throw ContractViolation("precondition failed: Delta(A) > 2 delta(U)");

  std::vector<int> wu;
  std::merge(w.begin(), w.end(), u.begin(), u.end(), std::back_inserter(wu));
  wu.erase(std::unique(wu.begin(), wu.end()), wu.end());

  const std::vector<char> w_bit = bitset_of(w, h.right_count);
  const std::vector<char> u_bit = bitset_of(u, h.right_count);

  PackingState s(h);
  for (const auto& comp : p2p3_packing(h, wu).components) {
    s.add(comp.a, comp.b1);
    if (comp.b2 >= 0) s.add(comp.a, comp.b2);
  }

  const long long flip_budget =
      4LL * (h.left_count + h.right_count + 4) *
          (h.left_count + h.right_count + 4) +
      64;

  while (true) {
    int root = kNoVertex;  // lowest center of a two-W P3
    for (int a = 0; a < h.left_count; ++a)
      if (s.ds_a(a) == 2 && w_bit[s.leaves[a][0]] && w_bit[s.leaves[a][1]]) {
        root = a;
        break;
      }
    if (root == kNoVertex) break;

    const TwoWMetrics before = metrics_of(s, w_bit);
    long long flips = 0;
    while (true) {
      int y = kNoVertex;
      for (int a = 0; a < h.left_count; ++a)
        if (s.ds_a(a) == 2 && w_bit[s.leaves[a][0]] && w_bit[s.leaves[a][1]]) {
          y = a;
          break;
        }
      if (y == kNoVertex) break;  // all repaired

      OrientedSearch search(h, s);
      search.run(y);

      // target: reachable B vertex of degree < Delta(A) that is outside U
      // or sits in a P2 component
      int target_b = kNoVertex;
      for (const int v : search.pop_order) {
        if (v < h.left_count) continue;
        const int b = v - h.left_count;
        if (h.right_degree(b) >= delta_a) continue;
        const bool in_p2 = s.covers_b(b) && s.ds_a(s.center_of_b[b]) == 1;
        if (!u_bit[b] || in_p2) {
          target_b = b;
          break;
        }
      }
      if (target_b == kNoVertex) {
        std::vector<int> ra, b1, b2;
        for (const int v : search.pop_order) {
          if (v < h.left_count) {
            ra.push_back(v);
          } else {
            const int b = v - h.left_count;
            (h.right_degree(b) < delta_a ? b1 : b2).push_back(b);
          }
        }
        std::ostringstream witness;
        witness << "R_A=" << describe_set(ra) << " B1=" << describe_set(b1)
                << " B2=" << describe_set(b2) << " |R_A|=" << ra.size()
                << " bound=|B1|/2+|B2|-1="
                << (b1.size() / 2.0 + b2.size() - 1) << " Delta(A)=" << delta_a;
        throw TheoryViolation(
            "two-W repair found no exchange target; counting forbids this "
            "under the stated preconditions",
            witness.str());
      }

      const std::vector<int> path = search.path_to(search.b_id(target_b));

      // last W-carrying P3 component along the path, other than the root's
      int q_center = kNoVertex;
      for (const int v : path) {
        int center = kNoVertex;
        if (v < h.left_count) {
          center = v;
        } else if (s.covers_b(v - h.left_count)) {
          center = s.center_of_b[v - h.left_count];
        }
        if (center == kNoVertex || center == y || s.ds_a(center) != 2) continue;
        if (w_bit[s.leaves[center][0]] || w_bit[s.leaves[center][1]])
          q_center = center;
      }

      std::size_t start = 0;
      if (q_center != kNoVertex) {
        while (start < path.size() && path[start] != q_center) ++start;
        if (start == path.size())
          throw TheoryViolation("exchange segment lost its component center",
                                "center=" + std::to_string(q_center));
      }
      std::vector<int> segment(path.begin() + start, path.end());

      const bool drop_last = u_bit[target_b];  // then target sits in a P2
      s.toggle_path(segment, drop_last ? segment.size() - 1 : segment.size());
      s.validate();

      if (++flips > flip_budget) {
        const TwoWMetrics now = metrics_of(s, w_bit);
        throw TheoryViolation(
            "two-W repair exceeded its exchange budget",
            "two_w=" + std::to_string(now.two_w) +
                " w_p3=" + std::to_string(now.w_p3) +
                " budget=" + std::to_string(flip_budget));
      }
      const TwoWMetrics now = metrics_of(s, w_bit);
      if (now.two_w < before.two_w ||
          (now.two_w == before.two_w && now.w_p3 < before.w_p3))
        break;  // the round made lexicographic progress
    }

    const TwoWMetrics after = metrics_of(s, w_bit);
    if (after.two_w > before.two_w ||
        (after.two_w == before.two_w && after.w_p3 >= before.w_p3))
      throw TheoryViolation(
          "two-W repair round did not reduce (two-W, W-carrying P3) "
          "lexicographically",
          "before=(" + std::to_string(before.two_w) + "," +
              std::to_string(before.w_p3) + ") after=(" +
              std::to_string(after.two_w) + "," + std::to_string(after.w_p3) +
              ")");
  }

  // conclusions, checked outright
  for (int a = 0; a < h.left_count; ++a)
    if (s.ds_a(a) < 1)
      throw TheoryViolation("refined packing does not cover A",
                            "a=" + std::to_string(a));
  for (const int b : wu)
    if (!s.covers_b(b))
      throw TheoryViolation("refined packing left W or U uncovered",
                            "b=" + std::to_string(b));
  for (int a = 0; a < h.left_count; ++a)
    if (s.ds_a(a) == 2 && w_bit[s.leaves[a][0]] && w_bit[s.leaves[a][1]])
      throw TheoryViolation("refined packing kept a two-W component",
                            "a=" + std::to_string(a));
  return s.snapshot();
}

std::pair<BipartiteMatching, BipartiteMatching> split_packing(
    const Packing& s, const BipartiteGraph& h, const std::vector<int>& w) {
  check_b_subset(h, w, "W");
  const std::vector<char> w_bit = bitset_of(w, h.right_count);

  BipartiteMatching m, m_prime;
  m.right_of_left.assign(h.left_count, kNoVertex);
  m.left_of_right.assign(h.right_count, kNoVertex);
  m_prime.right_of_left.assign(h.left_count, kNoVertex);
  m_prime.left_of_right.assign(h.right_count, kNoVertex);

  std::vector<char> seen_a(h.left_count, 0), seen_b(h.right_count, 0);
  for (const auto& comp : s.components) {
    if (comp.a < 0 || comp.a >= h.left_count || comp.b1 < 0 ||
        comp.b1 >= h.right_count || comp.b2 >= h.right_count)
      throw ContractViolation("packing component out of range");
    if (seen_a[comp.a] || seen_b[comp.b1] ||
        (comp.is_p3() && seen_b[comp.b2]))
      throw ContractViolation("packing components are not vertex-disjoint");
    seen_a[comp.a] = 1;
    seen_b[comp.b1] = 1;
    if (comp.is_p3()) seen_b[comp.b2] = 1;

    if (!comp.is_p3()) {
      m.right_of_left[comp.a] = comp.b1;
      m.left_of_right[comp.b1] = comp.a;
      continue;
    }
    if (w_bit[comp.b1] && w_bit[comp.b2])
      throw ContractViolation(
          "packing has a component with two W vertices; the refined "
          "conclusions do not hold");
    // the W leaf goes to M; with no W leaf the lower B index goes to M
    int to_m = comp.b1, to_aux = comp.b2;
    if (w_bit[comp.b2]) std::swap(to_m, to_aux);
    m.right_of_left[comp.a] = to_m;
    m.left_of_right[to_m] = comp.a;
    m_prime.right_of_left[comp.a] = to_aux;
    m_prime.left_of_right[to_aux] = comp.a;
  }
  for (const int b : w)
    if (m.left_of_right[b] == kNoVertex && seen_b[b])
      throw TheoryViolation("split put a W vertex into M'",
                            "b=" + std::to_string(b));
  return {std::move(m), std::move(m_prime)};
}

}  // namespace regmatch
