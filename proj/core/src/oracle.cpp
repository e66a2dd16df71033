#include "regmatch/oracle.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>
#include <utility>

#include "regmatch/construct.hpp"
#include "regmatch/errors.hpp"

namespace regmatch {

namespace {

// Exhaustive include/exclude recursion over the sorted support edges.
struct MatchingEnumerator {
  const std::vector<EdgeRecord>& edges;
  int n;
  std::vector<char> covered;
  std::vector<std::pair<int, int>> current;
  std::vector<std::vector<std::pair<int, int>>> best;
  int best_size = 0;
  int free_vertices = 0;

  MatchingEnumerator(const Multigraph& support)
      : edges(support.edges()),
        n(support.vertex_count()),
        covered(support.vertex_count(), 0),
        free_vertices(support.vertex_count()) {}

  void run(std::size_t idx) {
    const int remaining =
        std::min(static_cast<int>(edges.size() - idx), free_vertices / 2);
    if (static_cast<int>(current.size()) + remaining < best_size) return;
    if (idx == edges.size()) {
      const int size = static_cast<int>(current.size());
      if (size > best_size) {
        best_size = size;
        best.clear();
      }
      if (size == best_size) best.push_back(current);
      return;
    }
    const auto& e = edges[idx];
    if (!covered[e.u] && !covered[e.v]) {
      covered[e.u] = covered[e.v] = 1;
      free_vertices -= 2;
      current.emplace_back(e.u, e.v);
      run(idx + 1);
      current.pop_back();
      free_vertices += 2;
      covered[e.u] = covered[e.v] = 0;
    }
    run(idx + 1);
  }
};

bool shares_neighbor(const Multigraph& g, int u, int v) {
  const auto& nu = g.neighbors(u);
  const auto& nv = g.neighbors(v);
  std::size_t p = 0, q = 0;
  while (p < nu.size() && q < nv.size()) {
    if (nu[p].first == nv[q].first) return true;
    if (nu[p].first < nv[q].first)
      ++p;
    else
      ++q;
  }
  return false;
}

}  // namespace

std::vector<Matching> enumerate_maximum_matchings(const Multigraph& g) {
  const Multigraph support = g.simple_support();
  if (support.edge_record_count() > kOracleEdgeBudget)
    throw InputError("oracle budget exceeded: " +
                     std::to_string(support.edge_record_count()) +
                     " support edges, limit " +
                     std::to_string(kOracleEdgeBudget));
  MatchingEnumerator en(support);
  en.run(0);
  std::vector<Matching> out;
  out.reserve(en.best.size());
  for (auto& pairs : en.best) out.push_back(Matching::from_pairs(g, pairs));
  return out;
}

OracleVerdict exists_good_maximum_matching(const Multigraph& g) {
  OracleVerdict verdict;
  const std::vector<Matching> all = enumerate_maximum_matchings(g);
  verdict.maximum_matching_count = static_cast<long long>(all.size());
  verdict.nu = all.empty() ? 0 : all.front().size();
  for (const Matching& m : all) {
    const VertexSet exposed = m.unsaturated();
    bool good = true;
    for (std::size_t i = 0; i < exposed.size() && good; ++i)
      for (std::size_t j = i + 1; j < exposed.size() && good; ++j)
        if (shares_neighbor(g, exposed[i], exposed[j])) good = false;
    if (good) {
      verdict.good_exists = true;
      verdict.witness = m;
      break;
    }
  }
  return verdict;
}

namespace {

// Backtracking over the upper triangle in colex cell order (graph6's
// order), with canonical-form deduplication. Canonical form: the
// lexicographically greatest colex multiplicity string over all vertex
// relabelings.
struct RegularEnumerator {
  int n, k, maxm;
  std::vector<std::vector<int>> mat;
  std::vector<int> deg;
  std::unordered_set<std::string>* seen;
  std::vector<std::string>* out;

  RegularEnumerator(int n_, int k_, bool simple)
      : n(n_), k(k_), maxm(simple ? 1 : k_), mat(n_, std::vector<int>(n_, 0)),
        deg(n_, 0) {}

  std::string encode() const {
    std::string s;
    s.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int b = 1; b < n; ++b)
      for (int a = 0; a < b; ++a) s.push_back(static_cast<char>('0' + mat[a][b]));
    return s;
  }

  // Does swapping labels p and q make the decided colex prefix (columns
  // <= upto) strictly greater? Then the current labeling is not canonical.
  bool swap_improves(int p, int q, int upto) const {
    for (int b = 1; b <= upto; ++b) {
      for (int a = 0; a < b; ++a) {
        int sa = a == p ? q : (a == q ? p : a);
        int sb = b == p ? q : (b == q ? p : b);
        if (sa > sb) std::swap(sa, sb);
        const int sw = mat[sa][sb];
        if (sw != mat[a][b]) return sw > mat[a][b];
      }
    }
    return false;
  }

  // Full lex-max canonical string, permutation branch and bound. The
  // comparison against the incumbent is recomputed per node, so incumbent
  // updates never leave stale bounds.
  std::string canonical() const {
    std::string best = encode();
    std::vector<int> perm;
    std::vector<char> used(n, 0);
    std::string cur;
    auto dfs = [&](auto&& self) -> void {
      const int p = static_cast<int>(perm.size());
      if (p == n) {
        if (cur > best) best = cur;
        return;
      }
      for (int v = 0; v < n; ++v) {
        if (used[v]) continue;
        std::string seg;
        seg.reserve(p);
        for (int i = 0; i < p; ++i) {
          const int x = std::min(perm[i], v), y = std::max(perm[i], v);
          seg.push_back(static_cast<char>('0' + mat[x][y]));
        }
        // viable only if cur+seg is not lexicographically behind best
        const std::size_t len = cur.size() + seg.size();
        bool viable = true;
        for (std::size_t i = 0; i < len; ++i) {
          const char c = i < cur.size() ? cur[i] : seg[i - cur.size()];
          if (c != best[i]) {
            viable = c > best[i];
            break;
          }
        }
        if (!viable) continue;
        used[v] = 1;
        perm.push_back(v);
        cur += seg;
        self(self);
        cur.resize(cur.size() - seg.size());
        perm.pop_back();
        used[v] = 0;
      }
    };
    dfs(dfs);
    return best;
  }

  void leaf() {
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q)
        if (swap_improves(p, q, n - 1)) return;
    std::string canon = canonical();
    if (seen->insert(canon).second) out->push_back(std::move(canon));
  }

  void rec(int a, int b) {
    if (b == n) {
      if (n == 0 || deg[n - 1] == k) leaf();
      return;
    }
    const int next_a = a + 1 == b ? 0 : a + 1;
    const int next_b = a + 1 == b ? b + 1 : b;
    // capacity left for a and b beyond this cell
    const int rest_a = (n - 1 - b) * maxm;
    const int rest_b = ((b - 1 - a) + (n - 1 - b)) * maxm;
    int lo = std::max({0, k - deg[a] - rest_a, k - deg[b] - rest_b});
    int hi = std::min({maxm, k - deg[a], k - deg[b]});
    for (int c = hi; c >= lo; --c) {
      mat[a][b] = mat[b][a] = c;
      deg[a] += c;
      deg[b] += c;
      bool ok = true;
      if (b == n - 1 && deg[a] != k) ok = false;  // a has no cells left
      if (ok && a + 1 == b) {
        // column b finished: adjacent-transposition canonicity pruning
        for (int p = 0; p < b && ok; ++p)
          if (swap_improves(p, p + 1, b)) ok = false;
      }
      if (ok) rec(next_a, next_b);
      deg[a] -= c;
      deg[b] -= c;
      mat[a][b] = mat[b][a] = 0;
    }
  }

  void run(std::unordered_set<std::string>* seen_set,
           std::vector<std::string>* out_list) {
    seen = seen_set;
    out = out_list;
    if (n == 0) return;
    if (n == 1) {
      if (k == 0) leaf();
      return;
    }
    rec(0, 1);
  }
};

Multigraph decode_colex(const std::string& s, int n) {
  std::vector<EdgeRecord> edges;
  std::size_t idx = 0;
  for (int b = 1; b < n; ++b)
    for (int a = 0; a < b; ++a, ++idx) {
      const int m = s[idx] - '0';
      if (m > 0) edges.push_back({a, b, m});
    }
  return Multigraph(n, std::move(edges));
}

}  // namespace

std::vector<Multigraph> enumerate_regular_graphs(int n, int k, bool simple) {
  if (n < 0 || k < 0) throw InputError("n and k must be non-negative");
  if (n > 10)
    throw InputError("exhaustive enumeration is capped at n <= 10");
  std::vector<Multigraph> graphs;
  if ((static_cast<long long>(n) * k) % 2 != 0) return graphs;
  RegularEnumerator en(n, k, simple);
  std::unordered_set<std::string> seen;
  std::vector<std::string> canon;
  en.run(&seen, &canon);
  std::sort(canon.begin(), canon.end());
  graphs.reserve(canon.size());
  for (const std::string& s : canon) graphs.push_back(decode_colex(s, n));
  return graphs;
}

ScanReport exhaustive_regular_scan(int n, int k, bool simple) {
  ScanReport report;
  report.n = n;
  report.k = k;
  report.simple = simple;
  for (Multigraph& g : enumerate_regular_graphs(n, k, simple)) {
    ScanRecord rec;
    rec.mel = serialize_mel(g);
    rec.verdict = exists_good_maximum_matching(g);
    try {
      const ConstructionReport cr = construct(g);
      rec.construct_ok = cr.property_holds;
      rec.regime = regime_name(cr.regime);
      rec.agree = rec.construct_ok && rec.verdict.good_exists &&
                  cr.matching.size() == rec.verdict.nu;
    } catch (const UnsupportedRegime&) {
      rec.construct_ok = false;
      rec.regime = "unsupported";
      rec.agree = true;  // nothing to cross-check
    }
    rec.graph = std::move(g);
    if (!rec.agree) ++report.discrepancies;
    ++report.graphs_scanned;
    report.records.push_back(std::move(rec));
  }
  return report;
}

std::vector<ScanReport> scan_up_to(int n_max, int k, bool simple) {
  std::vector<ScanReport> reports;
  for (int n = 1; n <= n_max; ++n)
    reports.push_back(exhaustive_regular_scan(n, k, simple));
  return reports;
}

}  // namespace regmatch
