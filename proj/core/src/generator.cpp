#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "regmatch/errors.hpp"
#include "regmatch/multigraph.hpp"
#include "regmatch/rng.hpp"

namespace regmatch {

namespace {

constexpr int kPairingAttempts = 10'000;

void shuffle_stubs(std::vector<int>& stubs, SeededRng& rng) {
  for (int i = static_cast<int>(stubs.size()) - 1; i > 0; --i)
    std::swap(stubs[i], stubs[rng.below(i + 1)]);
}

}  // namespace

Multigraph gen_random_regular(int n, int k, bool simple, std::uint64_t seed) {
  if (n < 0 || k < 0) throw InputError("n and k must be non-negative");
  if ((static_cast<long long>(n) * k) % 2 != 0)
    throw InputError("infeasible: n*k must be even for a k-regular graph");
  if (k == 0) return Multigraph(n, {});
  if (n == 0) throw InputError("infeasible: k > 0 requires vertices");
  if (simple && k >= n)
    throw InputError("infeasible: a simple k-regular graph needs k < n");

  std::vector<int> stubs;
  stubs.reserve(static_cast<std::size_t>(n) * k);
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < k; ++i) stubs.push_back(v);

  SeededRng rng(seed);
  for (int attempt = 0; attempt < kPairingAttempts; ++attempt) {
    shuffle_stubs(stubs, rng);
    std::map<std::pair<int, int>, int> mult;
    bool ok = true;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      int u = stubs[i], v = stubs[i + 1];
      if (u == v) {  // loops always rejected
        ok = false;
        break;
      }
      if (u > v) std::swap(u, v);
      const int m = ++mult[{u, v}];
      if (simple && m > 1) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    std::vector<EdgeRecord> edges;
    edges.reserve(mult.size());
    for (const auto& [pair, m] : mult)
      edges.push_back({pair.first, pair.second, m});
    return Multigraph(n, std::move(edges));
  }
  throw InputError("random regular generator: rejection budget exhausted for n=" +
                   std::to_string(n) + " k=" + std::to_string(k));
}

namespace {

Multigraph make_petersen() {
  std::vector<EdgeRecord> e;
  for (int i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5, 1});          // outer cycle
    e.push_back({5 + i, 5 + (i + 2) % 5, 1});  // inner pentagram
    e.push_back({i, 5 + i, 1});                // spokes
  }
  return Multigraph(10, std::move(e));
}

Multigraph make_dtri() {
  return Multigraph(3, {{0, 1, 2}, {0, 2, 2}, {1, 2, 2}});
}

// Two hubs a1=0, a2=1; triangle gadgets {x,y,z} with xy and xz doubled,
// yz single; y and z of gadgets 1,2 attach to a1, of gadgets 3,4 to a2.
// 4-regular on 14 vertices, deficiency 2.
Multigraph make_qt4() {
  std::vector<EdgeRecord> e;
  for (int i = 0; i < 4; ++i) {
    const int x = 2 + 3 * i, y = x + 1, z = x + 2;
    const int hub = i < 2 ? 0 : 1;
    e.push_back({x, y, 2});
    e.push_back({x, z, 2});
    e.push_back({y, z, 1});
    e.push_back({y, hub, 1});
    e.push_back({z, hub, 1});
  }
  return Multigraph(14, std::move(e));
}

// Hub a=0 joined to every vertex of a doubled triangle {1,2,3} and to the
// degree-4 vertex of two K5-plus-doubled-edges gadgets. 5-regular on 14
// vertices, deficiency 2.
Multigraph make_penta5() {
  std::vector<EdgeRecord> e;
  e.push_back({1, 2, 2});
  e.push_back({1, 3, 2});
  e.push_back({2, 3, 2});
  for (int v = 1; v <= 3; ++v) e.push_back({0, v, 1});
  for (int base : {4, 9}) {
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) e.push_back({base + i, base + j, 1});
    e.push_back({base + 0, base + 1, 1});  // doubles K5's {0,1}
    e.push_back({base + 2, base + 3, 1});  // doubles K5's {2,3}
    e.push_back({0, base + 4, 1});         // hub to the degree-4 vertex
  }
  return Multigraph(14, std::move(e));
}

}  // namespace

Multigraph fixture(std::string_view name) {
  if (name == "petersen") return make_petersen();
  if (name == "qt4") return make_qt4();
  if (name == "penta5") return make_penta5();
  if (name == "dtri") return make_dtri();
  throw InputError("unknown fixture '" + std::string(name) +
                   "' (known: petersen, qt4, penta5, dtri)");
}

}  // namespace regmatch
