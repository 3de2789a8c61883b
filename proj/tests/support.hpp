#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "dtdesc/graph.hpp"

namespace dtdesc::testsupport {

// Brute-force isomorphism by trying all vertex permutations. Usable to n=8.
inline bool isomorphic_bruteforce(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  const int n = a.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if (a.has_edge(u, v) != b.has_edge(perm[u], perm[v])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Random connected 4-regular simple graph by pairing half-edges, with retry.
inline Graph random_four_regular(int n, std::mt19937_64& rng) {
  for (;;) {
    std::vector<int> stubs;
    for (int v = 0; v < n; ++v)
      for (int i = 0; i < 4; ++i) stubs.push_back(v);
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::vector<std::pair<int, int>> edges;
    bool ok = true;
    std::map<std::pair<int, int>, int> used;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      int u = stubs[i], v = stubs[i + 1];
      if (u == v) {
        ok = false;
        break;
      }
      auto key = std::make_pair(std::min(u, v), std::max(u, v));
      if (used.count(key)) {
        ok = false;
        break;
      }
      used[key] = 1;
      edges.push_back(key);
    }
    if (!ok) continue;
    Graph g = Graph::from_edges(n, edges);
    if (g.is_connected()) return g;
  }
}

namespace detail {

// Max-flow with unit capacities between two contracted vertex pairs.
inline int maxflow_pairs(const Graph& g, int u1, int u2, int v1, int v2) {
  const int n = g.order();
  // node ids: 0..n-1 with u2 merged into u1 and v2 merged into v1
  auto node = [&](int v) {
    if (v == u2) return u1;
    if (v == v2) return v1;
    return v;
  };
  std::vector<std::vector<int>> cap(n, std::vector<int>(n, 0));
  for (auto [a, b] : g.edges()) {
    int x = node(a), y = node(b);
    if (x == y) continue;
    cap[x][y] += 1;
    cap[y][x] += 1;
  }
  int flow = 0;
  for (;;) {
    std::vector<int> parent(n, -1);
    parent[u1] = u1;
    std::vector<int> queue{u1};
    for (std::size_t qi = 0; qi < queue.size() && parent[v1] < 0; ++qi) {
      int x = queue[qi];
      for (int y = 0; y < n; ++y)
        if (cap[x][y] > 0 && parent[y] < 0) {
          parent[y] = x;
          queue.push_back(y);
        }
    }
    if (parent[v1] < 0) break;
    for (int y = v1; y != u1; y = parent[y]) {
      cap[parent[y]][y] -= 1;
      cap[y][parent[y]] += 1;
    }
    ++flow;
  }
  return flow;
}

}  // namespace detail

// Minimum edge cut with both sides of size >= 2, via max-flow over all
// contracted vertex-pair choices. Independent of the subset-scan route.
inline int min_internal_cut_maxflow(const Graph& g) {
  const int n = g.order();
  int best = 1 << 30;
  for (int u1 = 0; u1 < n; ++u1)
    for (int u2 = u1 + 1; u2 < n; ++u2)
      for (int v1 = 0; v1 < n; ++v1)
        for (int v2 = v1 + 1; v2 < n; ++v2) {
          if (v1 == u1 || v1 == u2 || v2 == u1 || v2 == u2) continue;
          best = std::min(best, detail::maxflow_pairs(g, u1, u2, v1, v2));
        }
  return best;
}

// All 4-regular simple graphs on n vertices up to isomorphism, by brute-force
// search over adjacency matrices with degree pruning.
inline std::vector<Graph> all_four_regular(int n) {
  std::vector<Graph> reps;
  std::vector<CanonicalForm> seen;
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::vector<int> deg(n, 0);
  std::vector<std::pair<int, int>> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == pairs.size()) {
      for (int v = 0; v < n; ++v)
        if (deg[v] != 4) return;
      Graph g = Graph::from_edges(n, chosen);
      if (!g.is_connected()) return;
      CanonicalForm cf = canonical_form(g);
      if (std::find(seen.begin(), seen.end(), cf) == seen.end()) {
        seen.push_back(cf);
        reps.push_back(g);
      }
      return;
    }
    auto [u, v] = pairs[idx];
    for (int w = 0; w < u; ++w)
      if (deg[w] != 4) return;                 // w has no pairs left
    if (deg[u] + (n - v) < 4) return;          // u cannot reach degree 4
    if (deg[u] < 4 && deg[v] < 4) {
      ++deg[u];
      ++deg[v];
      chosen.push_back(pairs[idx]);
      rec(idx + 1);
      chosen.pop_back();
      --deg[u];
      --deg[v];
    }
    rec(idx + 1);
  };
  rec(0);
  return reps;
}

}  // namespace dtdesc::testsupport
