#include "dtdesc/arith_c2.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <thread>

namespace dtdesc {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

KirchhoffMonomials spanning_tree_monomials(const Graph& g) {
  if (!g.is_connected()) fail(Errc::Disconnected, "spanning trees need a connected graph");
  const auto edges = g.edges();
  const int E = static_cast<int>(edges.size());
  if (E > 24) fail(Errc::TooManyEdges, "edge bound is 24");
  const int n = g.order();
  KirchhoffMonomials km;
  km.edges = edges;

  std::vector<int> chosen;
  std::function<void(int, UnionFind&)> rec = [&](int idx, UnionFind& uf) {
    const int need = (n - 1) - static_cast<int>(chosen.size());
    if (need == 0) {
      std::vector<int> mono;
      for (int e = 0; e < E; ++e)
        if (!std::binary_search(chosen.begin(), chosen.end(), e)) mono.push_back(e);
      km.monomials.push_back(std::move(mono));
      return;
    }
    if (E - idx < need) return;
    // include edges[idx] when it joins two components
    UnionFind copy = uf;
    if (copy.unite(edges[idx].first, edges[idx].second)) {
      chosen.push_back(idx);
      rec(idx + 1, copy);
      chosen.pop_back();
    }
    rec(idx + 1, uf);
  };
  UnionFind uf(n);
  rec(0, uf);
  return km;
}

std::int64_t spanning_tree_count(const Graph& g) {
  if (!g.is_connected()) fail(Errc::Disconnected, "matrix-tree needs a connected graph");
  const int n = g.order();
  if (n == 1) return 1;
  const int m = n - 1;
  // fraction-free elimination over the integers
  std::vector<std::vector<__int128>> a(m, std::vector<__int128>(m, 0));
  for (int i = 0; i < m; ++i) {
    a[i][i] = g.degree(i);
    for (int j = 0; j < m; ++j)
      if (i != j && g.has_edge(i, j)) a[i][j] = -1;
  }
  __int128 prev = 1;
  int sign = 1;
  for (int k = 0; k < m; ++k) {
    if (a[k][k] == 0) {
      int pivot = -1;
      for (int r = k + 1; r < m; ++r)
        if (a[r][k] != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) return 0;
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < m; ++i)
      for (int j = k + 1; j < m; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return static_cast<std::int64_t>(sign * a[m - 1][m - 1]);
}

namespace {

// Signed fundamental-cycle incidence rows for the non-tree edges.
struct CycleBasis {
  int loops = 0;
  std::vector<std::vector<int>> rows;  // loops x E, entries in {-1,0,1}
};

CycleBasis fundamental_cycles(const Graph& g, const std::vector<std::pair<int, int>>& edges) {
  const int n = g.order();
  const int E = static_cast<int>(edges.size());
  // DFS tree
  std::vector<int> parent(n, -1), parent_edge(n, -1), depth(n, 0);
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::vector<std::vector<std::pair<int, int>>> inc(n);  // vertex -> (other, edge idx)
  for (int e = 0; e < E; ++e) {
    inc[edges[e].first].push_back({edges[e].second, e});
    inc[edges[e].second].push_back({edges[e].first, e});
  }
  std::vector<char> in_tree(E, 0);
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (auto [v, e] : inc[u])
      if (!seen[v]) {
        seen[v] = 1;
        parent[v] = u;
        parent_edge[v] = e;
        depth[v] = depth[u] + 1;
        in_tree[e] = 1;
        stack.push_back(v);
      }
  }
  CycleBasis cb;
  for (int e = 0; e < E; ++e) {
    if (in_tree[e]) continue;
    std::vector<int> row(E, 0);
    auto [u, v] = edges[e];
    row[e] = 1;  // traverse u -> v along the edge, then v -> u through the tree
    int x = v, y = u;
    while (x != y) {
      if (depth[x] >= depth[y]) {
        int pe = parent_edge[x];
        // tree edge is stored as (min,max); traversing x -> parent(x)
        row[pe] += (edges[pe].first == x) ? 1 : -1;
        x = parent[x];
      } else {
        int pe = parent_edge[y];
        row[pe] += (edges[pe].first == y) ? -1 : 1;
        y = parent[y];
      }
    }
    cb.rows.push_back(std::move(row));
  }
  cb.loops = static_cast<int>(cb.rows.size());
  return cb;
}

int det_mod_p(std::vector<int> m, int l, int p, const std::vector<int>& inv) {
  int det = 1;
  for (int k = 0; k < l; ++k) {
    int pivot = -1;
    for (int r = k; r < l; ++r)
      if (m[r * l + k] % p != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != k) {
      for (int j = 0; j < l; ++j) std::swap(m[pivot * l + j], m[k * l + j]);
      det = p - det;
    }
    const int pk = m[k * l + k] % p;
    det = det * pk % p;
    const int ipk = inv[pk];
    for (int r = k + 1; r < l; ++r) {
      const int f = m[r * l + k] % p;
      if (!f) continue;
      const int mul = (p - f) * ipk % p;
      for (int j = k; j < l; ++j) m[r * l + j] = (m[r * l + j] + mul * m[k * l + j]) % p;
    }
  }
  return det % p;
}

std::vector<int> inverse_table(int p) {
  std::vector<int> inv(p, 0);
  for (int x = 1; x < p; ++x)
    for (int y = 1; y < p; ++y)
      if (x * y % p == 1) inv[x] = y;
  return inv;
}

}  // namespace

int dual_kirchhoff_eval(const Graph& g, const std::vector<int>& assignment, int p) {
  if (!is_prime(p)) fail(Errc::NotPrime, std::to_string(p));
  if (!g.is_connected()) fail(Errc::Disconnected, "evaluation needs a connected graph");
  const auto edges = g.edges();
  const int E = static_cast<int>(edges.size());
  if (static_cast<int>(assignment.size()) != E)
    fail(Errc::OutOfRange, "assignment must cover all edges");
  CycleBasis cb = fundamental_cycles(g, edges);
  const int l = cb.loops;
  std::vector<int> m(l * l, 0);
  for (int e = 0; e < E; ++e) {
    int a = ((assignment[e] % p) + p) % p;
    if (!a) continue;
    for (int i = 0; i < l; ++i) {
      if (!cb.rows[i][e]) continue;
      for (int j = 0; j < l; ++j) {
        int prod = cb.rows[i][e] * cb.rows[j][e];
        if (!prod) continue;
        int add = prod > 0 ? a : p - a;
        m[i * l + j] = (m[i * l + j] + add) % p;
      }
    }
  }
  return det_mod_p(std::move(m), l, p, inverse_table(p));
}

std::int64_t point_count(const Graph& g, int p, std::int64_t budget, int workers) {
  if (!is_prime(p)) fail(Errc::NotPrime, std::to_string(p));
  if (!g.is_connected()) fail(Errc::Disconnected, "point count needs a connected graph");
  const auto edges = g.edges();
  const int E = static_cast<int>(edges.size());
  double total = 1;
  for (int e = 0; e < E; ++e) total *= p;
  if (total > static_cast<double>(budget)) fail(Errc::BudgetExceeded, "p^|E| exceeds budget");
  const std::int64_t points = static_cast<std::int64_t>(total);

  CycleBasis cb = fundamental_cycles(g, edges);
  const int l = cb.loops;
  if (l == 0) return 0;  // the polynomial is identically 1
  const auto inv = inverse_table(p);

  // outer products of the cycle rows, reduced mod p
  std::vector<std::vector<int>> outer(E, std::vector<int>(l * l, 0));
  for (int e = 0; e < E; ++e)
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) {
        int prod = cb.rows[i][e] * cb.rows[j][e];
        outer[e][i * l + j] = ((prod % p) + p) % p;
      }

  if (workers <= 0) {
    workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers <= 0) workers = 1;
  }
  // fix enough leading digits to give each worker whole blocks
  int fixed = 0;
  std::int64_t blocks = 1;
  while (fixed < E && blocks < static_cast<std::int64_t>(workers) * 4) {
    blocks *= p;
    ++fixed;
  }
  const std::int64_t block_size = points / blocks;

  std::vector<std::int64_t> partial(workers, 0);
  auto run = [&](int w) {
    std::vector<int> m(l * l, 0);
    std::vector<int> digits(E, 0);
    std::int64_t count = 0;
    for (std::int64_t b = w; b < blocks; b += workers) {
      // decode the fixed digits
      std::fill(m.begin(), m.end(), 0);
      std::fill(digits.begin(), digits.end(), 0);
      std::int64_t code = b;
      for (int d = 0; d < fixed; ++d) {
        int val = static_cast<int>(code % p);
        code /= p;
        digits[E - 1 - d] = val;
        if (val)
          for (int ij = 0; ij < l * l; ++ij)
            m[ij] = (m[ij] + val * outer[E - 1 - d][ij]) % p;
      }
      for (std::int64_t step = 0; step < block_size; ++step) {
        if (det_mod_p(m, l, p, inv) == 0) ++count;
        if (step + 1 == block_size) break;
        // odometer over the free digits; a wrap adds p-1 increments, which is
        // the same as one more increment mod p
        int pos = 0;
        for (;;) {
          for (int ij = 0; ij < l * l; ++ij) m[ij] = (m[ij] + outer[pos][ij]) % p;
          if (++digits[pos] < p) break;
          digits[pos] = 0;
          ++pos;
        }
      }
    }
    partial[w] = count;
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(run, w);
  run(0);
  for (auto& th : pool) th.join();
  std::int64_t count = 0;
  for (auto c : partial) count += c;
  return count;
}

C2Result c2(const Graph& g, int p, std::int64_t budget, int workers) {
  if (g.order() < 3) fail(Errc::TooFewVertices, "need at least 3 vertices");
  C2Result res;
  res.p = p;
  res.point_count = point_count(g, p, budget, workers);
  const std::int64_t p2 = static_cast<std::int64_t>(p) * p;
  res.divisible = (res.point_count % p2) == 0;
  res.residue = res.divisible ? static_cast<int>((res.point_count / p2) % p) : 0;
  return res;
}

}  // namespace dtdesc
