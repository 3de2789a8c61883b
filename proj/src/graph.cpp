#include "dtdesc/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>

namespace dtdesc {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::LoopEdge: return "LoopEdge";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::MalformedGraph6: return "MalformedGraph6";
    case Errc::TooLarge: return "TooLarge";
    case Errc::Disconnected: return "Disconnected";
    case Errc::InvalidSite: return "InvalidSite";
    case Errc::ImproperDoubleTriangle: return "ImproperDoubleTriangle";
    case Errc::WouldCreateMultiEdge: return "WouldCreateMultiEdge";
    case Errc::BadDegreeSequence: return "BadDegreeSequence";
    case Errc::NotATriangle: return "NotATriangle";
    case Errc::NonTerminating: return "NonTerminating";
    case Errc::NotZigzagPartitionable: return "NotZigzagPartitionable";
    case Errc::MixedChains: return "MixedChains";
    case Errc::SwapConventionUnsatisfiable: return "SwapConventionUnsatisfiable";
    case Errc::NegativeEntry: return "NegativeEntry";
    case Errc::ZeroInClosed: return "ZeroInClosed";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::NotPrime: return "NotPrime";
    case Errc::TooFewVertices: return "TooFewVertices";
    case Errc::TooManyEdges: return "TooManyEdges";
    case Errc::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case Errc::UnsupportedLevel: return "UnsupportedLevel";
  }
  return "Unknown";
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 1 || n > kMaxVertices) fail(Errc::OutOfRange, "vertex count " + std::to_string(n));
  Graph g;
  g.n_ = n;
  g.adj_.assign(n, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      fail(Errc::OutOfRange, "edge endpoint outside [0," + std::to_string(n) + ")");
    if (u == v) fail(Errc::LoopEdge, "loop at " + std::to_string(u));
    if (g.has_edge(u, v)) fail(Errc::DuplicateEdge, std::to_string(u) + "-" + std::to_string(v));
    g.adj_[u] |= 1ull << v;
    g.adj_[v] |= 1ull << u;
  }
  return g;
}

Graph Graph::complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return from_edges(n, e);
}

Graph Graph::circulant_1_2(int n) {
  if (n < 5) fail(Errc::OutOfRange, "circulant C_n(1,2) needs n >= 5");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int d : {1, 2}) {
      int j = (i + d) % n;
      e.emplace_back(std::min(i, j), std::max(i, j));
    }
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());
  return from_edges(n, e);
}

int Graph::degree(int v) const { return std::popcount(adj_[v]); }

int Graph::edge_count() const {
  int s = 0;
  for (int v = 0; v < n_; ++v) s += degree(v);
  return s / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n_; ++u) {
    std::uint64_t m = adj_[u] >> (u + 1) << (u + 1);
    while (m) {
      int v = std::countr_zero(m);
      m &= m - 1;
      e.emplace_back(u, v);
    }
  }
  return e;
}

bool Graph::is_connected() const {
  if (n_ == 0) return false;
  std::uint64_t seen = 1;
  std::uint64_t frontier = 1;
  while (frontier) {
    int v = std::countr_zero(frontier);
    frontier &= frontier - 1;
    std::uint64_t nb = adj_[v] & ~seen;
    seen |= nb;
    frontier |= nb;
  }
  return std::popcount(seen) == n_;
}

std::vector<std::array<int, 3>> triangles(const Graph& g) {
  std::vector<std::array<int, 3>> out;
  const int n = g.order();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!g.has_edge(i, j)) continue;
      std::uint64_t common = g.row(i) & g.row(j);
      common >>= (j + 1);
      std::uint64_t m = common << (j + 1);
      while (m) {
        int k = std::countr_zero(m);
        m &= m - 1;
        out.push_back({i, j, k});
      }
    }
  return out;
}

int triangle_count(const Graph& g) { return static_cast<int>(triangles(g).size()); }

bool is_four_regular(const Graph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != 4) return false;
  return g.order() > 0;
}

EdgeCutReport is_internally_six_edge_connected(const Graph& g) {
  const int n = g.order();
  if (n > 30) fail(Errc::TooLarge, "subset scan bound is 30 vertices");
  if (!g.is_connected()) fail(Errc::Disconnected, "graph must be connected");
  EdgeCutReport rep;
  rep.passed = true;
  if (n < 4) return rep;
  // Fix vertex 0 on the S side; enumerate the rest.
  const std::uint64_t full = (n == 64) ? ~0ull : ((1ull << n) - 1);
  for (std::uint64_t t = 0; t < (1ull << (n - 1)); ++t) {
    std::uint64_t s = (t << 1) | 1ull;
    int size = std::popcount(s);
    if (size < 2 || size > n - 2) continue;
    int crossing = 0;
    std::uint64_t rest = full & ~s;
    std::uint64_t m = s;
    while (m) {
      int v = std::countr_zero(m);
      m &= m - 1;
      crossing += std::popcount(g.row(v) & rest);
      if (crossing >= 6) break;
    }
    if (crossing < 6) {
      rep.passed = false;
      rep.crossing_edges = crossing;
      std::vector<int> w;
      std::uint64_t ws = s;
      while (ws) {
        w.push_back(std::countr_zero(ws));
        ws &= ws - 1;
      }
      rep.witness = std::move(w);
      return rep;
    }
  }
  return rep;
}

namespace {

bool connected_after_removal(const Graph& g, std::uint64_t removed) {
  const int n = g.order();
  std::uint64_t full = (n == 64) ? ~0ull : ((1ull << n) - 1);
  std::uint64_t alive = full & ~removed;
  if (!alive) return true;
  std::uint64_t start = alive & (~alive + 1);
  std::uint64_t seen = start, frontier = start;
  while (frontier) {
    int v = std::countr_zero(frontier);
    frontier &= frontier - 1;
    std::uint64_t nb = g.row(v) & alive & ~seen;
    seen |= nb;
    frontier |= nb;
  }
  return seen == alive;
}

}  // namespace

std::vector<std::array<int, 3>> vertex_three_cuts(const Graph& g) {
  std::vector<std::array<int, 3>> cuts;
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        std::uint64_t removed = (1ull << a) | (1ull << b) | (1ull << c);
        if (!connected_after_removal(g, removed)) cuts.push_back({a, b, c});
      }
  return cuts;
}

bool contains_k4(const Graph& g) {
  for (const auto& t : triangles(g)) {
    std::uint64_t common = g.row(t[0]) & g.row(t[1]) & g.row(t[2]);
    if (common) return true;
  }
  return false;
}

bool contains_triple_triangle(const Graph& g) {
  const int n = g.order();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.has_edge(u, v) && std::popcount(g.row(u) & g.row(v)) >= 3) return true;
  return false;
}

// ---- graph6 ----

namespace {

void append_bits(std::string& out, const std::vector<bool>& bits) {
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int b = 0;
    for (int j = 0; j < 6; ++j) {
      b <<= 1;
      if (i + j < bits.size() && bits[i + j]) b |= 1;
    }
    out.push_back(static_cast<char>(b + 63));
  }
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  std::vector<bool> bits;
  bits.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j));
  append_bits(out, bits);
  return out;
}

Graph from_graph6(const std::string& s) {
  if (s.empty()) fail(Errc::MalformedGraph6, "empty input");
  std::size_t pos = 0;
  int n;
  if (static_cast<unsigned char>(s[0]) == 126) {
    if (s.size() < 4) fail(Errc::MalformedGraph6, "truncated order field");
    n = 0;
    for (int k = 1; k <= 3; ++k) {
      int c = static_cast<unsigned char>(s[k]) - 63;
      if (c < 0 || c > 63) fail(Errc::MalformedGraph6, "bad order byte");
      n = (n << 6) | c;
    }
    pos = 4;
  } else {
    n = static_cast<unsigned char>(s[0]) - 63;
    if (n < 0) fail(Errc::MalformedGraph6, "bad order byte");
    pos = 1;
  }
  if (n < 1 || n > kMaxVertices) fail(Errc::MalformedGraph6, "order out of range");
  const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (s.size() != pos + nbytes) fail(Errc::MalformedGraph6, "length mismatch");
  std::vector<bool> bits;
  bits.reserve(nbytes * 6);
  for (std::size_t k = pos; k < s.size(); ++k) {
    int c = static_cast<unsigned char>(s[k]) - 63;
    if (c < 0 || c > 63) fail(Errc::MalformedGraph6, "byte outside graph6 alphabet");
    for (int j = 5; j >= 0; --j) bits.push_back((c >> j) & 1);
  }
  for (std::size_t k = nbits; k < bits.size(); ++k)
    if (bits[k]) fail(Errc::MalformedGraph6, "nonzero padding");
  std::vector<std::pair<int, int>> e;
  std::size_t idx = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++idx)
      if (bits[idx]) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

// ---- canonical labelling ----
//
// Colour refinement seeded with (degree, triangle participation, distance
// multiset), then backtracking over the first non-singleton colour class,
// taking the lexicographically least graph6 bit string over all leaves.

namespace {

std::vector<int> rank_compress(std::vector<std::vector<int>>& sig) {
  const int n = static_cast<int>(sig.size());
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
  std::vector<int> col(n, 0);
  int c = 0;
  for (int i = 0; i < n; ++i) {
    if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++c;
    col[order[i]] = c;
  }
  return col;
}

std::vector<int> refine(const Graph& g, std::vector<int> col) {
  const int n = g.order();
  for (;;) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(col[v]);
      std::vector<int> nb;
      std::uint64_t m = g.row(v);
      while (m) {
        nb.push_back(col[std::countr_zero(m)]);
        m &= m - 1;
      }
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    std::vector<int> next = rank_compress(sig);
    if (next == col) return col;
    col = std::move(next);
  }
}

std::vector<int> seed_colours(const Graph& g) {
  const int n = g.order();
  std::vector<int> tri_part(n, 0);
  for (const auto& t : triangles(g))
    for (int v : t) ++tri_part[v];
  std::vector<std::vector<int>> sig(n);
  for (int v = 0; v < n; ++v) {
    // BFS distances from v
    std::vector<int> dist(n, n + 1);
    dist[v] = 0;
    std::queue<int> q;
    q.push(v);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      std::uint64_t m = g.row(u);
      while (m) {
        int w = std::countr_zero(m);
        m &= m - 1;
        if (dist[w] > dist[u] + 1) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    std::sort(dist.begin(), dist.end());
    sig[v].push_back(g.degree(v));
    sig[v].push_back(tri_part[v]);
    sig[v].insert(sig[v].end(), dist.begin(), dist.end());
  }
  return rank_compress(sig);
}

// Upper-triangle bits of the relabelled graph in graph6 column order.
std::vector<bool> bits_under_labelling(const Graph& g, const std::vector<int>& newlabel) {
  const int n = g.order();
  std::vector<int> inv(n);
  for (int v = 0; v < n; ++v) inv[newlabel[v]] = v;
  std::vector<bool> bits;
  bits.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(inv[i], inv[j]));
  return bits;
}

void canon_search(const Graph& g, std::vector<int> col, std::vector<bool>& best,
                  std::vector<int>& best_label, bool& have) {
  const int n = g.order();
  col = refine(g, col);
  int target = -1;
  {
    std::vector<int> count(n, 0);
    for (int v = 0; v < n; ++v) ++count[col[v]];
    for (int c = 0; c < n; ++c)
      if (count[c] >= 2) {
        target = c;
        break;
      }
  }
  if (target < 0) {
    std::vector<bool> bits = bits_under_labelling(g, col);
    if (!have || bits < best) {
      best = bits;
      best_label = col;
      have = true;
    }
    return;
  }
  for (int v = 0; v < n; ++v) {
    if (col[v] != target) continue;
    std::vector<int> next = col;
    next[v] = n;  // individualise
    canon_search(g, std::move(next), best, best_label, have);
  }
}

}  // namespace

Graph canonical_graph(const Graph& g) {
  const int n = g.order();
  if (n == 0) fail(Errc::OutOfRange, "empty graph");
  std::vector<bool> best;
  std::vector<int> best_label;
  bool have = false;
  canon_search(g, seed_colours(g), best, best_label, have);
  std::vector<std::pair<int, int>> e;
  for (auto [u, v] : g.edges()) {
    int a = best_label[u], b = best_label[v];
    e.emplace_back(std::min(a, b), std::max(a, b));
  }
  return Graph::from_edges(n, e);
}

CanonicalForm canonical_form(const Graph& g) {
  Graph cg = canonical_graph(g);
  return CanonicalForm{g.order(), to_graph6(cg)};
}

}  // namespace dtdesc
