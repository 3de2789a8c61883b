#include "dtdesc/dt_ops.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace dtdesc {

std::vector<DoubleTriangle> find_double_triangles(const Graph& g) {
  std::vector<DoubleTriangle> out;
  const int n = g.order();
  for (int b = 0; b < n; ++b)
    for (int c = b + 1; c < n; ++c) {
      if (!g.has_edge(b, c)) continue;
      std::uint64_t common = g.row(b) & g.row(c);
      std::vector<int> cn;
      while (common) {
        cn.push_back(std::countr_zero(common));
        common &= common - 1;
      }
      bool proper = cn.size() == 2;
      for (std::size_t i = 0; i < cn.size(); ++i)
        for (std::size_t j = i + 1; j < cn.size(); ++j) {
          DoubleTriangle dt;
          dt.v1 = cn[i];
          dt.v2 = b;
          dt.v3 = c;
          dt.v4 = cn[j];
          dt.proper = proper;
          out.push_back(dt);
        }
    }
  return out;
}

std::vector<DteSite> dte_sites(const Graph& g) {
  std::vector<DteSite> out;
  for (const auto& t : triangles(g))
    for (int apex : t) {
      std::uint64_t m = g.row(apex);
      while (m) {
        int w = std::countr_zero(m);
        m &= m - 1;
        if (w == t[0] || w == t[1] || w == t[2]) continue;
        out.push_back(DteSite{t, apex, w});
      }
    }
  return out;
}

namespace {

void validate_site(const Graph& g, const DteSite& s) {
  auto [a, b, c] = s.triangle;
  if (a < 0 || c >= g.order() || !(a < b && b < c))
    fail(Errc::InvalidSite, "triangle not sorted or out of range");
  if (!g.has_edge(a, b) || !g.has_edge(b, c) || !g.has_edge(a, c))
    fail(Errc::InvalidSite, "not a triangle");
  if (s.apex != a && s.apex != b && s.apex != c) fail(Errc::InvalidSite, "apex not in triangle");
  if (s.pendant == a || s.pendant == b || s.pendant == c)
    fail(Errc::InvalidSite, "pendant inside triangle");
  if (s.pendant < 0 || s.pendant >= g.order() || !g.has_edge(s.apex, s.pendant))
    fail(Errc::InvalidSite, "pendant not adjacent to apex");
}

std::pair<int, int> other_two(const DteSite& s) {
  std::vector<int> o;
  for (int v : s.triangle)
    if (v != s.apex) o.push_back(v);
  return {o[0], o[1]};
}

}  // namespace

Graph dte(const Graph& g, const DteSite& site) {
  validate_site(g, site);
  const int n = g.order();
  if (n + 1 > kMaxVertices) fail(Errc::TooLarge, "vertex limit reached");
  auto [x, y] = other_two(site);
  const int w = n;
  std::vector<std::pair<int, int>> e;
  for (auto [u, v] : g.edges()) {
    if ((u == std::min(x, y) && v == std::max(x, y)) ||
        (u == std::min(site.apex, site.pendant) && v == std::max(site.apex, site.pendant)))
      continue;
    e.emplace_back(u, v);
  }
  e.emplace_back(x, w);
  e.emplace_back(y, w);
  e.emplace_back(site.apex, w);
  e.emplace_back(site.pendant, w);
  return Graph::from_edges(n + 1, e);
}

DoubleTriangle created_double_triangle(const Graph& g, const DteSite& site) {
  validate_site(g, site);
  auto [x, y] = other_two(site);
  DoubleTriangle dt;
  dt.v2 = std::min(site.apex, g.order());
  dt.v3 = std::max(site.apex, g.order());
  dt.v1 = std::min(x, y);
  dt.v4 = std::max(x, y);
  dt.proper = true;  // common neighbours of the shared edge are exactly {v1,v4}
  return dt;
}

Graph dtr(const Graph& g, const DoubleTriangle& dt) {
  if (!dt.proper) fail(Errc::ImproperDoubleTriangle, "reduction requires a proper double triangle");
  for (int v : {dt.v1, dt.v2, dt.v3, dt.v4})
    if (v < 0 || v >= g.order()) fail(Errc::OutOfRange, "double triangle vertex out of range");
  if (!g.has_edge(dt.v1, dt.v2) || !g.has_edge(dt.v1, dt.v3) || !g.has_edge(dt.v2, dt.v3) ||
      !g.has_edge(dt.v2, dt.v4) || !g.has_edge(dt.v3, dt.v4))
    fail(Errc::InvalidSite, "not a double triangle");
  if (std::popcount(g.row(dt.v2) & g.row(dt.v3)) != 2)
    fail(Errc::ImproperDoubleTriangle, "shared edge lies in a third triangle");
  if (g.has_edge(dt.v1, dt.v4))
    fail(Errc::WouldCreateMultiEdge, "outer vertices already adjacent");

  const int n = g.order();
  const int gone = dt.v3;
  auto relabel = [&](int v) { return v > gone ? v - 1 : v; };
  std::vector<std::pair<int, int>> e;
  auto push = [&](int u, int v) {
    u = relabel(u);
    v = relabel(v);
    e.emplace_back(std::min(u, v), std::max(u, v));
  };
  for (auto [u, v] : g.edges()) {
    bool drops = (u == gone || v == gone);
    if (!drops) {
      push(u, v);
      continue;
    }
    int other = (u == gone) ? v : u;
    if (other == dt.v1 || other == dt.v2 || other == dt.v4) continue;  // removed edges
    push(dt.v2, other);  // v3's leftover edge moves to the merged vertex
  }
  push(dt.v1, dt.v4);
  return Graph::from_edges(n - 1, e);
}

std::vector<Graph> decompletions(const Graph& g) {
  const int n = g.order();
  std::map<CanonicalForm, Graph> classes;
  for (int gone = 0; gone < n; ++gone) {
    std::vector<std::pair<int, int>> e;
    for (auto [u, v] : g.edges()) {
      if (u == gone || v == gone) continue;
      auto relabel = [&](int x) { return x > gone ? x - 1 : x; };
      e.emplace_back(relabel(u), relabel(v));
    }
    Graph h = Graph::from_edges(n - 1, e);
    classes.emplace(canonical_form(h), h);
  }
  std::vector<Graph> out;
  for (auto& [cf, h] : classes) out.push_back(h);
  return out;
}

Graph completion(const Graph& h) {
  const int n = h.order();
  if (n + 1 > kMaxVertices) fail(Errc::TooLarge, "vertex limit reached");
  std::vector<int> deg3;
  for (int v = 0; v < n; ++v) {
    int d = h.degree(v);
    if (d == 3)
      deg3.push_back(v);
    else if (d != 4)
      fail(Errc::BadDegreeSequence, "degrees must be 3 or 4");
  }
  if (deg3.size() != 4) fail(Errc::BadDegreeSequence, "need exactly four degree-3 vertices");
  std::vector<std::pair<int, int>> e = h.edges();
  for (int v : deg3) e.emplace_back(v, n);
  return Graph::from_edges(n + 1, e);
}

Graph product(const Graph& g1, const std::array<int, 3>& t1, const Graph& g2,
              const std::array<int, 3>& t2) {
  auto check_triangle = [](const Graph& g, const std::array<int, 3>& t) {
    if (!g.has_edge(t[0], t[1]) || !g.has_edge(t[1], t[2]) || !g.has_edge(t[0], t[2]))
      fail(Errc::NotATriangle, "identified vertices must form a triangle");
  };
  check_triangle(g1, t1);
  check_triangle(g2, t2);
  std::array<int, 3> a = t1, b = t2;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());

  const int n1 = g1.order(), n2 = g2.order();
  if (n1 + n2 - 3 > kMaxVertices) fail(Errc::TooLarge, "vertex limit reached");
  // g2's vertices map: triangle -> g1's triangle (sorted order), rest appended.
  std::vector<int> map2(n2, -1);
  for (int i = 0; i < 3; ++i) map2[b[i]] = a[i];
  int next = n1;
  for (int v = 0; v < n2; ++v)
    if (map2[v] < 0) map2[v] = next++;

  auto in_tri = [](const std::array<int, 3>& t, int u, int v) {
    auto has = [&](int x) { return x == t[0] || x == t[1] || x == t[2]; };
    return has(u) && has(v);
  };
  std::vector<std::pair<int, int>> e;
  for (auto [u, v] : g1.edges())
    if (!in_tri(a, u, v)) e.emplace_back(u, v);
  for (auto [u, v] : g2.edges()) {
    if (in_tri(b, u, v)) continue;
    int mu = map2[u], mv = map2[v];
    e.emplace_back(std::min(mu, mv), std::max(mu, mv));
  }
  return Graph::from_edges(n1 + n2 - 3, e);
}

std::vector<std::pair<Graph, Graph>> product_splits(const Graph& g) {
  std::vector<std::pair<Graph, Graph>> out;
  std::vector<std::pair<CanonicalForm, CanonicalForm>> seen;
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        if (g.has_edge(a, b) || g.has_edge(a, c) || g.has_edge(b, c)) continue;
        std::uint64_t cut = (1ull << a) | (1ull << b) | (1ull << c);
        // components of g - {a,b,c}
        std::uint64_t full = (n == 64) ? ~0ull : ((1ull << n) - 1);
        std::uint64_t alive = full & ~cut;
        std::vector<std::uint64_t> comps;
        std::uint64_t left = alive;
        while (left) {
          std::uint64_t start = left & (~left + 1);
          std::uint64_t seen_mask = start, frontier = start;
          while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            std::uint64_t nb = g.row(v) & alive & ~seen_mask;
            seen_mask |= nb;
            frontier |= nb;
          }
          comps.push_back(seen_mask);
          left &= ~seen_mask;
        }
        if (comps.size() != 2) continue;
        if (std::popcount(comps[0]) < 2 || std::popcount(comps[1]) < 2) continue;
        bool balanced = true;
        for (int t : {a, b, c})
          for (const auto& comp : comps)
            if (std::popcount(g.row(t) & comp) != 2) balanced = false;
        if (!balanced) continue;

        auto side_graph = [&](std::uint64_t comp) {
          std::vector<int> keep;
          std::uint64_t m = comp | cut;
          while (m) {
            keep.push_back(std::countr_zero(m));
            m &= m - 1;
          }
          std::vector<int> idx(n, -1);
          for (std::size_t i = 0; i < keep.size(); ++i) idx[keep[i]] = static_cast<int>(i);
          std::vector<std::pair<int, int>> e;
          for (auto [u, v] : g.edges())
            if (idx[u] >= 0 && idx[v] >= 0) e.emplace_back(idx[u], idx[v]);
          // restore the identified triangle
          e.emplace_back(idx[a], idx[b]);
          e.emplace_back(idx[a], idx[c]);
          e.emplace_back(idx[b], idx[c]);
          return Graph::from_edges(static_cast<int>(keep.size()), e);
        };
        Graph s1 = side_graph(comps[0]);
        Graph s2 = side_graph(comps[1]);
        auto c1 = canonical_form(s1), c2 = canonical_form(s2);
        if (c2 < c1) {
          std::swap(s1, s2);
          std::swap(c1, c2);
        }
        auto key = std::make_pair(c1, c2);
        if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
          seen.push_back(key);
          out.emplace_back(s1, s2);
        }
      }
  return out;
}

namespace {

// Proper double triangles whose reduction stays simple.
std::vector<DoubleTriangle> reducible_dts(const Graph& g) {
  std::vector<DoubleTriangle> out;
  for (const auto& dt : find_double_triangles(g))
    if (dt.proper && !g.has_edge(dt.v1, dt.v4)) out.push_back(dt);
  return out;
}

}  // namespace

std::vector<CanonicalForm> ancestor(const Graph& g) {
  std::vector<CanonicalForm> result;
  std::vector<Graph> work{g};
  int guard = 64 * (g.order() + 1);
  while (!work.empty()) {
    if (--guard < 0) fail(Errc::NonTerminating, "reduction guard exceeded");
    Graph cur = work.back();
    work.pop_back();
    auto dts = reducible_dts(cur);
    if (!dts.empty()) {
      work.push_back(dtr(cur, dts.front()));
      continue;
    }
    auto splits = product_splits(cur);
    if (!splits.empty()) {
      work.push_back(splits.front().first);
      work.push_back(splits.front().second);
      continue;
    }
    result.push_back(canonical_form(cur));
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<CanonicalForm> ancestor_randomized(const Graph& g, std::mt19937_64& rng) {
  std::vector<CanonicalForm> result;
  std::vector<Graph> work{g};
  int guard = 64 * (g.order() + 1);
  while (!work.empty()) {
    if (--guard < 0) fail(Errc::NonTerminating, "reduction guard exceeded");
    Graph cur = work.back();
    work.pop_back();
    auto dts = reducible_dts(cur);
    auto splits = product_splits(cur);
    std::size_t moves = dts.size() + splits.size();
    if (moves == 0) {
      result.push_back(canonical_form(cur));
      continue;
    }
    std::size_t pick = std::uniform_int_distribution<std::size_t>(0, moves - 1)(rng);
    if (pick < dts.size()) {
      work.push_back(dtr(cur, dts[pick]));
    } else {
      const auto& s = splits[pick - dts.size()];
      work.push_back(s.first);
      work.push_back(s.second);
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace dtdesc
