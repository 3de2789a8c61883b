#include "dtdesc/zigzag.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace dtdesc {

namespace {

using Tri = std::array<int, 3>;

std::pair<int, int> tri_shared_edge(const Tri& a, const Tri& b) {
  std::vector<int> common;
  for (int u : a)
    for (int v : b)
      if (u == v) common.push_back(u);
  if (common.size() != 2) return {-1, -1};
  return {std::min(common[0], common[1]), std::max(common[0], common[1])};
}

}  // namespace

ZigzagDecomposition zigzag_decomposition(const Graph& g) {
  const int n = g.order();
  const auto tris = triangles(g);
  const int t = static_cast<int>(tris.size());

  // every edge in at most two triangles
  std::map<std::pair<int, int>, std::vector<int>> edge_tris;
  for (int i = 0; i < t; ++i) {
    const Tri& tr = tris[i];
    for (auto [a, b] : {std::pair{tr[0], tr[1]}, std::pair{tr[0], tr[2]}, std::pair{tr[1], tr[2]}}) {
      auto& lst = edge_tris[{a, b}];
      lst.push_back(i);
      if (lst.size() > 2)
        fail(Errc::NotZigzagPartitionable, "edge lies in three triangles");
    }
  }

  // triangle adjacency; branching means no zigzag partition
  std::vector<std::vector<int>> tadj(t);
  for (const auto& [e, lst] : edge_tris)
    if (lst.size() == 2) {
      tadj[lst[0]].push_back(lst[1]);
      tadj[lst[1]].push_back(lst[0]);
    }
  for (int i = 0; i < t; ++i)
    if (tadj[i].size() > 2)
      fail(Errc::NotZigzagPartitionable, "triangle shares edges with three others");

  ZigzagDecomposition dec;

  std::vector<int> piece_of(t, -1);
  std::vector<char> seen(t, 0);
  for (int i = 0; i < t; ++i) {
    if (seen[i]) continue;
    // walk the path/cycle through i
    std::vector<int> order;
    bool cyclic = false;
    if (tadj[i].size() <= 1) {
      // endpoint: walk forward
      int prev = -1, cur = i;
      while (cur != -1) {
        order.push_back(cur);
        seen[cur] = 1;
        int next = -1;
        for (int nb : tadj[cur])
          if (nb != prev) next = nb;
        prev = cur;
        cur = next;
      }
    } else {
      // possibly a cycle; walk until return or endpoint, then extend backwards
      int prev = i, cur = tadj[i][0];
      order.push_back(i);
      seen[i] = 1;
      while (cur != i && cur != -1) {
        order.push_back(cur);
        seen[cur] = 1;
        int next = -1;
        for (int nb : tadj[cur])
          if (nb != prev) next = nb;
        prev = cur;
        cur = next;
      }
      if (cur == i) {
        cyclic = true;
      } else {
        // hit an endpoint; extend from i in the other direction
        std::vector<int> back;
        prev = i;
        cur = tadj[i][1];
        while (cur != -1) {
          back.push_back(cur);
          seen[cur] = 1;
          int next = -1;
          for (int nb : tadj[cur])
            if (nb != prev) next = nb;
          prev = cur;
          cur = next;
        }
        std::reverse(back.begin(), back.end());
        back.insert(back.end(), order.begin(), order.end());
        order = std::move(back);
      }
    }

    ZigzagPiece piece;
    piece.cyclic = cyclic;
    for (int idx : order) {
      piece.tris.push_back(tris[idx]);
      piece_of[idx] = static_cast<int>(dec.pieces.size());
    }

    // vertex degrees within the piece
    std::set<std::pair<int, int>> pedges;
    std::set<int> pverts;
    for (const Tri& tr : piece.tris) {
      for (int v : tr) pverts.insert(v);
      pedges.insert({std::min(tr[0], tr[1]), std::max(tr[0], tr[1])});
      pedges.insert({std::min(tr[0], tr[2]), std::max(tr[0], tr[2])});
      pedges.insert({std::min(tr[1], tr[2]), std::max(tr[1], tr[2])});
    }
    std::map<int, int> pdeg;
    for (auto [u, v] : pedges) {
      ++pdeg[u];
      ++pdeg[v];
    }
    const int z = piece.length();
    if (cyclic) {
      if (static_cast<int>(pverts.size()) != z)
        fail(Errc::NotZigzagPartitionable, "cyclic piece is not a closed zigzag");
      for (int v : pverts) piece.internals.push_back(v);
    } else {
      if (static_cast<int>(pverts.size()) != z + 2)
        fail(Errc::NotZigzagPartitionable, "piece revisits a vertex");
      for (auto [v, d] : pdeg) {
        if (d == 2)
          piece.ends.push_back(v);
        else if (d == 3)
          piece.chords.push_back(v);
        else
          piece.internals.push_back(v);
      }
      if (z >= 2 && piece.ends.size() != 2)
        fail(Errc::NotZigzagPartitionable, "open piece without two ends");
    }
    dec.pieces.push_back(std::move(piece));
  }

  // vertices in no triangle
  {
    std::vector<char> in_tri(n, 0);
    for (const Tri& tr : tris)
      for (int v : tr) in_tri[v] = 1;
    for (int v = 0; v < n; ++v)
      if (!in_tri[v]) dec.non_triangle_vertices.push_back(v);
  }

  // chain assembly: piece ends identified at shared vertices
  const int k = dec.k();
  std::map<int, std::vector<int>> vertex_pieces;  // end-capable vertex -> pieces
  for (int p = 0; p < k; ++p) {
    if (dec.pieces[p].cyclic) continue;
    std::vector<int> cand;
    if (dec.pieces[p].length() == 1) {
      cand.assign(dec.pieces[p].tris[0].begin(), dec.pieces[p].tris[0].end());
    } else {
      cand = dec.pieces[p].ends;
    }
    for (int v : cand) vertex_pieces[v].push_back(p);
  }
  std::vector<std::vector<std::pair<int, int>>> links(k);  // piece -> (other, via vertex)
  for (auto& [v, ps] : vertex_pieces) {
    if (ps.size() == 1) continue;
    if (ps.size() > 2) fail(Errc::NotZigzagPartitionable, "vertex shared by three pieces");
    dec.shared_ends.push_back(v);
    links[ps[0]].push_back({ps[1], v});
    links[ps[1]].push_back({ps[0], v});
  }
  for (int p = 0; p < k; ++p)
    if (links[p].size() > 2) fail(Errc::NotZigzagPartitionable, "piece joined at three ends");

  // fix ends of length-1 pieces: attached corners first, smallest corners after
  for (int p = 0; p < k; ++p) {
    ZigzagPiece& piece = dec.pieces[p];
    if (piece.cyclic || piece.length() != 1) continue;
    std::vector<int> attached;
    for (auto& [q, v] : links[p]) attached.push_back(v);
    std::sort(attached.begin(), attached.end());
    attached.erase(std::unique(attached.begin(), attached.end()), attached.end());
    std::vector<int> free_corners;
    for (int v : piece.tris[0])
      if (std::find(attached.begin(), attached.end(), v) == attached.end())
        free_corners.push_back(v);
    std::sort(free_corners.begin(), free_corners.end());
    piece.ends = attached;
    while (piece.ends.size() < 2 && !free_corners.empty()) {
      piece.ends.push_back(free_corners.front());
      free_corners.erase(free_corners.begin());
    }
    piece.chords = free_corners;  // leftover corner plays both chord roles
    piece.internals.clear();
  }

  // chains: connected components of the piece-link graph
  std::vector<char> pseen(k, 0);
  for (int p = 0; p < k; ++p) {
    if (pseen[p]) continue;
    if (dec.pieces[p].cyclic) {
      pseen[p] = 1;
      dec.chains.push_back(PieceChain{{p}, true});
      continue;
    }
    if (links[p].size() <= 1) {
      // start of an open chain
      PieceChain chain;
      chain.closed = false;
      int prev_vertex = -1, cur = p;
      while (cur != -1) {
        chain.pieces.push_back(cur);
        pseen[cur] = 1;
        int next = -1;
        for (auto& [q, v] : links[cur])
          if (v != prev_vertex && !pseen[q]) {
            next = q;
            prev_vertex = v;
            break;
          }
        cur = next;
      }
      dec.chains.push_back(std::move(chain));
    }
  }
  // remaining unseen pieces sit on closed chains
  for (int p = 0; p < k; ++p) {
    if (pseen[p]) continue;
    PieceChain chain;
    chain.closed = true;
    int prev_vertex = -1, cur = p;
    while (cur != -1 && !pseen[cur]) {
      chain.pieces.push_back(cur);
      pseen[cur] = 1;
      int next = -1;
      for (auto& [q, v] : links[cur])
        if (v != prev_vertex) {
          next = q;
          prev_vertex = v;
          break;
        }
      cur = next;
    }
    dec.chains.push_back(std::move(chain));
  }
  return dec;
}

int level(const Graph& g) { return g.order() - triangle_count(g); }

ChainVector chain_vector(const Graph& g) {
  ZigzagDecomposition dec = zigzag_decomposition(g);
  bool any_closed = false;
  for (const auto& c : dec.chains) any_closed |= c.closed;
  if (any_closed) {
    if (dec.chains.size() != 1 || dec.m() != 0)
      fail(Errc::MixedChains, "closed chain mixed with other structure");
    const auto& c = dec.chains[0];
    if (c.pieces.size() == 1 && !dec.pieces[c.pieces[0]].cyclic)
      fail(Errc::MixedChains, "single open piece closing on itself");
    std::vector<int> lens;
    for (int p : c.pieces) lens.push_back(dec.pieces[p].length());
    return normalize(lens, true);
  }
  std::vector<int> flat;
  for (const auto& c : dec.chains) {
    for (int p : c.pieces) flat.push_back(dec.pieces[p].length());
    flat.push_back(0);
  }
  return normalize(flat, false);
}

DteType classify_dte_site(const Graph& g, const DteSite& site) {
  zigzag_decomposition(g);  // NotZigzagPartitionable guard

  std::vector<int> others;
  for (int v : site.triangle)
    if (v != site.apex) others.push_back(v);
  if (others.size() != 2 || !g.has_edge(site.apex, site.pendant))
    fail(Errc::InvalidSite, "bad site");

  const int apex = site.apex, v4 = site.pendant;
  auto common_neighbors = [&](int u, int v) {
    std::vector<int> out;
    std::uint64_t m = g.row(u) & g.row(v);
    while (m) {
      out.push_back(std::countr_zero(m));
      m &= m - 1;
    }
    return out;
  };

  // a: pendant edge flanked by a triangle avoiding the site
  int a = 0;
  for (int v5 : common_neighbors(apex, v4))
    if (v5 != others[0] && v5 != others[1]) a = 1;
  // b: opposite edge flanked by a second triangle
  int b = 0;
  for (int v6 : common_neighbors(others[0], others[1]))
    if (v6 != apex && v6 != v4) b = 1;

  // v1 must have no common neighbour with the apex besides v3
  auto valid_as_v1 = [&](int v1, int v3) {
    for (int w : common_neighbors(v1, apex))
      if (w != v3) return false;
    return true;
  };
  std::vector<int> cs;
  for (int swap = 0; swap < 2; ++swap) {
    int v1 = others[swap], v3 = others[1 - swap];
    if (valid_as_v1(v1, v3)) cs.push_back(g.has_edge(v3, v4) ? 1 : 0);
  }
  if (cs.empty()) {
    // both designations blocked forces two flanked apex edges, so a = b = 0
    if (a || b) fail(Errc::SwapConventionUnsatisfiable, "no valid vertex designation");
    int c0 = g.has_edge(others[0], v4) ? 1 : 0;
    int c1 = g.has_edge(others[1], v4) ? 1 : 0;
    return DteType{0, 0, std::min(c0, c1)};
  }
  return DteType{a, b, *std::min_element(cs.begin(), cs.end())};
}

bool is_one_zigzag(const Graph& g) {
  if (g.order() < 5) return false;
  return canonical_form(g) == canonical_form(Graph::circulant_1_2(g.order()));
}

}  // namespace dtdesc
