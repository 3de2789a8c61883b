#pragma once

#include <array>
#include <vector>

#include "dtdesc/chain_rewrite.hpp"
#include "dtdesc/dt_ops.hpp"
#include "dtdesc/graph.hpp"

namespace dtdesc {

// A maximal run of triangles in which consecutive triangles share an edge.
struct ZigzagPiece {
  std::vector<std::array<int, 3>> tris;  // path or cycle order
  bool cyclic = false;
  std::vector<int> ends;       // open pieces: the two extremal vertices
  std::vector<int> chords;     // degree-3 vertices within the piece
  std::vector<int> internals;  // degree-4 vertices within the piece
  int length() const { return static_cast<int>(tris.size()); }
};

struct PieceChain {
  std::vector<int> pieces;  // indices into ZigzagDecomposition::pieces
  bool closed = false;
};

struct ZigzagDecomposition {
  std::vector<ZigzagPiece> pieces;
  std::vector<PieceChain> chains;
  std::vector<int> shared_ends;            // vertices identifying two piece ends
  std::vector<int> non_triangle_vertices;  // vertices in no triangle
  int k() const { return static_cast<int>(pieces.size()); }
  int ell() const { return static_cast<int>(shared_ends.size()); }
  int m() const { return static_cast<int>(non_triangle_vertices.size()); }
};

ZigzagDecomposition zigzag_decomposition(const Graph& g);

// Vertices minus triangles.
int level(const Graph& g);

ChainVector chain_vector(const Graph& g);

DteType classify_dte_site(const Graph& g, const DteSite& site);

bool is_one_zigzag(const Graph& g);

}  // namespace dtdesc
