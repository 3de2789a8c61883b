#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "dtdesc/graph.hpp"

namespace dtdesc {

// Two triangles (v1,v2,v3) and (v2,v3,v4) glued along the edge {v2,v3}.
// Normalised so that v2 < v3 and v1 < v4.
struct DoubleTriangle {
  int v1 = -1, v2 = -1, v3 = -1, v4 = -1;
  bool proper = false;  // no fifth vertex adjacent to both v2 and v3

  auto operator<=>(const DoubleTriangle&) const = default;
};

// A triangle plus a pendant edge at one of its vertices (the apex).
struct DteSite {
  std::array<int, 3> triangle{};  // sorted
  int apex = -1;                  // one of triangle
  int pendant = -1;               // adjacent to apex, outside the triangle

  auto operator<=>(const DteSite&) const = default;
};

std::vector<DoubleTriangle> find_double_triangles(const Graph& g);

std::vector<DteSite> dte_sites(const Graph& g);

// Expansion: subdivide the triangle edge opposite the apex and the pendant
// edge, identify the two new vertices. New vertex gets index n.
Graph dte(const Graph& g, const DteSite& site);

// The double triangle created by dte(g, site) in the child graph.
DoubleTriangle created_double_triangle(const Graph& g, const DteSite& site);

// Reduction: inverse of expansion, defined for proper double triangles only.
Graph dtr(const Graph& g, const DoubleTriangle& dt);

std::vector<Graph> decompletions(const Graph& g);
Graph completion(const Graph& h);

Graph product(const Graph& g1, const std::array<int, 3>& t1, const Graph& g2,
              const std::array<int, 3>& t2);

std::vector<std::pair<Graph, Graph>> product_splits(const Graph& g);

// Terminal multiset (as sorted canonical forms) of repeated reductions and
// product splits. Reductions are exhausted before splits are attempted.
std::vector<CanonicalForm> ancestor(const Graph& g);

// Same terminal multiset, but choosing uniformly among all applicable
// reductions and splits at every step.
std::vector<CanonicalForm> ancestor_randomized(const Graph& g, std::mt19937_64& rng);

}  // namespace dtdesc
