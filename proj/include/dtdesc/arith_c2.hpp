#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dtdesc/graph.hpp"

namespace dtdesc {

struct KirchhoffMonomials {
  std::vector<std::pair<int, int>> edges;
  // one edge-index subset per spanning tree: the edges NOT in the tree
  std::vector<std::vector<int>> monomials;
};

struct C2Result {
  int p = 0;
  std::int64_t point_count = 0;
  int residue = 0;       // (point_count / p^2) mod p when divisible
  bool divisible = false;  // p^2 | point_count
};

KirchhoffMonomials spanning_tree_monomials(const Graph& g);

// Spanning tree count over the integers (matrix-tree determinant).
std::int64_t spanning_tree_count(const Graph& g);

// Kirchhoff polynomial value mod p from the cycle-space Gram determinant.
int dual_kirchhoff_eval(const Graph& g, const std::vector<int>& assignment, int p);

// Number of zeros of the Kirchhoff polynomial over F_p^{E}.
std::int64_t point_count(const Graph& g, int p, std::int64_t budget = 100000000,
                         int workers = 0);

C2Result c2(const Graph& g, int p, std::int64_t budget = 100000000, int workers = 0);

}  // namespace dtdesc
