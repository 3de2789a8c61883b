#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dtdesc/error.hpp"

namespace dtdesc {

inline constexpr int kMaxVertices = 64;

// Simple undirected graph on up to 64 vertices, one bitmask row per vertex.
// Immutable after construction; all operations return new graphs.
class Graph {
 public:
  Graph() = default;

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
  static Graph complete(int n);
  // Circulant C_n(1,2): i ~ j iff i-j = +-1 or +-2 (mod n).
  static Graph circulant_1_2(int n);

  int order() const { return n_; }
  std::uint64_t row(int v) const { return adj_[v]; }
  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }
  int degree(int v) const;
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic
  bool is_connected() const;

  bool operator==(const Graph& other) const = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> adj_;
};

struct CanonicalForm {
  int n = 0;
  std::string bytes;  // graph6 of the canonically labelled graph

  auto operator<=>(const CanonicalForm&) const = default;
};

struct EdgeCutReport {
  bool passed = false;
  // present iff !passed: one side of a cut with 2 <= |S| <= n-2 and < 6 crossing edges
  std::optional<std::vector<int>> witness;
  int crossing_edges = 0;
};

std::vector<std::array<int, 3>> triangles(const Graph& g);
int triangle_count(const Graph& g);
bool is_four_regular(const Graph& g);

// Every cut with both sides of size >= 2 must have >= 6 crossing edges.
EdgeCutReport is_internally_six_edge_connected(const Graph& g);

std::vector<std::array<int, 3>> vertex_three_cuts(const Graph& g);

// Subgraph predicates used for structural exclusion checks.
bool contains_k4(const Graph& g);
bool contains_triple_triangle(const Graph& g);

CanonicalForm canonical_form(const Graph& g);
Graph canonical_graph(const Graph& g);

std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& s);

}  // namespace dtdesc
