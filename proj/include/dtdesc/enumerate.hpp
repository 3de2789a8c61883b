#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dtdesc/chain_rewrite.hpp"
#include "dtdesc/graph.hpp"

namespace dtdesc {

struct DescendantRecord {
  CanonicalForm form;
  std::string g6;  // canonical graph6
  int n = 0;
  int tri = 0;
  int level = 0;
  std::optional<ChainVector> cv;  // present for order >= 7
  bool one_zigzag = false;
};

struct DescendantDatabase {
  int max_n = 0;
  std::map<int, std::vector<DescendantRecord>> layers;  // sorted by g6

  const std::vector<DescendantRecord>& layer(int n) const { return layers.at(n); }
  Graph graph_of(const DescendantRecord& r) const { return from_graph6(r.g6); }
  std::size_t total() const;
};

// Breadth-first generation from the complete graph on five vertices, one
// vertex layer at a time, deduplicated by canonical form.
DescendantDatabase descendants_up_to(int max_n, int workers = 0);

// counts[(n, t)] = number of descendants with n vertices and t triangles
std::map<std::pair<int, int>, int> count_table(const DescendantDatabase& db);
std::string count_table_csv(const DescendantDatabase& db);

struct MinTriangles {
  int min_tri = 0;
  std::vector<DescendantRecord> witnesses;
};
MinTriangles min_triangles(const DescendantDatabase& db);

void write_layer_files(const DescendantDatabase& db, const std::string& dir);
DescendantDatabase load_layer_files(const std::string& dir, int max_n);

}  // namespace dtdesc
