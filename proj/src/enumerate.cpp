#include "dtdesc/enumerate.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "dtdesc/dt_ops.hpp"
#include "dtdesc/zigzag.hpp"

namespace dtdesc {

std::size_t DescendantDatabase::total() const {
  std::size_t s = 0;
  for (const auto& [n, layer] : layers) s += layer.size();
  return s;
}

namespace {

DescendantRecord make_record(const Graph& g) {
  DescendantRecord r;
  r.form = canonical_form(g);
  r.g6 = r.form.bytes;
  r.n = g.order();
  r.tri = triangle_count(g);
  r.level = r.n - r.tri;
  if (r.n >= 7) r.cv = chain_vector(g);
  r.one_zigzag = is_one_zigzag(g);
  return r;
}

}  // namespace

DescendantDatabase descendants_up_to(int max_n, int workers) {
  if (max_n < 5 || max_n > 16) fail(Errc::OutOfRange, "layer bound must be in [5,16]");
  if (workers <= 0) {
    workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers <= 0) workers = 1;
  }
  DescendantDatabase db;
  db.max_n = max_n;
  db.layers[5] = {make_record(Graph::complete(5))};
  for (int n = 5; n < max_n; ++n) {
    const auto& parents = db.layers[n];
    std::vector<std::set<std::string>> found(workers);
    auto expand = [&](int w) {
      for (std::size_t i = w; i < parents.size(); i += workers) {
        Graph parent = from_graph6(parents[i].g6);
        for (const auto& site : dte_sites(parent)) {
          Graph child = dte(parent, site);
          found[w].insert(canonical_form(child).bytes);
        }
      }
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(expand, w);
    expand(0);
    for (auto& th : pool) th.join();
    std::set<std::string> merged;
    for (auto& s : found) merged.insert(s.begin(), s.end());
    std::vector<DescendantRecord> layer;
    layer.reserve(merged.size());
    for (const auto& g6 : merged) layer.push_back(make_record(from_graph6(g6)));
    std::sort(layer.begin(), layer.end(),
              [](const DescendantRecord& a, const DescendantRecord& b) { return a.g6 < b.g6; });
    db.layers[n + 1] = std::move(layer);
  }
  return db;
}

std::map<std::pair<int, int>, int> count_table(const DescendantDatabase& db) {
  std::map<std::pair<int, int>, int> counts;
  for (const auto& [n, layer] : db.layers)
    for (const auto& r : layer) ++counts[{r.n, r.tri}];
  return counts;
}

std::string count_table_csv(const DescendantDatabase& db) {
  std::ostringstream os;
  os << "n,t,count\n";
  for (const auto& [key, c] : count_table(db)) os << key.first << ',' << key.second << ',' << c << '\n';
  return os.str();
}

MinTriangles min_triangles(const DescendantDatabase& db) {
  MinTriangles mt;
  mt.min_tri = 1 << 30;
  for (const auto& [n, layer] : db.layers)
    for (const auto& r : layer) mt.min_tri = std::min(mt.min_tri, r.tri);
  for (const auto& [n, layer] : db.layers)
    for (const auto& r : layer)
      if (r.tri == mt.min_tri) mt.witnesses.push_back(r);
  return mt;
}

void write_layer_files(const DescendantDatabase& db, const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& [n, layer] : db.layers) {
    std::ofstream out(dir + "/descendants_n" + std::to_string(n) + ".g6");
    for (const auto& r : layer) out << r.g6 << '\n';
  }
}

DescendantDatabase load_layer_files(const std::string& dir, int max_n) {
  DescendantDatabase db;
  db.max_n = max_n;
  for (int n = 5; n <= max_n; ++n) {
    std::ifstream in(dir + "/descendants_n" + std::to_string(n) + ".g6");
    if (!in) fail(Errc::OutOfRange, "missing layer file for n=" + std::to_string(n));
    std::vector<DescendantRecord> layer;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      DescendantRecord r = make_record(from_graph6(line));
      if (r.g6 != line) fail(Errc::MalformedGraph6, "layer line is not canonical");
      layer.push_back(std::move(r));
    }
    if (!std::is_sorted(layer.begin(), layer.end(), [](const auto& a, const auto& b) {
          return a.g6 < b.g6;
        }))
      fail(Errc::MalformedGraph6, "layer file not sorted");
    db.layers[n] = std::move(layer);
  }
  return db;
}

}  // namespace dtdesc
