#include "dtdesc/dt_ops.hpp"

#include <random>
#include <set>

#include "doctest.h"
#include "support.hpp"

using namespace dtdesc;
using namespace dtdesc::testsupport;

namespace {

Graph octahedron() {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v)
      if (v != u + 3) e.emplace_back(u, v);
  return Graph::from_edges(6, e);
}

Graph hypercube4() {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < 16; ++u)
    for (int b = 0; b < 4; ++b)
      if (u < (u ^ (1 << b))) e.emplace_back(u, u ^ (1 << b));
  return Graph::from_edges(16, e);
}

// brute force: ordered 4-tuples forming two triangles on a shared edge,
// counted once per {shared edge, outer pair}
int count_double_triangles_bruteforce(const Graph& g) {
  int count = 0;
  const int n = g.order();
  for (int b = 0; b < n; ++b)
    for (int c = b + 1; c < n; ++c) {
      if (!g.has_edge(b, c)) continue;
      for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
          if (x == b || x == c || y == b || y == c) continue;
          if (g.has_edge(x, b) && g.has_edge(x, c) && g.has_edge(y, b) && g.has_edge(y, c)) ++count;
        }
    }
  return count;
}

}  // namespace

TEST_SUITE_BEGIN("dt_ops");

TEST_CASE("double triangles in the complete graph are all improper") {
  auto dts = find_double_triangles(Graph::complete(5));
  CHECK(!dts.empty());
  for (const auto& dt : dts) CHECK(!dt.proper);
}

TEST_CASE("octahedron has twelve proper double triangles") {
  Graph oct = octahedron();
  auto dts = find_double_triangles(oct);
  CHECK(static_cast<int>(dts.size()) == count_double_triangles_bruteforce(oct));
  CHECK(dts.size() == 12);
  for (const auto& dt : dts) CHECK(dt.proper);
}

TEST_CASE("triangle-free graphs have no double triangles") {
  CHECK(find_double_triangles(hypercube4()).empty());
}

TEST_CASE("every expansion of the complete graph gives the octahedron") {
  Graph k5 = Graph::complete(5);
  CanonicalForm oct = canonical_form(octahedron());
  auto sites = dte_sites(k5);
  CHECK(sites.size() == 10 * 3 * 2);
  for (const auto& s : sites) {
    Graph child = dte(k5, s);
    CHECK(is_four_regular(child));
    CHECK(canonical_form(child) == oct);
  }
}

TEST_CASE("expanding the octahedron gives the unique seven-triangle graph") {
  Graph oct = octahedron();
  std::set<CanonicalForm> children;
  for (const auto& s : dte_sites(oct)) {
    Graph child = dte(oct, s);
    CHECK(is_four_regular(child));
    CHECK(triangle_count(child) == 7);
    children.insert(canonical_form(child));
  }
  CHECK(children.size() == 1);
}

TEST_CASE("reduction inverts expansion") {
  std::mt19937_64 rng(3);
  // walk a few random expansion paths from K5 and reduce back at every step
  for (int rep = 0; rep < 10; ++rep) {
    Graph g = Graph::complete(5);
    while (g.order() < 10) {
      auto sites = dte_sites(g);
      const DteSite& s = sites[rng() % sites.size()];
      Graph child = dte(g, s);
      DoubleTriangle dt = created_double_triangle(g, s);
      Graph back = dtr(child, dt);
      CHECK(back == g);  // label-exact round trip
      g = child;
    }
  }
}

TEST_CASE("reducing the octahedron gives the complete graph") {
  Graph oct = octahedron();
  for (const auto& dt : find_double_triangles(oct))
    CHECK(canonical_form(dtr(oct, dt)) == canonical_form(Graph::complete(5)));
}

TEST_CASE("reduction rejects improper and multi-edge configurations") {
  Graph k5 = Graph::complete(5);
  auto dts = find_double_triangles(k5);
  CHECK_THROWS_WITH_AS(dtr(k5, dts.front()), doctest::Contains("ImproperDoubleTriangle"), Error);

  DoubleTriangle forced = dts.front();
  forced.proper = true;  // lie about properness; the edge structure still rejects
  CHECK_THROWS_AS(dtr(k5, forced), Error);
}

TEST_CASE("decompletion and completion") {
  Graph k5 = Graph::complete(5);
  auto decs = decompletions(k5);
  REQUIRE(decs.size() == 1);
  CHECK(canonical_form(decs[0]) == canonical_form(Graph::complete(4)));
  CHECK(canonical_form(completion(decs[0])) == canonical_form(k5));

  CHECK(decompletions(octahedron()).size() == 1);

  CHECK_THROWS_WITH_AS(completion(Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}})),
                       doctest::Contains("BadDegreeSequence"), Error);

  std::mt19937_64 rng(17);
  Graph g = Graph::complete(5);
  for (int step = 0; step < 5; ++step) {
    auto sites = dte_sites(g);
    g = dte(g, sites[rng() % sites.size()]);
    for (const Graph& h : decompletions(g))
      CHECK(canonical_form(completion(h)) == canonical_form(g));
    CHECK(decompletions(g).size() <= static_cast<std::size_t>(g.order()));
  }
}

TEST_CASE("product and product splits") {
  Graph k5 = Graph::complete(5);
  Graph p = product(k5, {0, 1, 2}, k5, {0, 1, 2});
  CHECK(p.order() == 7);
  CHECK(is_four_regular(p));
  CHECK(!vertex_three_cuts(p).empty());
  CHECK(!p.has_edge(0, 1));
  CHECK(!p.has_edge(0, 2));
  CHECK(!p.has_edge(1, 2));

  auto splits = product_splits(p);
  REQUIRE(splits.size() == 1);
  CHECK(canonical_form(splits[0].first) == canonical_form(k5));
  CHECK(canonical_form(splits[0].second) == canonical_form(k5));

  CHECK(product_splits(k5).empty());
  CHECK(product_splits(octahedron()).empty());
  CHECK_THROWS_WITH_AS(product(k5, {0, 1, 2}, Graph::from_edges(5, {{0, 1}, {1, 2}}), {0, 1, 2}),
                       doctest::Contains("NotATriangle"), Error);
}

TEST_CASE("ancestor terminates at the complete graph") {
  CanonicalForm k5 = canonical_form(Graph::complete(5));
  CHECK(ancestor(Graph::complete(5)) == std::vector<CanonicalForm>{k5});

  Graph prod = product(Graph::complete(5), {0, 1, 2}, Graph::complete(5), {0, 1, 2});
  auto anc = ancestor(prod);
  REQUIRE(anc.size() == 2);
  CHECK(anc[0] == k5);
  CHECK(anc[1] == k5);

  std::mt19937_64 rng(23);
  for (int rep = 0; rep < 8; ++rep) {
    Graph g = Graph::complete(5);
    int steps = 2 + static_cast<int>(rng() % 5);
    for (int i = 0; i < steps; ++i) {
      auto sites = dte_sites(g);
      g = dte(g, sites[rng() % sites.size()]);
    }
    CHECK(ancestor(g) == std::vector<CanonicalForm>{k5});
    std::mt19937_64 r1(rng()), r2(rng());
    CHECK(ancestor_randomized(g, r1) == ancestor_randomized(g, r2));
  }
}

TEST_CASE("expansion preserves regularity and connectivity bounds") {
  std::mt19937_64 rng(29);
  Graph g = Graph::complete(5);
  for (int step = 0; step < 7; ++step) {
    auto sites = dte_sites(g);
    g = dte(g, sites[rng() % sites.size()]);
    CHECK(is_four_regular(g));
    CHECK(is_internally_six_edge_connected(g).passed);
  }
}

TEST_SUITE_END();
