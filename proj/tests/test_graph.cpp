#include "dtdesc/graph.hpp"

#include <random>
#include <set>

#include "doctest.h"
#include "support.hpp"

using namespace dtdesc;
using namespace dtdesc::testsupport;

TEST_SUITE_BEGIN("graph_core");

TEST_CASE("construction and basic invariants") {
  Graph c3 = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(triangle_count(c3) == 1);
  CHECK(!is_four_regular(c3));

  Graph k5 = Graph::complete(5);
  CHECK(is_four_regular(k5));
  CHECK(triangle_count(k5) == 10);

  Graph path = Graph::from_edges(4, {{0, 1}, {1, 2}});
  CHECK(path.degree(0) == 1);
  CHECK(path.degree(1) == 2);
  CHECK(path.degree(2) == 2);
  CHECK(path.degree(3) == 0);

  CHECK_THROWS_WITH_AS(Graph::from_edges(3, {{0, 3}}), doctest::Contains("OutOfRange"), Error);
  CHECK_THROWS_WITH_AS(Graph::from_edges(3, {{1, 1}}), doctest::Contains("LoopEdge"), Error);
  CHECK_THROWS_WITH_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), doctest::Contains("DuplicateEdge"),
                       Error);
}

TEST_CASE("degree sum equals twice the edge count") {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 20; ++rep) {
    Graph g = random_four_regular(8 + static_cast<int>(rng() % 5), rng);
    int degsum = 0;
    for (int v = 0; v < g.order(); ++v) degsum += g.degree(v);
    CHECK(degsum == 2 * g.edge_count());
  }
}

TEST_CASE("octahedron has eight triangles") {
  // K_{2,2,2}: complement of a perfect matching on six vertices
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v)
      if (v != u + 3) e.emplace_back(u, v);
  Graph oct = Graph::from_edges(6, e);
  CHECK(is_four_regular(oct));
  CHECK(triangle_count(oct) == 8);
}

TEST_CASE("internal six edge connectivity") {
  CHECK(is_internally_six_edge_connected(Graph::complete(5)).passed);

  // two K4 blocks joined by a perfect matching: the block side cuts 4 edges
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) {
      e.emplace_back(u, v);
      e.emplace_back(u + 4, v + 4);
    }
  for (int u = 0; u < 4; ++u) e.emplace_back(u, u + 4);
  Graph blocks = Graph::from_edges(8, e);
  CHECK(is_four_regular(blocks));
  EdgeCutReport rep = is_internally_six_edge_connected(blocks);
  CHECK(!rep.passed);
  REQUIRE(rep.witness.has_value());
  CHECK(rep.crossing_edges == 4);
  CHECK(rep.witness->size() == 4);

  Graph two = Graph::from_edges(2, {{0, 1}});
  CHECK(is_internally_six_edge_connected(two).passed);
  CHECK_THROWS_WITH_AS(is_internally_six_edge_connected(Graph::from_edges(5, {{0, 1}, {2, 3}})),
                       doctest::Contains("Disconnected"), Error);
}

TEST_CASE("subset scan agrees with max-flow min-cut") {
  std::mt19937_64 rng(2024);
  for (int rep = 0; rep < 30; ++rep) {
    int n = 8 + static_cast<int>(rng() % 5);  // 8..12
    Graph g = random_four_regular(n, rng);
    int cut = min_internal_cut_maxflow(g);
    CHECK(is_internally_six_edge_connected(g).passed == (cut >= 6));
  }
}

TEST_CASE("vertex three cuts") {
  CHECK(vertex_three_cuts(Graph::complete(5)).empty());
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v)
      if (v != u + 3) e.emplace_back(u, v);
  CHECK(vertex_three_cuts(Graph::from_edges(6, e)).empty());  // octahedron
}

TEST_CASE("graph6 round trip and reference encoding") {
  CHECK(to_graph6(Graph::complete(5)) == "D~{");
  CHECK(from_graph6("D~{") == Graph::complete(5));

  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 25; ++rep) {
    Graph g = random_four_regular(7 + static_cast<int>(rng() % 8), rng);
    CHECK(from_graph6(to_graph6(g)) == g);
  }
  // orders needing the long form
  for (int n : {63, 64}) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    Graph cyc = Graph::from_edges(n, e);
    CHECK(from_graph6(to_graph6(cyc)) == cyc);
  }

  CHECK_THROWS_WITH_AS(from_graph6(""), doctest::Contains("MalformedGraph6"), Error);
  CHECK_THROWS_WITH_AS(from_graph6("D~"), doctest::Contains("MalformedGraph6"), Error);
  CHECK_THROWS_WITH_AS(from_graph6("D~{~"), doctest::Contains("MalformedGraph6"), Error);
  CHECK_THROWS_WITH_AS(from_graph6("A"), doctest::Contains("MalformedGraph6"), Error);
}

TEST_CASE("canonical form is invariant under relabelling") {
  std::mt19937_64 rng(11);
  Graph k5 = Graph::complete(5);
  CanonicalForm base = canonical_form(k5);
  std::vector<int> perm{0, 1, 2, 3, 4};
  std::sort(perm.begin(), perm.end());
  do {
    std::vector<std::pair<int, int>> e;
    for (auto [u, v] : k5.edges()) e.emplace_back(perm[u], perm[v]);
    CHECK(canonical_form(Graph::from_edges(5, e)) == base);
  } while (std::next_permutation(perm.begin(), perm.end()));

  for (int rep = 0; rep < 40; ++rep) {
    int n = 7 + static_cast<int>(rng() % 6);
    Graph g = random_four_regular(n, rng);
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    std::vector<std::pair<int, int>> e;
    for (auto [u, v] : g.edges()) e.emplace_back(p[u], p[v]);
    Graph h = Graph::from_edges(n, e);
    CHECK(canonical_form(g) == canonical_form(h));
    CHECK(triangle_count(g) == triangle_count(h));
  }
}

TEST_CASE("canonical form separates isomorphism classes on small orders") {
  // every 4-regular graph on 7 and 8 vertices, cross-checked by permutations
  for (int n : {7, 8}) {
    std::vector<Graph> reps = all_four_regular(n);
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = i + 1; j < reps.size(); ++j) {
        CHECK(!isomorphic_bruteforce(reps[i], reps[j]));
        CHECK(canonical_form(reps[i]) != canonical_form(reps[j]));
      }
  }
  CHECK(all_four_regular(7).size() == 2);
  CHECK(all_four_regular(8).size() == 6);
}

TEST_CASE("canonical form equality matches brute-force isomorphism") {
  std::mt19937_64 rng(13);
  for (int rep = 0; rep < 30; ++rep) {
    Graph a = random_four_regular(8, rng);
    Graph b = random_four_regular(8, rng);
    CHECK((canonical_form(a) == canonical_form(b)) == isomorphic_bruteforce(a, b));
  }
}

TEST_SUITE_END();
