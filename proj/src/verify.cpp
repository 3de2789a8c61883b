#include "dtdesc/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "dtdesc/arith_c2.hpp"
#include "dtdesc/dt_ops.hpp"
#include "dtdesc/genfunc.hpp"
#include "dtdesc/zigzag.hpp"

namespace dtdesc {

bool VerifyReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::string VerifyReport::to_json() const {
  std::ostringstream os;
  os << "{\"all_passed\":" << (all_passed() ? "true" : "false") << ",\"checks\":[";
  for (std::size_t i = 0; i < checks.size(); ++i) {
    if (i) os << ',';
    os << "{\"name\":\"" << checks[i].name << "\",\"passed\":" << (checks[i].passed ? "true" : "false")
       << ",\"detail\":\"";
    for (char ch : checks[i].detail) {
      if (ch == '"' || ch == '\\') os << '\\';
      if (ch == '\n') {
        os << "\\n";
        continue;
      }
      os << ch;
    }
    os << "\"}";
  }
  os << "]}";
  return os.str();
}

namespace {

struct Cell {
  int n, t, count;
};

// Published counts of descendants by order and triangle count.
const std::vector<Cell>& reference_counts() {
  static const std::vector<Cell> cells = {
      {5, 10, 1},  {6, 8, 1},    {7, 7, 1},    {8, 6, 1},    {8, 8, 1},    {9, 5, 1},
      {9, 6, 1},   {9, 7, 1},    {9, 9, 1},    {10, 4, 1},   {10, 5, 2},   {10, 6, 6},
      {10, 7, 2},  {10, 8, 2},   {10, 10, 1},  {11, 4, 3},   {11, 5, 8},   {11, 6, 19},
      {11, 7, 15}, {11, 8, 4},   {11, 9, 2},   {11, 11, 1},  {12, 4, 8},   {12, 5, 37},
      {12, 6, 88}, {12, 7, 76},  {12, 8, 34},  {12, 9, 7},   {12, 10, 3},  {12, 12, 1},
      {13, 4, 21}, {13, 5, 147}, {13, 6, 390}, {13, 7, 435}, {13, 8, 218}, {13, 9, 61},
      {13, 10, 10}, {13, 11, 3}, {13, 13, 1},  {14, 4, 67},  {14, 5, 550}, {14, 6, 1758},
      {14, 7, 2405}, {14, 8, 1576}, {14, 9, 505}, {14, 10, 106}, {14, 11, 14}, {14, 12, 4},
      {14, 14, 1}};
  return cells;
}

}  // namespace

CheckResult check_table1(const DescendantDatabase& db) {
  CheckResult res{"table1_counts", true, ""};
  std::ostringstream detail;
  auto counts = count_table(db);
  std::map<std::pair<int, int>, int> expected;
  for (const auto& c : reference_counts())
    if (c.n <= db.max_n) expected[{c.n, c.t}] = c.count;
  if (counts != expected) {
    res.passed = false;
    for (const auto& [key, c] : expected) {
      auto it = counts.find(key);
      int got = it == counts.end() ? 0 : it->second;
      if (got != c)
        detail << "n=" << key.first << ",t=" << key.second << ": expected " << c << " got " << got
               << "; ";
    }
    for (const auto& [key, c] : counts)
      if (!expected.count(key))
        detail << "unexpected cell n=" << key.first << ",t=" << key.second << " count " << c << "; ";
  } else {
    detail << "all " << expected.size() << " cells match through n=" << db.max_n;
  }
  res.detail = detail.str();
  return res;
}

CheckResult check_min_triangles(const DescendantDatabase& db, int closure_max_sum) {
  CheckResult res{"min_triangles", true, ""};
  std::ostringstream detail;
  MinTriangles mt = min_triangles(db);
  if (mt.min_tri != 4) {
    res.passed = false;
    detail << "minimum triangle count is " << mt.min_tri << " not 4; ";
  }
  int first_n = 1 << 30, at10 = 0;
  for (const auto& r : mt.witnesses) {
    first_n = std::min(first_n, r.n);
    if (r.n == 10) ++at10;
  }
  if (db.max_n >= 10 && (first_n != 10 || at10 != 1)) {
    res.passed = false;
    detail << "first witness at n=" << first_n << " with " << at10 << " graphs at n=10; ";
  }
  TheoremReport thm = verify_min_triangle_theorem(closure_max_sum);
  if (!thm.ok) {
    res.passed = false;
    for (const auto& run : thm.runs)
      detail << "closure " << run.start.str() << ": reached=" << run.reached_target
             << " saturated=" << run.saturated << "; ";
  } else {
    detail << "min tri 4 first at n=10; all four closures saturate without reaching (3,3)";
  }
  res.detail = detail.str();
  return res;
}

CheckResult check_level_props(const DescendantDatabase& db) {
  CheckResult res{"level_propositions", true, ""};
  std::ostringstream detail;
  for (const auto& [n, layer] : db.layers) {
    int level0 = 0, level1 = 0;
    for (const auto& r : layer) {
      if (r.level == 0) {
        ++level0;
        if (!r.one_zigzag) {
          res.passed = false;
          detail << "level-0 record at n=" << n << " is not a closed single zigzag; ";
        }
      }
      if (r.level == 1) ++level1;
      if (n >= 7 && r.level > 0) {
        Graph g = db.graph_of(r);
        ZigzagDecomposition dec = zigzag_decomposition(g);
        if (r.level != 2 * dec.k() - dec.ell() + dec.m()) {
          res.passed = false;
          detail << "level formula fails for " << r.g6 << "; ";
        }
        if (r.level == 2) {
          bool two_zigzag = dec.chains.size() == 1 && dec.chains[0].closed &&
                            dec.chains[0].pieces.size() == 2;
          if (!two_zigzag) {
            res.passed = false;
            detail << "level-2 record " << r.g6 << " is not a closed two-piece chain; ";
          }
        }
      }
    }
    if (n >= 7 && level0 != 1) {
      res.passed = false;
      detail << "n=" << n << " has " << level0 << " level-0 records; ";
    }
    if (level1 != 0) {
      res.passed = false;
      detail << "n=" << n << " has " << level1 << " level-1 records; ";
    }
  }
  if (res.passed) detail << "level 0 unique per order, no level 1, formula holds";
  res.detail = detail.str();
  return res;
}

CheckResult check_genfunc(const DescendantDatabase& db) {
  CheckResult res{"generating_functions", true, ""};
  std::ostringstream detail;
  for (int L : {0, 2, 3, 4}) {
    auto coeffs = series(level_gf(L), db.max_n);
    for (int n = 5; n <= db.max_n; ++n) {
      int count = 0;
      for (const auto& r : db.layer(n))
        if (r.level == L) ++count;
      if (coeffs[n] != count) {
        res.passed = false;
        detail << "level " << L << " series at n=" << n << " gives " << coeffs[n] << " but "
               << count << " graphs; ";
      }
    }
  }
  // the three closed forms of the level-3 series
  RationalGf l3 = level_gf(3);
  RationalGf alt1 = RationalGf::from_ints({0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1}, {1, -2, 1, -1, 2, -1});
  // (1-x)^2 (1-x^3) = 1 - 2x + x^2 - x^3 + 2x^4 - x^5
  RationalGf alt2;
  {
    std::vector<long> num(13, 0);
    num[9] = 1;
    num[10] = 1;
    num[11] = 1;
    num[12] = 1;  // x^9 (1+x^2)(1+x)
    // (1-x)(1-x^2)(1-x^3)
    alt2 = RationalGf::from_ints(num, {1, -1, -1, 0, 1, 1, -1});
  }
  if (!gf_equal(l3, alt1) || !gf_equal(l3, alt2)) {
    res.passed = false;
    detail << "level-3 closed forms disagree; ";
  }
  if (!gf_equal(gf_shift(level3_from_templates(), 3), l3)) {
    res.passed = false;
    detail << "template sum does not match the level-3 closed form; ";
  }
  for (int L : {2, 3, 4}) {
    mpq_class r = asymptotic_ratio(L, 1000);
    mpq_class err = r - 1;
    if (err < 0) err = -err;
    bool ok = err <= mpq_class(1, 100);
    detail << "ratio L=" << L << " at n=1000: " << r.get_d() << (ok ? " (within 1%)" : " (OUTSIDE 1%)")
           << "; ";
    if (!ok) res.passed = false;
  }
  res.detail = detail.str();
  return res;
}

CheckResult check_c2(const DescendantDatabase& db, const VerifyOptions& opt) {
  CheckResult res{"c2_invariant", true, ""};
  std::ostringstream detail;
  int cases = 0;
  for (int p : {2, 3, 5}) {
    C2Result r = c2(Graph::complete(4), p, opt.point_budget, opt.workers);
    ++cases;
    if (!r.divisible || r.residue != p - 1) {
      res.passed = false;
      detail << "K4 at p=" << p << ": residue " << r.residue << " divisible " << r.divisible << "; ";
    }
  }
  for (const auto& [n, layer] : db.layers) {
    if (n > opt.c2_max_n) continue;
    for (const auto& rec : layer) {
      Graph g = db.graph_of(rec);
      for (const Graph& h : decompletions(g))
        for (int p : {2, 3}) {
          C2Result r = c2(h, p, opt.point_budget, opt.workers);
          ++cases;
          if (!r.divisible || r.residue != p - 1) {
            res.passed = false;
            detail << rec.g6 << " decompletion at p=" << p << ": point count " << r.point_count
                   << " residue " << r.residue << "; ";
          }
        }
    }
  }
  if (res.passed) detail << cases << " point counts, all divisible by p^2 with residue p-1";
  res.detail = detail.str();
  return res;
}

CheckResult check_cross_validation(const DescendantDatabase& db) {
  CheckResult res{"rewrite_cross_validation", true, ""};
  std::ostringstream detail;
  int pairs = 0;
  for (int n = 8; n <= std::min(db.max_n, 12); ++n) {
    for (const auto& rec : db.layer(n)) {
      Graph g = db.graph_of(rec);
      ChainVector child_cv = chain_vector(g);
      for (const auto& dt : find_double_triangles(g)) {
        if (!dt.proper) continue;
        Graph parent = dtr(g, dt);
        ChainVector parent_cv = chain_vector(parent);
        ++pairs;
        bool found = false;
        for (const auto& [t, ch] : dte_children(parent_cv))
          if (ch == child_cv) found = true;
        if (!found) {
          res.passed = false;
          detail << "no rule sends " << parent_cv.str() << " to " << child_cv.str() << " (graph "
                 << rec.g6 << "); ";
        }
      }
    }
  }
  if (res.passed) detail << pairs << " reduction transitions all match the rule table";
  res.detail = detail.str();
  return res;
}

CheckResult check_ancestors(const DescendantDatabase& db, std::uint64_t seed) {
  CheckResult res{"ancestor_property", true, ""};
  std::ostringstream detail;
  const CanonicalForm k5 = canonical_form(Graph::complete(5));

  std::vector<const DescendantRecord*> pool;
  for (const auto& [n, layer] : db.layers)
    if (n <= 12)
      for (const auto& r : layer) pool.push_back(&r);
  std::mt19937_64 rng(seed);
  std::shuffle(pool.begin(), pool.end(), rng);
  const std::size_t take = std::min<std::size_t>(50, pool.size());
  for (std::size_t i = 0; i < take; ++i) {
    Graph g = db.graph_of(*pool[i]);
    auto anc = ancestor(g);
    std::mt19937_64 r1(seed ^ (2 * i + 1)), r2(seed ^ (2 * i + 2));
    auto anc1 = ancestor_randomized(g, r1);
    auto anc2 = ancestor_randomized(g, r2);
    if (anc.size() != 1 || anc[0] != k5 || anc1 != anc || anc2 != anc) {
      res.passed = false;
      detail << pool[i]->g6 << ": ancestor multiset wrong or order-dependent; ";
    }
  }
  Graph k5k5 = product(Graph::complete(5), {0, 1, 2}, Graph::complete(5), {0, 1, 2});
  auto anc = ancestor(k5k5);
  if (anc.size() != 2 || anc[0] != k5 || anc[1] != k5) {
    res.passed = false;
    detail << "product of two complete graphs should reduce to both factors; ";
  }
  if (res.passed) detail << take << " sampled descendants reduce to K5, orders agree";
  res.detail = detail.str();
  return res;
}

CheckResult check_exclusions(const DescendantDatabase& db) {
  CheckResult res{"structural_exclusions", true, ""};
  std::ostringstream detail;
  for (const auto& [n, layer] : db.layers)
    for (const auto& rec : layer) {
      Graph g = db.graph_of(rec);
      if (n > 5 && (contains_k4(g) || contains_triple_triangle(g))) {
        res.passed = false;
        detail << rec.g6 << " contains a forbidden clique pattern; ";
      }
      if (!is_internally_six_edge_connected(g).passed) {
        res.passed = false;
        detail << rec.g6 << " has a small internal edge cut; ";
      }
      if (rec.cv && classify_outcome(*rec.cv).tag == CvTag::UnrealizableLemma) {
        res.passed = false;
        detail << rec.g6 << " has an unrealizable chain vector " << rec.cv->str() << "; ";
      }
    }
  if (res.passed) detail << "no forbidden subgraphs, all internally 6-edge-connected";
  res.detail = detail.str();
  return res;
}

VerifyReport verify_all(const DescendantDatabase& db, const VerifyOptions& opt) {
  VerifyReport rep;
  rep.checks.push_back(check_table1(db));
  rep.checks.push_back(check_min_triangles(db, opt.closure_max_sum));
  rep.checks.push_back(check_level_props(db));
  rep.checks.push_back(check_genfunc(db));
  rep.checks.push_back(check_c2(db, opt));
  rep.checks.push_back(check_cross_validation(db));
  rep.checks.push_back(check_ancestors(db, opt.seed));
  rep.checks.push_back(check_exclusions(db));
  return rep;
}

}  // namespace dtdesc
