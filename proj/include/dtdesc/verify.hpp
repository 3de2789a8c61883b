#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dtdesc/enumerate.hpp"

namespace dtdesc {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
  std::string to_json() const;
};

struct VerifyOptions {
  std::uint64_t seed = 0x5eed5eed;
  int workers = 0;
  int closure_max_sum = 12;
  std::int64_t point_budget = 100000000;
  int c2_max_n = 9;  // descendants whose decompletions get the c2 treatment
};

CheckResult check_table1(const DescendantDatabase& db);
CheckResult check_min_triangles(const DescendantDatabase& db, int closure_max_sum);
CheckResult check_level_props(const DescendantDatabase& db);
CheckResult check_genfunc(const DescendantDatabase& db);
CheckResult check_c2(const DescendantDatabase& db, const VerifyOptions& opt);
CheckResult check_cross_validation(const DescendantDatabase& db);
CheckResult check_ancestors(const DescendantDatabase& db, std::uint64_t seed);
CheckResult check_exclusions(const DescendantDatabase& db);

VerifyReport verify_all(const DescendantDatabase& db, const VerifyOptions& opt = {});

}  // namespace dtdesc
