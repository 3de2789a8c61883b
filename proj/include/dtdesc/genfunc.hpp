#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "dtdesc/error.hpp"

namespace dtdesc {

// Rational generating function with exact integer coefficient lists,
// ascending powers. The denominator's constant term must be nonzero.
struct RationalGf {
  std::vector<mpz_class> num;
  std::vector<mpz_class> den;

  static RationalGf from_ints(std::vector<long> num, std::vector<long> den);
};

RationalGf gf_add(const RationalGf& f, const RationalGf& g);
RationalGf gf_scale(const RationalGf& f, long c);
RationalGf gf_shift(const RationalGf& f, int k);  // multiply by x^k

// Exact series expansion c_0..c_N; requires constant denominator term +-1.
std::vector<mpz_class> series(const RationalGf& f, int N);

bool gf_equal(const RationalGf& f, const RationalGf& g);

// Count of descendants at the given vertices-minus-triangles value, by order.
RationalGf level_gf(int level);

// The same level-3 series assembled from the zigzag-configuration templates.
RationalGf level3_from_templates();

// g_L(n) / (C_L * n^(L-1)) as an exact fraction.
mpq_class asymptotic_ratio(int level, int n);

}  // namespace dtdesc
