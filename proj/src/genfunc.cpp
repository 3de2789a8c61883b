#include "dtdesc/genfunc.hpp"

#include <algorithm>

namespace dtdesc {

namespace {

using Poly = std::vector<mpz_class>;

Poly trim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return trim(out);
}

Poly add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), mpz_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return trim(out);
}

Poly from_longs(const std::vector<long>& v) {
  Poly p;
  for (long c : v) p.emplace_back(c);
  return p;
}

Poly shift(const Poly& p, int k) {
  if (p.empty()) return {};
  Poly out(p.size() + k, mpz_class(0));
  for (std::size_t i = 0; i < p.size(); ++i) out[i + k] = p[i];
  return out;
}

}  // namespace

RationalGf RationalGf::from_ints(std::vector<long> num, std::vector<long> den) {
  RationalGf f;
  f.num = trim(from_longs(num));
  f.den = trim(from_longs(den));
  if (f.den.empty() || f.den[0] == 0) fail(Errc::NonUnitConstantTerm, "denominator constant term is zero");
  return f;
}

RationalGf gf_add(const RationalGf& f, const RationalGf& g) {
  RationalGf out;
  out.num = add(mul(f.num, g.den), mul(g.num, f.den));
  out.den = mul(f.den, g.den);
  return out;
}

RationalGf gf_scale(const RationalGf& f, long c) {
  RationalGf out = f;
  for (auto& x : out.num) x *= c;
  out.num = trim(out.num);
  return out;
}

RationalGf gf_shift(const RationalGf& f, int k) {
  RationalGf out = f;
  out.num = shift(out.num, k);
  return out;
}

std::vector<mpz_class> series(const RationalGf& f, int N) {
  if (f.den.empty() || (f.den[0] != 1 && f.den[0] != -1))
    fail(Errc::NonUnitConstantTerm, "series needs denominator constant term +-1");
  std::vector<mpz_class> c(N + 1, mpz_class(0));
  for (int k = 0; k <= N; ++k) {
    mpz_class acc = (k < static_cast<int>(f.num.size())) ? f.num[k] : mpz_class(0);
    for (int j = 1; j <= k && j < static_cast<int>(f.den.size()); ++j) acc -= f.den[j] * c[k - j];
    c[k] = acc / f.den[0];
  }
  return c;
}

bool gf_equal(const RationalGf& f, const RationalGf& g) {
  return trim(mul(f.num, g.den)) == trim(mul(g.num, f.den));
}

namespace {

RationalGf make(const std::vector<long>& num, std::initializer_list<std::vector<long>> den_factors) {
  RationalGf f;
  f.num = trim(from_longs(num));
  f.den = {mpz_class(1)};
  for (const auto& d : den_factors) f.den = mul(f.den, from_longs(d));
  if (f.den.empty() || f.den[0] == 0) fail(Errc::NonUnitConstantTerm, "denominator constant term is zero");
  return f;
}

std::vector<long> x_to(int k, long coeff = 1) {
  std::vector<long> v(k + 1, 0);
  v[k] = coeff;
  return v;
}

}  // namespace

RationalGf level_gf(int level) {
  switch (level) {
    case 0:
      return make(x_to(7), {{1, -1}});
    case 1:
      return make({}, {{1}});
    case 2:
      return make(x_to(8), {{1, -1}, {1, 0, -1}});
    case 3: {
      std::vector<long> num(12, 0);
      num[9] = 1;
      num[11] = 1;  // x^9 (1 + x^2)
      return make(num, {{1, -1}, {1, -1}, {1, -1}, {1, 1, 1}});
    }
    case 4: {
      std::vector<long> num(21, 0);
      num[20] = 1;
      num[19] = -1;
      num[18] = 3;
      num[17] = -3;
      num[16] = 4;
      num[14] = 4;
      num[13] = 3;
      num[12] = 6;
      num[11] = 3;
      num[10] = 4;
      num[9] = 1;
      return make(num, {{1, -1}, {1, -1}, {1, -1}, {1, -1}, {1, 1}, {1, 1}, {1, 0, 1}});
    }
    default:
      fail(Errc::UnsupportedLevel, std::to_string(level));
  }
}

RationalGf level3_from_templates() {
  // triangle-count series of the six weighted zigzag-length templates
  RationalGf total = make({}, {{1}});
  auto acc = [&](long w, const std::vector<long>& num,
                 std::initializer_list<std::vector<long>> den) {
    total = gf_add(total, gf_scale(make(num, den), w));
  };
  const std::vector<long> one_m_x{1, -1};
  const std::vector<long> one_m_x2{1, 0, -1};
  const std::vector<long> one_m_x3{1, 0, 0, -1};
  acc(4, x_to(12), {one_m_x3, one_m_x2, one_m_x});
  acc(3, x_to(11), {one_m_x3, one_m_x2});
  acc(3, x_to(10), {one_m_x3, one_m_x});
  acc(2, x_to(9), {one_m_x3});
  std::vector<long> geom6{0, 0, 0, 0, 0, 0, 1, 1, 1};     // x^6 (1 + x + x^2)
  std::vector<long> geom7{0, 0, 0, 0, 0, 0, 0, 1, 1, 1};  // x^7 (1 + x + x^2)
  acc(1, geom7, {one_m_x2, one_m_x});
  acc(1, geom6, {one_m_x2});
  return total;
}

mpq_class asymptotic_ratio(int level, int n) {
  long cnum, cden;
  switch (level) {
    case 2: cnum = 1; cden = 2; break;
    case 3: cnum = 1; cden = 3; break;
    case 4: cnum = 25; cden = 48; break;
    default: fail(Errc::UnsupportedLevel, std::to_string(level));
  }
  auto coeffs = series(level_gf(level), n);
  mpz_class npow(1);
  for (int i = 0; i < level - 1; ++i) npow *= n;
  mpq_class ratio(coeffs[n] * cden, npow * cnum);
  ratio.canonicalize();
  return ratio;
}

}  // namespace dtdesc
