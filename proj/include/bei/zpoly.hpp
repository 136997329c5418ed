#pragma once
// Dense univariate polynomials over Z (gmp coefficients), ascending degree.
// Used for Hilbert numerators, h-polynomials, and Betti alternating sums.

#include <gmpxx.h>

#include <string>
#include <vector>

namespace bei {

struct ZPoly {
  std::vector<mpz_class> c;  // c[k] = coefficient of t^k, no trailing zeros

  static ZPoly zero() { return {}; }
  static ZPoly one();
  static ZPoly monomial(int k, long a = 1);

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  mpz_class coeff(int k) const;
  void normalize();

  bool operator==(const ZPoly& o) const { return c == o.c; }
  bool operator!=(const ZPoly& o) const { return !(c == o.c); }
};

ZPoly zp_add(const ZPoly& a, const ZPoly& b);
ZPoly zp_sub(const ZPoly& a, const ZPoly& b);
ZPoly zp_mul(const ZPoly& a, const ZPoly& b);
mpz_class zp_eval(const ZPoly& a, long x);

// exact quotient by (1 - t); throws std::domain_error when a(1) != 0
ZPoly zp_div_one_minus_t(const ZPoly& a);
ZPoly zp_mul_one_minus_t_pow(const ZPoly& a, int k);

// first upto+1 coefficients of a / (1-t)^d expanded as a power series
std::vector<mpz_class> zp_series_prefix(const ZPoly& a, int d, int upto);

std::string zp_to_string(const ZPoly& a);  // e.g. "1 + 10*t + 38*t^2"

}  // namespace bei
