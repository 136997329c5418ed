#include "bei/zpoly.hpp"

#include <stdexcept>

namespace bei {

ZPoly ZPoly::one() { return ZPoly{{mpz_class(1)}}; }

ZPoly ZPoly::monomial(int k, long a) {
  if (a == 0) return {};
  ZPoly p;
  p.c.assign(k + 1, mpz_class(0));
  p.c[k] = a;
  return p;
}

mpz_class ZPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c.size())) return 0;
  return c[k];
}

void ZPoly::normalize() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

ZPoly zp_add(const ZPoly& a, const ZPoly& b) {
  ZPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), mpz_class(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  r.normalize();
  return r;
}

ZPoly zp_sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), mpz_class(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
  r.normalize();
  return r;
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  ZPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  r.normalize();
  return r;
}

mpz_class zp_eval(const ZPoly& a, long x) {
  mpz_class v = 0;
  for (auto it = a.c.rbegin(); it != a.c.rend(); ++it) v = v * x + *it;
  return v;
}

ZPoly zp_div_one_minus_t(const ZPoly& a) {
  if (a.is_zero()) return {};
  // a = (1-t) q  =>  q_k = a_k + q_{k-1}; the final running sum is a(1)
  ZPoly q;
  q.c.assign(a.c.size() - 1, mpz_class(0));
  mpz_class run = 0;
  for (std::size_t k = 0; k < a.c.size(); ++k) {
    run += a.c[k];
    if (k + 1 < a.c.size())
      q.c[k] = run;
    else if (run != 0)
      throw std::domain_error("not divisible by (1 - t)");
  }
  q.normalize();
  return q;
}

ZPoly zp_mul_one_minus_t_pow(const ZPoly& a, int k) {
  ZPoly r = a;
  ZPoly f;  // 1 - t
  f.c = {mpz_class(1), mpz_class(-1)};
  for (int i = 0; i < k; ++i) r = zp_mul(r, f);
  return r;
}

std::vector<mpz_class> zp_series_prefix(const ZPoly& a, int d, int upto) {
  std::vector<mpz_class> s(upto + 1, mpz_class(0));
  for (int k = 0; k <= upto && k < static_cast<int>(a.c.size()); ++k) s[k] = a.c[k];
  for (int pass = 0; pass < d; ++pass)  // each 1/(1-t) factor is a prefix sum
    for (int k = 1; k <= upto; ++k) s[k] += s[k - 1];
  return s;
}

std::string zp_to_string(const ZPoly& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = 0; k < a.c.size(); ++k) {
    if (a.c[k] == 0) continue;
    mpz_class v = a.c[k];
    bool negc = v < 0;
    if (negc) v = -v;
    if (first) {
      if (negc) out += "-";
      first = false;
    } else {
      out += negc ? " - " : " + ";
    }
    std::string cs = v.get_str();
    if (k == 0) {
      out += cs;
    } else {
      if (cs != "1") out += cs + "*";
      out += "t";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace bei
