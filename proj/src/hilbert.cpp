#include "bei/hilbert.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "bei/budget.hpp"

namespace bei {

namespace {

using Gens = std::vector<Monomial>;

bool exp_less(const Monomial& a, const Monomial& b) {
  if (a.deg != b.deg) return a.deg < b.deg;
  return a.e < b.e;
}

// sort and drop generators another generator divides
void minimalize(Gens& gs) {
  std::sort(gs.begin(), gs.end(), exp_less);
  Gens out;
  for (const auto& m : gs) {
    bool dominated = false;
    for (const auto& k : out)
      if (k.divides(m)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(m);
  }
  gs = std::move(out);
}

std::string memo_key(int nvars, const Gens& gs) {
  std::string k;
  k.reserve(gs.size() * (nvars + 1));
  for (const auto& m : gs) {
    k.append(reinterpret_cast<const char*>(m.e.data()), nvars);
    k.push_back('\x01');
  }
  return k;
}

bool pairwise_coprime(const Gens& gs) {
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j)
      if (!gs[i].coprime(gs[j])) return false;
  return true;
}

ZPoly coprime_product(const Gens& gs) {
  ZPoly r = ZPoly::one();
  for (const auto& m : gs) {
    ZPoly f = ZPoly::one();
    f = zp_sub(f, ZPoly::monomial(m.deg, 1));
    r = zp_mul(r, f);
  }
  return r;
}

ZPoly numerator_rec(int nvars, Gens gs,
                    std::unordered_map<std::string, ZPoly>& memo,
                    const std::function<bool()>& stop) {
  if (stop && stop())
    throw BudgetExceeded("series recursion hit its wall-clock budget");
  minimalize(gs);
  if (gs.empty()) return ZPoly::one();
  if (gs.front().is_one()) return ZPoly{};
  if (pairwise_coprime(gs)) return coprime_product(gs);

  const std::string key = memo_key(nvars, gs);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  // split generators into groups sharing no variables; the numerator is the
  // product over groups
  {
    std::vector<int> group(gs.size(), -1);
    std::vector<int> var_group(nvars, -1);
    int ngroups = 0;
    for (std::size_t i = 0; i < gs.size(); ++i) {
      if (group[i] != -1) continue;
      const int gid = ngroups++;
      std::vector<std::size_t> todo{i};
      group[i] = gid;
      while (!todo.empty()) {
        const std::size_t cur = todo.back();
        todo.pop_back();
        for (int v = 0; v < nvars; ++v) {
          if (!gs[cur].e[v]) continue;
          if (var_group[v] == gid) continue;
          var_group[v] = gid;
          for (std::size_t j = 0; j < gs.size(); ++j)
            if (group[j] == -1 && gs[j].e[v]) {
              group[j] = gid;
              todo.push_back(j);
            }
        }
      }
    }
    if (ngroups > 1) {
      ZPoly r = ZPoly::one();
      for (int gid = 0; gid < ngroups; ++gid) {
        Gens part;
        for (std::size_t i = 0; i < gs.size(); ++i)
          if (group[i] == gid) part.push_back(gs[i]);
        r = zp_mul(r, numerator_rec(nvars, std::move(part), memo, stop));
      }
      memo.emplace(key, r);
      return r;
    }
  }

  // pivot on the most frequent variable, ties to the lowest index:
  // N(I) = N(I + (x)) + t * N(I : x)
  int pivot = -1, freq = 0;
  for (int v = 0; v < nvars; ++v) {
    int f = 0;
    for (const auto& m : gs)
      if (m.e[v]) ++f;
    if (f > freq) {
      freq = f;
      pivot = v;
    }
  }
  Gens plus{Monomial::var(pivot)};
  Gens colon;
  for (const auto& m : gs) {
    if (m.e[pivot]) {
      Monomial q = m;
      --q.e[pivot];
      --q.deg;
      colon.push_back(q);
    } else {
      plus.push_back(m);
      colon.push_back(m);
    }
  }
  ZPoly r = zp_add(numerator_rec(nvars, std::move(plus), memo, stop),
                   zp_mul(ZPoly::monomial(1, 1),
                          numerator_rec(nvars, std::move(colon), memo, stop)));
  memo.emplace(key, r);
  return r;
}

}  // namespace

ZPoly hilbert_numerator(int nvars, const std::vector<Monomial>& gens,
                        const std::function<bool()>& stop) {
  if (nvars < 1 || nvars > kMaxVars)
    throw std::invalid_argument("variable count out of range");
  std::unordered_map<std::string, ZPoly> memo;
  return numerator_rec(nvars, gens, memo, stop);
}

HilbertSeries hilbert_from_monomials(int nvars,
                                     const std::vector<Monomial>& gens,
                                     const std::function<bool()>& stop) {
  HilbertSeries s;
  s.nvars = nvars;
  s.numerator = hilbert_numerator(nvars, gens, stop);
  s.h = s.numerator;
  s.dim = nvars;
  while (!s.h.is_zero() && zp_eval(s.h, 1) == 0) {
    s.h = zp_div_one_minus_t(s.h);
    --s.dim;
  }
  if (s.h.is_zero()) s.dim = 0;
  return s;
}

namespace {

long count_rec(int nvars, const std::vector<Monomial>& gens, int var,
                    int left, Monomial& cur) {
  if (var == nvars) {
    if (left != 0) return 0;
    for (const auto& m : gens)
      if (m.divides(cur)) return 0;
    return 1;
  }
  // last variable takes the remainder
  if (var == nvars - 1) {
    cur.e[var] = std::uint8_t(left);
    cur.deg = std::uint16_t(cur.deg + left);
    const long r = count_rec(nvars, gens, var + 1, 0, cur);
    cur.deg = std::uint16_t(cur.deg - left);
    cur.e[var] = 0;
    return r;
  }
  long total = 0;
  for (int k = 0; k <= left; ++k) {
    cur.e[var] = std::uint8_t(k);
    cur.deg = std::uint16_t(cur.deg + k);
    total += count_rec(nvars, gens, var + 1, left - k, cur);
    cur.deg = std::uint16_t(cur.deg - k);
    cur.e[var] = 0;
  }
  return total;
}

}  // namespace

long count_standard_monomials(int nvars,
                                   const std::vector<Monomial>& gens, int d) {
  if (nvars < 1 || nvars > kMaxVars)
    throw std::invalid_argument("variable count out of range");
  if (d < 0) return 0;
  if (d > 255) throw std::invalid_argument("degree out of range");
  Monomial cur;
  return count_rec(nvars, gens, 0, d, cur);
}

mpz_class multiplicity(const HilbertSeries& s) { return zp_eval(s.h, 1); }

int h_degree(const HilbertSeries& s) { return s.h.degree(); }

std::vector<mpz_class> hilbert_coefficients(const HilbertSeries& s, int upto) {
  return zp_series_prefix(s.numerator, s.nvars, upto);
}

}  // namespace bei
