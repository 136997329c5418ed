#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bei/field.hpp"
#include "bei/graph.hpp"

namespace bei {

// Hard cap on ambient ring size: 2 variables per graph vertex plus one
// elimination variable.  64 covers graphs up to 31 vertices.
inline constexpr int kMaxVars = 64;

struct Monomial {
  std::array<std::uint8_t, kMaxVars> e{};
  std::uint16_t deg = 0;

  static Monomial one() { return Monomial{}; }
  static Monomial var(int i, int exp = 1) {
    Monomial m;
    m.e[i] = std::uint8_t(exp);
    m.deg = std::uint16_t(exp);
    return m;
  }

  bool is_one() const { return deg == 0; }
  bool operator==(const Monomial& o) const { return deg == o.deg && e == o.e; }

  Monomial mul(const Monomial& o) const {
    Monomial r;
    int carry_check = 0;
    for (int i = 0; i < kMaxVars; ++i) {
      int s = e[i] + o.e[i];
      carry_check |= s;
      r.e[i] = std::uint8_t(s);
    }
    if (carry_check > 255) throw std::overflow_error("monomial exponent overflow");
    r.deg = std::uint16_t(deg + o.deg);
    return r;
  }
  bool divides(const Monomial& o) const {
    if (deg > o.deg) return false;
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  // quotient this / o; caller guarantees divisibility
  Monomial div(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
      assert(e[i] >= o.e[i]);
      r.e[i] = std::uint8_t(e[i] - o.e[i]);
    }
    r.deg = std::uint16_t(deg - o.deg);
    return r;
  }
  Monomial lcm(const Monomial& o) const {
    Monomial r;
    int d = 0;
    for (int i = 0; i < kMaxVars; ++i) {
      r.e[i] = std::max(e[i], o.e[i]);
      d += r.e[i];
    }
    r.deg = std::uint16_t(d);
    return r;
  }
  Monomial gcd(const Monomial& o) const {
    Monomial r;
    int d = 0;
    for (int i = 0; i < kMaxVars; ++i) {
      r.e[i] = std::min(e[i], o.e[i]);
      d += r.e[i];
    }
    r.deg = std::uint16_t(d);
    return r;
  }
  bool coprime(const Monomial& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] && o.e[i]) return false;
    return true;
  }
  bool squarefree() const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] > 1) return false;
    return true;
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (int i = 0; i < kMaxVars; ++i) {
      h ^= e[i];
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

enum class OrderKind : std::uint8_t { lex, degrevlex, elim };

// Monomial order on a ring with nvars variables, precedence var 0 > var 1 > ...
// elim compares total degree in the first `elim_block` variables first (so any
// monomial involving those variables beats any that avoids them), then falls
// back to degrevlex on the full vector.
struct MonOrder {
  OrderKind kind = OrderKind::degrevlex;
  int nvars = 0;
  int elim_block = 0;

  bool operator==(const MonOrder&) const = default;

  // +1 if a > b, 0 if equal, -1 if a < b
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind) {
      case OrderKind::lex:
        return lex_cmp(a, b, 0, nvars);
      case OrderKind::degrevlex:
        return drl_cmp(a, b, 0, nvars);
      case OrderKind::elim: {
        int da = 0, db = 0;
        for (int i = 0; i < elim_block; ++i) {
          da += a.e[i];
          db += b.e[i];
        }
        if (da != db) return da > db ? 1 : -1;
        if (int c = drl_cmp(a, b, 0, elim_block)) return c;
        return drl_cmp(a, b, elim_block, nvars);
      }
    }
    return 0;
  }
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  static std::string name(OrderKind k) {
    switch (k) {
      case OrderKind::lex: return "lex";
      case OrderKind::degrevlex: return "degrevlex";
      case OrderKind::elim: return "elim";
    }
    return "?";
  }

 private:
  static int lex_cmp(const Monomial& a, const Monomial& b, int lo, int hi) {
    for (int i = lo; i < hi; ++i)
      if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
    return 0;
  }
  static int drl_cmp(const Monomial& a, const Monomial& b, int lo, int hi) {
    int da = 0, db = 0;
    for (int i = lo; i < hi; ++i) {
      da += a.e[i];
      db += b.e[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (int i = hi - 1; i >= lo; --i)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    return 0;
  }
};

// Ambient polynomial ring: `aux` leading elimination variables (named t, t2, ...)
// followed by x_1..x_n, y_1..y_n for a graph on n vertices.  The prime tags which
// F_p coefficients live in; rational-coefficient polynomials ignore it.
struct Ring {
  int nvars = 0;
  int aux = 0;
  MonOrder ord;
  std::uint32_t prime = kDefaultPrime;

  bool operator==(const Ring&) const = default;

  int nverts() const { return (nvars - aux) / 2; }
  int xvar(int i) const {  // 1-based vertex -> variable index of x_i
    check_vertex(i);
    return aux + i - 1;
  }
  int yvar(int i) const {
    check_vertex(i);
    return aux + nverts() + i - 1;
  }
  std::string var_name(int v) const {
    if (v < aux) return aux == 1 ? "t" : "t" + std::to_string(v + 1);
    int n = nverts();
    int k = v - aux;
    return k < n ? "x" + std::to_string(k + 1) : "y" + std::to_string(k - n + 1);
  }

 private:
  void check_vertex(int i) const {
    if (i < 1 || i > nverts())
      throw std::out_of_range("vertex label " + std::to_string(i) +
                              " outside 1.." + std::to_string(nverts()));
  }
};

// ring over 2n variables for graphs on n vertices
inline Ring make_ring(int nverts, OrderKind kind = OrderKind::degrevlex,
                      std::uint32_t prime = kDefaultPrime) {
  if (nverts < 1 || 2 * nverts > kMaxVars)
    throw std::invalid_argument("vertex count out of supported range");
  Ring r;
  r.nvars = 2 * nverts;
  r.aux = 0;
  r.ord = MonOrder{kind, r.nvars, 0};
  r.prime = prime;
  return r;
}

// same ring extended by one leading elimination variable t
inline Ring extend_with_aux(const Ring& r) {
  if (r.aux != 0) throw std::invalid_argument("ring already has an elimination variable");
  if (r.nvars + 1 > kMaxVars) throw std::invalid_argument("ring too large to extend");
  Ring s;
  s.nvars = r.nvars + 1;
  s.aux = 1;
  s.ord = MonOrder{OrderKind::elim, s.nvars, 1};
  s.prime = r.prime;
  return s;
}

template <class F>
struct Term {
  Monomial m;
  typename F::Elem c{};
};

// Terms strictly descending under ring.ord, no zero coefficients.
template <class F>
struct Polynomial {
  Ring ring;
  std::vector<Term<F>> terms;

  bool is_zero() const { return terms.empty(); }
  int degree() const { return terms.empty() ? -1 : terms.front().m.deg; }
  const Term<F>& lt() const {
    if (terms.empty()) throw std::domain_error("leading term of zero polynomial");
    return terms.front();
  }
  bool operator==(const Polynomial& o) const {
    if (!(ring == o.ring) || terms.size() != o.terms.size()) return false;
    for (std::size_t i = 0; i < terms.size(); ++i)
      if (!(terms[i].m == o.terms[i].m) || terms[i].c != o.terms[i].c) return false;
    return true;
  }
  // homogeneous means all terms share one total degree (zero counts as homogeneous)
  bool homogeneous() const {
    for (const auto& t : terms)
      if (t.m.deg != terms.front().m.deg) return false;
    return true;
  }
};

namespace detail {
template <class F>
void sort_merge(const F& fld, const MonOrder& ord, std::vector<Term<F>>& ts) {
  std::sort(ts.begin(), ts.end(),
            [&](const Term<F>& a, const Term<F>& b) { return ord.greater(a.m, b.m); });
  std::size_t out = 0;
  for (std::size_t i = 0; i < ts.size();) {
    Monomial m = ts[i].m;
    auto c = ts[i].c;
    ++i;
    while (i < ts.size() && ts[i].m == m) {
      c = fld.add(c, ts[i].c);
      ++i;
    }
    if (!fld.is_zero(c)) ts[out++] = Term<F>{m, c};
  }
  ts.resize(out);
}
}  // namespace detail

template <class F>
Polynomial<F> make_poly(const F& fld, const Ring& ring, std::vector<Term<F>> ts) {
  detail::sort_merge(fld, ring.ord, ts);
  return Polynomial<F>{ring, std::move(ts)};
}

template <class F>
Polynomial<F> poly_zero(const Ring& ring) {
  return Polynomial<F>{ring, {}};
}

template <class F>
void check_same_ring(const Polynomial<F>& a, const Polynomial<F>& b) {
  if (!(a.ring == b.ring))
    throw std::invalid_argument("polynomials live in different ambient rings");
}

template <class F>
Polynomial<F> add(const F& fld, const Polynomial<F>& a, const Polynomial<F>& b) {
  check_same_ring(a, b);
  std::vector<Term<F>> out;
  out.reserve(a.terms.size() + b.terms.size());
  const MonOrder& ord = a.ring.ord;
  std::size_t i = 0, j = 0;
  while (i < a.terms.size() && j < b.terms.size()) {
    int c = ord.compare(a.terms[i].m, b.terms[j].m);
    if (c > 0) {
      out.push_back(a.terms[i++]);
    } else if (c < 0) {
      out.push_back(b.terms[j++]);
    } else {
      auto s = fld.add(a.terms[i].c, b.terms[j].c);
      if (!fld.is_zero(s)) out.push_back(Term<F>{a.terms[i].m, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.terms.size(); ++i) out.push_back(a.terms[i]);
  for (; j < b.terms.size(); ++j) out.push_back(b.terms[j]);
  return Polynomial<F>{a.ring, std::move(out)};
}

template <class F>
Polynomial<F> neg(const F& fld, const Polynomial<F>& a) {
  Polynomial<F> r = a;
  for (auto& t : r.terms) t.c = fld.neg(t.c);
  return r;
}

template <class F>
Polynomial<F> sub(const F& fld, const Polynomial<F>& a, const Polynomial<F>& b) {
  return add(fld, a, neg(fld, b));
}

// a * (c * m) for a single scaling term
template <class F>
Polynomial<F> mul_term(const F& fld, const Polynomial<F>& a, const Monomial& m,
                       const typename F::Elem& c) {
  Polynomial<F> r;
  r.ring = a.ring;
  if (fld.is_zero(c)) return r;
  r.terms.reserve(a.terms.size());
  for (const auto& t : a.terms) r.terms.push_back(Term<F>{t.m.mul(m), fld.mul(t.c, c)});
  return r;
}

template <class F>
Polynomial<F> mul(const F& fld, const Polynomial<F>& a, const Polynomial<F>& b) {
  check_same_ring(a, b);
  std::vector<Term<F>> acc;
  acc.reserve(a.terms.size() * b.terms.size());
  for (const auto& s : a.terms)
    for (const auto& t : b.terms) acc.push_back(Term<F>{s.m.mul(t.m), fld.mul(s.c, t.c)});
  detail::sort_merge(fld, a.ring.ord, acc);
  return Polynomial<F>{a.ring, std::move(acc)};
}

template <class F>
Polynomial<F> make_monic(const F& fld, const Polynomial<F>& a) {
  if (a.is_zero()) return a;
  auto inv = fld.inv(a.terms.front().c);
  Polynomial<F> r = a;
  for (auto& t : r.terms) t.c = fld.mul(t.c, inv);
  return r;
}

template <class F>
std::string to_string(const F& fld, const Polynomial<F>& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : p.terms) {
    std::string cs = fld.to_string(t.c);
    bool neg_c = !cs.empty() && cs[0] == '-';
    if (neg_c) cs = cs.substr(1);
    if (first) {
      if (neg_c) s += "-";
      first = false;
    } else {
      s += neg_c ? " - " : " + ";
    }
    std::string ms;
    for (int v = 0; v < p.ring.nvars; ++v) {
      if (!t.m.e[v]) continue;
      if (!ms.empty()) ms += "*";
      ms += p.ring.var_name(v);
      if (t.m.e[v] > 1) ms += "^" + std::to_string(t.m.e[v]);
    }
    if (ms.empty()) {
      s += cs;
    } else {
      if (cs != "1") s += cs + "*";
      s += ms;
    }
  }
  return s;
}

using FpPoly = Polynomial<Fp>;
using QQPoly = Polynomial<QQ>;

template <class F>
Polynomial<F> var_poly(const F& fld, const Ring& ring, int v) {
  if (v < 0 || v >= ring.nvars) throw std::out_of_range("variable index out of range");
  return Polynomial<F>{ring, {Term<F>{Monomial::var(v), fld.one()}}};
}

// x_i*y_j - x_j*y_i (i < j enforced by swapping)
template <class F>
Polynomial<F> edge_binomial(const F& fld, const Ring& ring, int i, int j) {
  if (i == j) throw std::invalid_argument("edge endpoints must differ");
  if (i > j) std::swap(i, j);
  std::vector<Term<F>> ts;
  ts.push_back(Term<F>{Monomial::var(ring.xvar(i)).mul(Monomial::var(ring.yvar(j))),
                       fld.one()});
  ts.push_back(Term<F>{Monomial::var(ring.xvar(j)).mul(Monomial::var(ring.yvar(i))),
                       fld.neg(fld.one())});
  return make_poly(fld, ring, std::move(ts));
}

// Generators of the binomial edge ideal, in edge-list order.
template <class F>
std::vector<Polynomial<F>> binomial_edge_generators(const F& fld, const Ring& ring,
                                                    const Graph& g) {
  if (g.n() != ring.nverts())
    throw std::invalid_argument("ring has " + std::to_string(ring.nverts()) +
                                " vertices, graph has " + std::to_string(g.n()));
  std::vector<Polynomial<F>> out;
  for (auto [i, j] : g.edges()) out.push_back(edge_binomial(fld, ring, i, j));
  return out;
}

}  // namespace bei
