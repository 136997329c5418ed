#pragma once
// Buchberger engine (Gebauer-Moller pair update, sugar-aware normal
// selection) and the ideal operations built on it: membership, equality,
// sum, elimination-based intersection, initial ideals, plus the ideal
// builders specific to binomial edge ideals.

#include <cstdint>
#include <string>
#include <vector>

#include "bei/graph.hpp"
#include "bei/poly.hpp"

namespace bei {

template <class F>
struct Ideal {
  Ring ring;
  std::vector<Polynomial<F>> gens;  // nonzero
};

// Reduced basis: monic, pairwise non-dividing leading terms, tails fully
// reduced, sorted by leading monomial descending.  Unique for (ideal, order).
template <class F>
struct GroebnerBasis {
  Ring ring;
  std::vector<Polynomial<F>> elems;
};

template <class F>
Ideal<F> make_ideal(const Ring& ring, std::vector<Polynomial<F>> gens) {
  for (const auto& g : gens)
    if (g.is_zero()) throw std::invalid_argument("zero generator in ideal");
  return Ideal<F>{ring, std::move(gens)};
}

// --- division ------------------------------------------------------------

// Remainder of f on division by `basis` (reducer = first element whose
// leading term divides).  If `sugar` is non-null it is updated through the
// reduction steps.
template <class F>
Polynomial<F> normal_form(const F& fld, const Polynomial<F>& f,
                          const std::vector<Polynomial<F>>& basis,
                          int* sugar = nullptr) {
  Polynomial<F> p = f;
  std::vector<Term<F>> rem;
  while (!p.is_zero()) {
    const Monomial& m = p.lt().m;
    const Polynomial<F>* red = nullptr;
    for (const auto& g : basis)
      if (!g.is_zero() && g.lt().m.divides(m)) {
        red = &g;
        break;
      }
    if (!red) {
      rem.push_back(p.lt());
      p.terms.erase(p.terms.begin());
      continue;
    }
    Monomial u = m.div(red->lt().m);
    auto q = fld.div(p.lt().c, red->lt().c);
    if (sugar) *sugar = std::max(*sugar, red->degree() + static_cast<int>(u.deg));
    p = sub(fld, p, mul_term(fld, *red, u, q));
  }
  return Polynomial<F>{f.ring, std::move(rem)};
}

template <class F>
Polynomial<F> s_polynomial(const F& fld, const Polynomial<F>& f,
                           const Polynomial<F>& g) {
  check_same_ring(f, g);
  Monomial l = f.lt().m.lcm(g.lt().m);
  auto a = mul_term(fld, f, l.div(f.lt().m), fld.inv(f.lt().c));
  auto b = mul_term(fld, g, l.div(g.lt().m), fld.inv(g.lt().c));
  return sub(fld, a, b);
}

// Literal criterion: every pairwise S-polynomial reduces to zero against the
// set itself.  No pair-pruning shortcuts; this is the independent oracle the
// engine is tested against.
template <class F>
bool is_groebner(const F& fld, const std::vector<Polynomial<F>>& gens) {
  std::vector<Polynomial<F>> gs;
  for (const auto& g : gens)
    if (!g.is_zero()) gs.push_back(g);
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j)
      if (!normal_form(fld, s_polynomial(fld, gs[i], gs[j]), gs).is_zero())
        return false;
  return true;
}

// --- Buchberger ----------------------------------------------------------

namespace detail {

template <class F>
class BuchbergerEngine {
 public:
  BuchbergerEngine(const F& fld, const Ring& ring) : fld_(fld), ring_(ring) {}

  void seed(const std::vector<Polynomial<F>>& gens) {
    for (const auto& g : gens) insert(g);
    while (!pairs_.empty()) {
      std::size_t best = select();
      PairRec pr = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();
      auto s = s_polynomial(fld_, basis_[pr.i], basis_[pr.j]);
      int sugar = pr.sugar;
      auto h = normal_form(fld_, s, basis_, &sugar);
      if (!h.is_zero()) add_to_basis(make_monic(fld_, h), sugar);
    }
  }

  GroebnerBasis<F> reduced() const {
    std::vector<Polynomial<F>> out;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (alive_[i]) out.push_back(basis_[i]);
    // interreduce tails (leading terms already pairwise non-dividing)
    for (std::size_t i = 0; i < out.size(); ++i) {
      std::vector<Polynomial<F>> others;
      for (std::size_t j = 0; j < out.size(); ++j)
        if (j != i) others.push_back(out[j]);
      out[i] = make_monic(fld_, normal_form(fld_, out[i], others));
    }
    std::sort(out.begin(), out.end(),
              [&](const Polynomial<F>& a, const Polynomial<F>& b) {
                return ring_.ord.greater(a.lt().m, b.lt().m);
              });
    return GroebnerBasis<F>{ring_, std::move(out)};
  }

 private:
  struct PairRec {
    int i, j;
    Monomial lcm;
    int sugar;
  };

  void insert(const Polynomial<F>& g) {
    int sugar = g.degree();
    auto h = normal_form(fld_, g, basis_, &sugar);
    if (!h.is_zero()) add_to_basis(make_monic(fld_, h), sugar);
  }

  // Gebauer-Moller update: form pairs with h, discard by the chain (lcm
  // divisibility) and product (coprime leading terms) criteria, prune old
  // pairs whose lcm strictly factors through h.
  void add_to_basis(const Polynomial<F>& h, int sugar) {
    int t = static_cast<int>(basis_.size());
    const Monomial& mh = h.lt().m;

    std::vector<PairRec> cand;
    for (int i = 0; i < t; ++i) {
      if (!alive_[i]) continue;
      Monomial l = basis_[i].lt().m.lcm(mh);
      int sg = std::max(sugars_[i] + (l.deg - basis_[i].lt().m.deg),
                        sugar + (l.deg - mh.deg));
      cand.push_back(PairRec{i, t, l, sg});
    }
    // chain criterion among the new pairs: keep a pair only if no other new
    // pair's lcm divides its lcm (equal lcms keep the later-scanned one)
    std::vector<PairRec> kept;
    for (std::size_t a = 0; a < cand.size(); ++a) {
      bool coprime = basis_[cand[a].i].lt().m.coprime(mh);
      bool dominated = false;
      if (!coprime) {
        for (std::size_t b = 0; b < cand.size() && !dominated; ++b) {
          if (a == b) continue;
          if (!cand[b].lcm.divides(cand[a].lcm)) continue;
          if (cand[b].lcm == cand[a].lcm && a > b) continue;  // keep one of equals
          dominated = true;
        }
      }
      if (!dominated) kept.push_back(cand[a]);
    }
    // product criterion: coprime pairs never needed
    std::vector<PairRec> fresh;
    for (auto& pr : kept)
      if (!basis_[pr.i].lt().m.coprime(mh)) fresh.push_back(pr);
    // chain-prune old pairs through mh
    std::vector<PairRec> survived;
    for (auto& pr : pairs_) {
      Monomial l1 = basis_[pr.i].lt().m.lcm(mh);
      Monomial l2 = basis_[pr.j].lt().m.lcm(mh);
      bool drop = mh.divides(pr.lcm) && !(l1 == pr.lcm) && !(l2 == pr.lcm);
      if (!drop) survived.push_back(pr);
    }
    pairs_ = std::move(survived);
    for (auto& pr : fresh) pairs_.push_back(pr);

    for (int i = 0; i < t; ++i)
      if (alive_[i] && mh.divides(basis_[i].lt().m)) alive_[i] = false;
    basis_.push_back(h);
    sugars_.push_back(sugar);
    alive_.push_back(true);
  }

  // normal selection: lowest lcm degree, then sugar, then pair indices
  std::size_t select() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const PairRec &a = pairs_[k], &b = pairs_[best];
      auto key = [](const PairRec& p) {
        return std::tuple<int, int, int, int>(p.lcm.deg, p.sugar, p.i, p.j);
      };
      if (key(a) < key(b)) best = k;
    }
    return best;
  }

  const F& fld_;
  Ring ring_;
  std::vector<Polynomial<F>> basis_;
  std::vector<int> sugars_;
  std::vector<bool> alive_;
  std::vector<PairRec> pairs_;
};

}  // namespace detail

template <class F>
GroebnerBasis<F> buchberger(const F& fld, const Ideal<F>& I) {
  detail::BuchbergerEngine<F> eng(fld, I.ring);
  eng.seed(I.gens);
  return eng.reduced();
}

template <class F>
bool ideal_membership(const F& fld, const Polynomial<F>& f,
                      const GroebnerBasis<F>& gb) {
  return normal_form(fld, f, gb.elems).is_zero();
}

template <class F>
bool ideal_membership(const F& fld, const Polynomial<F>& f, const Ideal<F>& I) {
  return ideal_membership(fld, f, buchberger(fld, I));
}

template <class F>
bool ideal_equal(const F& fld, const Ideal<F>& I, const Ideal<F>& J) {
  if (!(I.ring == J.ring)) throw std::invalid_argument("ideal_equal: ring mismatch");
  auto a = buchberger(fld, I);
  auto b = buchberger(fld, J);
  if (a.elems.size() != b.elems.size()) return false;
  for (std::size_t i = 0; i < a.elems.size(); ++i)
    if (!(a.elems[i] == b.elems[i])) return false;
  return true;
}

template <class F>
Ideal<F> ideal_sum(const Ideal<F>& I, const Ideal<F>& J) {
  if (!(I.ring == J.ring)) throw std::invalid_argument("ideal_sum: ring mismatch");
  Ideal<F> r = I;
  r.gens.insert(r.gens.end(), J.gens.begin(), J.gens.end());
  return r;
}

template <class F>
std::vector<Monomial> initial_ideal(const GroebnerBasis<F>& gb) {
  std::vector<Monomial> out;
  for (const auto& g : gb.elems) out.push_back(g.lt().m);
  return out;
}

// --- elimination ---------------------------------------------------------

namespace detail {
inline Monomial shift_vars_up(const Monomial& m, int nvars) {
  Monomial r;
  for (int i = nvars - 1; i >= 0; --i) r.e[i + 1] = m.e[i];
  r.deg = m.deg;
  return r;
}
inline Monomial shift_vars_down(const Monomial& m) {
  Monomial r;
  for (int i = 1; i < kMaxVars; ++i) r.e[i - 1] = m.e[i];
  r.deg = static_cast<std::uint16_t>(m.deg - m.e[0]);
  return r;
}
}  // namespace detail

template <class F>
Polynomial<F> lift_to_aux(const F& fld, const Ring& ext, const Polynomial<F>& p) {
  std::vector<Term<F>> ts;
  for (const auto& t : p.terms)
    ts.push_back(Term<F>{detail::shift_vars_up(t.m, p.ring.nvars), t.c});
  return make_poly(fld, ext, std::move(ts));  // re-sorts under the elim order
}

// I cap J = (t I + (1-t) J) cap k[x,y]: compute a Groebner basis in the ring
// extended by a leading elimination variable and keep the t-free elements.
template <class F>
Ideal<F> ideal_intersection(const F& fld, const Ideal<F>& I, const Ideal<F>& J) {
  if (!(I.ring == J.ring))
    throw std::invalid_argument("ideal_intersection: ring mismatch");
  Ring ext = extend_with_aux(I.ring);
  Polynomial<F> t = var_poly(fld, ext, 0);
  Polynomial<F> one{ext, {Term<F>{Monomial::one(), fld.one()}}};
  Polynomial<F> one_minus_t = sub(fld, one, t);
  std::vector<Polynomial<F>> gens;
  for (const auto& g : I.gens)
    gens.push_back(mul(fld, t, lift_to_aux(fld, ext, g)));
  for (const auto& g : J.gens)
    gens.push_back(mul(fld, one_minus_t, lift_to_aux(fld, ext, g)));
  auto gb = buchberger(fld, Ideal<F>{ext, std::move(gens)});
  std::vector<Polynomial<F>> out;
  for (const auto& g : gb.elems) {
    if (g.lt().m.e[0] != 0) continue;  // involves t
    std::vector<Term<F>> ts;
    for (const auto& tm : g.terms)
      ts.push_back(Term<F>{detail::shift_vars_down(tm.m), tm.c});
    out.push_back(make_poly(fld, I.ring, std::move(ts)));
  }
  return Ideal<F>{I.ring, std::move(out)};
}

// --- builders from graphs ------------------------------------------------

template <class F>
Ideal<F> binomial_edge_ideal(const F& fld, const Ring& ring, const Graph& g) {
  return Ideal<F>{ring, binomial_edge_generators(fld, ring, g)};
}

// P_T(G): the variables of T plus the edge binomials of the complete graphs
// on the components of G with T removed (original labels throughout).
template <class F>
Ideal<F> p_t_ideal(const F& fld, const Ring& ring, const Graph& g,
                   const std::vector<int>& T) {
  std::vector<Polynomial<F>> gens;
  std::uint64_t tmask = 0;
  for (int v : T) {
    g.check_vertex(v);
    tmask |= std::uint64_t{1} << (v - 1);
  }
  for (int v = 1; v <= g.n(); ++v)
    if (tmask & (std::uint64_t{1} << (v - 1))) {
      gens.push_back(var_poly(fld, ring, ring.xvar(v)));
      gens.push_back(var_poly(fld, ring, ring.yvar(v)));
    }
  std::vector<int> rest;
  for (int v = 1; v <= g.n(); ++v)
    if (!(tmask & (std::uint64_t{1} << (v - 1)))) rest.push_back(v);
  auto sub_g = induced_subgraph(g, rest);
  for (const auto& comp : connected_components(sub_g.graph))
    for (std::size_t a = 0; a < comp.size(); ++a)
      for (std::size_t b = a + 1; b < comp.size(); ++b)
        gens.push_back(edge_binomial(fld, ring, sub_g.labels[comp[a] - 1],
                                     sub_g.labels[comp[b] - 1]));
  return Ideal<F>{ring, std::move(gens)};
}

// J_G = intersection of P_T(G) over all T, checked by iterated elimination.
template <class F>
bool verify_herzog_decomposition(const F& fld, const Ring& ring, const Graph& g) {
  if (g.n() > 6)
    throw std::invalid_argument("decomposition sweep needs 2^n intersections; capped at n <= 6");
  Ideal<F> running = p_t_ideal(fld, ring, g, {});
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g.n()); ++mask) {
    std::vector<int> T;
    for (int v = 1; v <= g.n(); ++v)
      if (mask & (std::uint64_t{1} << (v - 1))) T.push_back(v);
    running = ideal_intersection(fld, running, p_t_ideal(fld, ring, g, T));
  }
  return ideal_equal(fld, running, binomial_edge_ideal(fld, ring, g));
}

// Same graph, incident edges of v removed: J of this graph is J_{G minus v}
// embedded in the full 2n-variable ring.
inline Graph isolate_vertex(const Graph& g, int v) {
  Graph h = g;
  for (int u : g.neighbors(v)) h.remove_edge(v, u);
  return h;
}

template <class F>
struct OhtaniSplit {
  Ideal<F> a;  // J of the neighborhood completion at v
  Ideal<F> b;  // (x_v, y_v) + J of G with v removed
  Ideal<F> c;  // (x_v, y_v) + J of the completion with v removed
  bool intersection_holds = false;  // J_G == a cap b
  bool sum_holds = false;           // a + b == c
};

template <class F>
OhtaniSplit<F> ohtani_split(const F& fld, const Ring& ring, const Graph& g, int v) {
  g.check_vertex(v);
  if (is_free_vertex(g, v))
    throw std::invalid_argument("vertex " + std::to_string(v) +
                                " is free; the split needs an internal vertex");
  Graph gv = neighborhood_completion(g, v);
  OhtaniSplit<F> out;
  out.a = binomial_edge_ideal(fld, ring, gv);
  auto with_vars = [&](const Graph& h) {
    Ideal<F> id = binomial_edge_ideal(fld, ring, h);
    id.gens.insert(id.gens.begin(), var_poly(fld, ring, ring.yvar(v)));
    id.gens.insert(id.gens.begin(), var_poly(fld, ring, ring.xvar(v)));
    return id;
  };
  out.b = with_vars(isolate_vertex(g, v));
  out.c = with_vars(isolate_vertex(gv, v));
  out.intersection_holds =
      ideal_equal(fld, binomial_edge_ideal(fld, ring, g),
                  ideal_intersection(fld, out.a, out.b));
  out.sum_holds = ideal_equal(fld, ideal_sum(out.a, out.b), out.c);
  return out;
}

// --- dumps ---------------------------------------------------------------

template <class F>
std::string gb_dump(const F& fld, const GroebnerBasis<F>& gb) {
  std::string s = "order " + MonOrder::name(gb.ring.ord.kind) + " prime " +
                  std::to_string(gb.ring.prime) + "\n";
  for (const auto& g : gb.elems) s += to_string(fld, g) + "\n";
  return s;
}

}  // namespace bei
