#pragma once
// Hilbert series of R/I from a Groebner basis: the graded dimensions agree
// with those of R/in(I), so everything reduces to a monomial ideal.  The
// numerator over (1-t)^nvars comes from a pivot-splitting recursion; pulling
// out all (1-t) factors leaves the h-polynomial and the Krull dimension.

#include <functional>
#include <vector>

#include "bei/groebner.hpp"
#include "bei/zpoly.hpp"

namespace bei {

struct HilbertSeries {
  int nvars = 0;
  ZPoly numerator;  // HS(R/I) = numerator / (1-t)^nvars
  ZPoly h;          // numerator with every (1-t) factor removed, h(1) != 0
  int dim = 0;      // nvars minus the number of factors removed
};

// Numerator of the Hilbert series of R/(monomial ideal) over (1-t)^nvars.
// A nonempty stop probe bounds wall-clock time; when it fires the recursion
// raises BudgetExceeded.
ZPoly hilbert_numerator(int nvars, const std::vector<Monomial>& gens,
                        const std::function<bool()>& stop = {});

HilbertSeries hilbert_from_monomials(int nvars,
                                     const std::vector<Monomial>& gens,
                                     const std::function<bool()>& stop = {});

// Standard monomials of degree d: monomials no generator divides.  Direct
// enumeration, an independent check on the series coefficients.
long count_standard_monomials(int nvars,
                                   const std::vector<Monomial>& gens, int d);

mpz_class multiplicity(const HilbertSeries& s);  // h(1)
int h_degree(const HilbertSeries& s);            // deg h, -1 for h = 0

// Coefficients 0..upto of the series numerator/(1-t)^nvars.
std::vector<mpz_class> hilbert_coefficients(const HilbertSeries& s, int upto);

template <class F>
std::vector<Monomial> leading_monomials(const GroebnerBasis<F>& gb) {
  std::vector<Monomial> lts;
  lts.reserve(gb.elems.size());
  for (const auto& p : gb.elems) lts.push_back(p.lt().m);
  return lts;
}

template <class F>
HilbertSeries hilbert_series(const GroebnerBasis<F>& gb,
                             const std::function<bool()>& stop = {}) {
  return hilbert_from_monomials(gb.ring.nvars, leading_monomials(gb), stop);
}

template <class F>
long hilbert_function(const GroebnerBasis<F>& gb, int d) {
  return count_standard_monomials(gb.ring.nvars, leading_monomials(gb), d);
}

}  // namespace bei
