#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "bei/betti.hpp"
#include "bei/field.hpp"
#include "bei/sparse_rank.hpp"

// Free resolution of R/I by iterated syzygies of a Groebner basis.  Each
// level carries a Groebner basis of the syzygy module under the induced
// order (weights compose down to ring monomials, ties to the smaller
// component).  Leading terms of the candidate syzygies are trimmed to a
// minimal monomial generating set per component before any reduction work.
// The resolution is not minimal; the graded Betti numbers fall out as the
// homology of the scalar parts of the maps.

namespace bei {

namespace {

template <class F>
struct MTerm {
  int comp;
  Monomial m;
  typename F::Elem c;
};

// weights give each component's composed ring monomial
struct ModOrder {
  const MonOrder* ord;
  const std::vector<Monomial>* wt;

  int cmp(int ca, const Monomial& ma, int cb, const Monomial& mb) const {
    const int c = ord->compare(ma.mul((*wt)[ca]), mb.mul((*wt)[cb]));
    if (c) return c;
    if (ca != cb) return ca < cb ? 1 : -1;
    return 0;
  }
};

template <class F>
void sort_terms(const F& fld, const ModOrder& o, std::vector<MTerm<F>>& ts) {
  std::sort(ts.begin(), ts.end(), [&](const MTerm<F>& a, const MTerm<F>& b) {
    return o.cmp(a.comp, a.m, b.comp, b.m) > 0;
  });
  std::size_t out = 0;
  for (std::size_t i = 0; i < ts.size();) {
    MTerm<F> t = ts[i];
    ++i;
    while (i < ts.size() && ts[i].comp == t.comp && ts[i].m == t.m) {
      t.c = fld.add(t.c, ts[i].c);
      ++i;
    }
    if (!fld.is_zero(t.c)) ts[out++] = t;
  }
  ts.resize(out);
}

// a - c * q * b, all inputs sorted; multiplying b through by one monomial
// keeps it sorted, so this is a plain merge
template <class F>
std::vector<MTerm<F>> axpy(const F& fld, const ModOrder& o,
                           const std::vector<MTerm<F>>& a,
                           const typename F::Elem& c, const Monomial& q,
                           const std::vector<MTerm<F>>& b) {
  std::vector<MTerm<F>> out;
  out.reserve(a.size() + b.size());
  const auto nc = fld.neg(c);
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int which;
    Monomial bm;
    if (i == a.size()) {
      which = 1;
    } else if (j == b.size()) {
      which = -1;
    } else {
      bm = b[j].m.mul(q);
      which = -o.cmp(a[i].comp, a[i].m, b[j].comp, bm);
    }
    if (which < 0) {
      out.push_back(a[i++]);
    } else if (which > 0) {
      out.push_back(MTerm<F>{b[j].comp, b[j].m.mul(q), fld.mul(nc, b[j].c)});
      ++j;
    } else {
      const auto v = fld.add(a[i].c, fld.mul(nc, b[j].c));
      if (!fld.is_zero(v)) out.push_back(MTerm<F>{a[i].comp, a[i].m, v});
      ++i;
      ++j;
    }
  }
  return out;
}

template <class F>
struct Level {
  std::vector<std::vector<MTerm<F>>> gens;  // monic, sorted
  std::vector<Monomial> weight;             // composed ring weight per gen
  std::vector<int> deg;
  // scalar part of the map into the previous level, per generator
  std::vector<std::vector<std::pair<int, typename F::Elem>>> scalar;
};

template <class F>
long rank_at_degree(const F& fld, const Level<F>& lvl,
                    const std::vector<int>& prev_deg, int j,
                    const std::function<bool()>& stop) {
  std::vector<int> prev_row(prev_deg.size(), -1);
  int rows = 0;
  for (std::size_t r = 0; r < prev_deg.size(); ++r)
    if (prev_deg[r] == j) prev_row[r] = rows++;
  std::vector<SparseCol<F>> cols;
  for (std::size_t cgen = 0; cgen < lvl.gens.size(); ++cgen) {
    if (lvl.deg[cgen] != j) continue;
    SparseCol<F> col;
    for (const auto& [r, v] : lvl.scalar[cgen])
      if (prev_row[r] != -1) col.emplace_back(prev_row[r], v);
    cols.push_back(std::move(col));
  }
  return sparse_rank(fld, rows, std::move(cols), -1, stop);
}

}  // namespace

template <class F>
BettiTable betti_resolution(const F& fld, const GroebnerBasis<F>& gb,
                            long max_generators,
                            const std::function<bool()>& stop) {
  const MonOrder& ord = gb.ring.ord;
  long total_gens = 0;

  std::vector<Level<F>> levels;
  // level 0: R itself
  std::vector<Monomial> w0{Monomial::one()};
  std::vector<int> deg0{0};

  // level 1: the basis elements as module elements over one component
  {
    Level<F> l1;
    for (const auto& g : gb.elems) {
      std::vector<MTerm<F>> v;
      v.reserve(g.terms.size());
      for (const auto& t : g.terms) v.push_back(MTerm<F>{0, t.m, t.c});
      l1.gens.push_back(std::move(v));
      l1.weight.push_back(g.lt().m);
      l1.deg.push_back(g.degree());
      l1.scalar.emplace_back();  // homogeneous of positive degree: no scalars
    }
    total_gens += static_cast<long>(l1.gens.size());
    levels.push_back(std::move(l1));
  }

  while (!levels.back().gens.empty()) {
    if (static_cast<int>(levels.size()) > gb.ring.nvars + 1)
      throw std::logic_error("resolution exceeded the ambient variable count");
    const Level<F>& cur = levels.back();
    const std::vector<Monomial>& wprev =
        levels.size() == 1 ? w0 : levels[levels.size() - 2].weight;
    const ModOrder order{&ord, &wprev};
    const int s = static_cast<int>(cur.gens.size());

    // candidate syzygy leads: for a < b with equal lead component,
    // lcm(lt_a, lt_b)/lt_a in component a; trim to minimal monomials
    struct Cand {
      Monomial m;
      int b;
    };
    Level<F> nxt;
    for (int a = 0; a < s; ++a) {
      const auto& la = cur.gens[a].front();
      std::vector<Cand> cands;
      for (int b = a + 1; b < s; ++b) {
        const auto& lb = cur.gens[b].front();
        if (lb.comp != la.comp) continue;
        cands.push_back(Cand{la.m.lcm(lb.m).div(la.m), b});
      }
      std::sort(cands.begin(), cands.end(), [](const Cand& x, const Cand& y) {
        if (x.m.deg != y.m.deg) return x.m.deg < y.m.deg;
        if (!(x.m.e == y.m.e)) return x.m.e < y.m.e;
        return x.b < y.b;
      });
      std::vector<Cand> kept;
      for (const auto& c : cands) {
        bool covered = false;
        for (const auto& k : kept)
          if (k.m.divides(c.m)) {
            covered = true;
            break;
          }
        if (!covered) kept.push_back(c);
      }
      for (const auto& [mab, b] : kept) {
        if (stop && stop())
          throw BudgetExceeded("resolution hit its wall-clock budget");
        // reduce the S-vector (lcm/lt_a) g_a - (lcm/lt_b) g_b to zero,
        // collecting quotients; the syzygy is the next-level generator
        const auto& lb = cur.gens[b].front();
        const Monomial mba = la.m.lcm(lb.m).div(lb.m);
        std::vector<MTerm<F>> sv =
            axpy(fld, order, {}, fld.neg(fld.one()), mab, cur.gens[a]);
        sv = axpy(fld, order, sv, fld.one(), mba, cur.gens[b]);
        std::vector<MTerm<F>> tau;
        tau.push_back(MTerm<F>{a, mab, fld.one()});
        tau.push_back(MTerm<F>{b, mba, fld.neg(fld.one())});
        while (!sv.empty()) {
          const auto& lead = sv.front();
          int k = -1;
          for (int t = 0; t < s; ++t)
            if (cur.gens[t].front().comp == lead.comp &&
                cur.gens[t].front().m.divides(lead.m)) {
              k = t;
              break;
            }
          if (k == -1)
            throw std::logic_error(
                "syzygy reduction hit an irreducible lead term");
          const Monomial q = lead.m.div(cur.gens[k].front().m);
          tau.push_back(MTerm<F>{k, q, fld.neg(lead.c)});
          sv = axpy(fld, order, sv, lead.c, q, cur.gens[k]);
        }
        // sort tau under the order induced by the current level
        const ModOrder tau_order{&ord, &cur.weight};
        sort_terms(fld, tau_order, tau);
        if (tau.front().comp != a || !(tau.front().m == mab))
          throw std::logic_error("syzygy lead term mismatch");
        std::vector<std::pair<int, typename F::Elem>> sc;
        for (const auto& t : tau)
          if (t.m.is_one()) sc.emplace_back(t.comp, t.c);
        nxt.gens.push_back(std::move(tau));
        nxt.weight.push_back(mab.mul(cur.weight[a]));
        nxt.deg.push_back(mab.deg + cur.deg[a]);
        nxt.scalar.push_back(std::move(sc));
        if (++total_gens > max_generators)
          throw BudgetExceeded("resolution generator budget exceeded");
      }
    }
    levels.push_back(std::move(nxt));
  }

  BettiTable table;
  table.set(0, 0, 1);
  for (std::size_t i = 1; i < levels.size(); ++i) {
    const std::vector<int>& prev_deg = i == 1 ? deg0 : levels[i - 2].deg;
    std::vector<int> js = levels[i - 1].deg;
    std::sort(js.begin(), js.end());
    js.erase(std::unique(js.begin(), js.end()), js.end());
    for (int j : js) {
      long count = 0;
      for (int d : levels[i - 1].deg)
        if (d == j) ++count;
      count -= rank_at_degree(fld, levels[i - 1], prev_deg, j, stop);
      if (i < levels.size())
        count -= rank_at_degree(fld, levels[i],
                                levels[i - 1].deg, j, stop);
      if (i == 1 && j == 0)
        throw std::logic_error("degree-zero generator in the ideal");
      table.set(static_cast<int>(i), j, count);
    }
  }
  return table;
}

template BettiTable betti_resolution(const Fp&, const GroebnerBasis<Fp>&, long,
                                     const std::function<bool()>&);
template BettiTable betti_resolution(const QQ&, const GroebnerBasis<QQ>&, long,
                                     const std::function<bool()>&);

}  // namespace bei
