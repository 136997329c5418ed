#include "bei/betti.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "bei/field.hpp"
#include "bei/sparse_rank.hpp"

namespace bei {

std::string BettiTable::to_string() const {
  if (entries.empty()) return "(empty)\n";
  const int p = pd(), r = reg();
  std::ostringstream os;
  os << "      ";
  for (int i = 0; i <= p; ++i) os << '\t' << i;
  os << '\n';
  for (int s = 0; s <= r; ++s) {
    os << s << ':';
    for (int i = 0; i <= p; ++i) {
      const long v = get(i, i + s);
      os << '\t';
      if (v)
        os << v;
      else
        os << '.';
    }
    os << '\n';
  }
  return os.str();
}

bool betti_matches_numerator(const BettiTable& t, const ZPoly& numerator) {
  std::map<int, mpz_class> sums;
  for (const auto& [ij, v] : t.entries) {
    if (ij.first % 2 == 0)
      sums[ij.second] += v;
    else
      sums[ij.second] -= v;
  }
  int maxj = numerator.degree();
  for (const auto& [j, v] : sums) maxj = std::max(maxj, j);
  for (int j = 0; j <= maxj; ++j) {
    const auto it = sums.find(j);
    const mpz_class s = it == sums.end() ? mpz_class(0) : it->second;
    if (s != numerator.coeff(j)) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> extremal_betti(const BettiTable& t) {
  std::vector<std::pair<int, int>> corners;
  for (const auto& [ij, v] : t.entries) {
    const int i = ij.first, r = ij.second - ij.first;
    bool corner = true;
    for (const auto& [kl, w] : t.entries) {
      const int k = kl.first, s = kl.second - kl.first;
      if ((k != i || s != r) && k >= i && s >= r) {
        corner = false;
        break;
      }
    }
    if (corner) corners.push_back(ij);
  }
  return corners;  // map order: ascending i
}

bool is_unique_extremal(const BettiTable& t) {
  return extremal_betti(t).size() == 1;
}

namespace {

// standard monomials (no generator divides them) of one degree
void standard_monomials_rec(int nvars, const std::vector<Monomial>& lts,
                            int var, int left, Monomial& cur,
                            std::vector<Monomial>& out) {
  if (var == nvars - 1) {
    cur.e[var] = std::uint8_t(left);
    cur.deg = std::uint16_t(cur.deg + left);
    bool std_mono = true;
    for (const auto& m : lts)
      if (m.divides(cur)) {
        std_mono = false;
        break;
      }
    if (std_mono) out.push_back(cur);
    cur.deg = std::uint16_t(cur.deg - left);
    cur.e[var] = 0;
    return;
  }
  for (int k = 0; k <= left; ++k) {
    cur.e[var] = std::uint8_t(k);
    cur.deg = std::uint16_t(cur.deg + k);
    standard_monomials_rec(nvars, lts, var + 1, left - k, cur, out);
    cur.deg = std::uint16_t(cur.deg - k);
    cur.e[var] = 0;
  }
}

std::vector<Monomial> standard_monomials(int nvars,
                                         const std::vector<Monomial>& lts,
                                         int d) {
  std::vector<Monomial> out;
  Monomial cur;
  standard_monomials_rec(nvars, lts, 0, d, cur, out);
  return out;
}

std::vector<std::uint64_t> size_subsets(int m, int k) {
  std::vector<std::uint64_t> out;
  if (k < 0 || k > m) return out;
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::uint64_t mask = 0;
    for (int i : idx) mask |= std::uint64_t{1} << i;
    out.push_back(mask);
    int p = k - 1;
    while (p >= 0 && idx[p] == m - k + p) --p;
    if (p < 0) break;
    ++idx[p];
    for (int q = p + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
  }
  return out;
}

}  // namespace

template <class F>
BettiTable betti_koszul(const F& fld, const GroebnerBasis<F>& gb,
                        int max_strand, long max_entries,
                        const std::function<bool()>& stop) {
  const int m = gb.ring.nvars;
  std::vector<Monomial> lts;
  for (const auto& p : gb.elems) lts.push_back(p.lt().m);

  // standard-monomial bases per degree, with index lookup
  std::vector<std::vector<Monomial>> basis(max_strand + 2);
  std::vector<std::unordered_map<Monomial, int, MonomialHash>> index(
      max_strand + 2);
  for (int d = 0; d <= max_strand + 1; ++d) {
    basis[d] = standard_monomials(m, lts, d);
    for (std::size_t i = 0; i < basis[d].size(); ++i)
      index[d].emplace(basis[d][i], static_cast<int>(i));
  }

  // multiplication by each variable, degree d -> d+1, over the bases
  std::vector<std::vector<std::vector<SparseCol<F>>>> mult(max_strand + 1);
  for (int d = 0; d <= max_strand; ++d) {
    mult[d].assign(m, std::vector<SparseCol<F>>(basis[d].size()));
    for (int k = 0; k < m; ++k)
      for (std::size_t c = 0; c < basis[d].size(); ++c) {
        const Monomial prod = basis[d][c].mul(Monomial::var(k));
        SparseCol<F> col;
        if (auto it = index[d + 1].find(prod); it != index[d + 1].end()) {
          col.emplace_back(it->second, fld.one());
        } else {
          const Polynomial<F> nf = normal_form(
              fld,
              make_poly(fld, gb.ring, {Term<F>{prod, fld.one()}}),
              gb.elems);
          for (const auto& t : nf.terms)
            col.emplace_back(index[d + 1].at(t.m), t.c);
        }
        std::sort(col.begin(), col.end());
        mult[d][k][c] = std::move(col);
      }
  }

  // rank of the Koszul differential out of exterior degree i, strand s
  std::map<std::pair<int, int>, long> rank;
  const auto rank_at = [&](int i, int s) -> long {
    if (i <= 0 || i > m || s < 0 || s > max_strand) return 0;
    if (auto it = rank.find({i, s}); it != rank.end()) return it->second;
    const auto cols_T = size_subsets(m, i);
    const auto rows_T = size_subsets(m, i - 1);
    std::unordered_map<std::uint64_t, long> row_of;
    for (std::size_t r = 0; r < rows_T.size(); ++r) row_of[rows_T[r]] = r;
    const long ncols = static_cast<long>(cols_T.size()) *
                       static_cast<long>(basis[s].size());
    const long nrows = static_cast<long>(rows_T.size()) *
                       static_cast<long>(basis[s + 1].size());
    if (nrows > 1000000 || ncols > 1000000)
      throw BudgetExceeded("Koszul strand matrix dimensions out of budget");
    std::vector<SparseCol<F>> cols;
    cols.reserve(ncols);
    const long bs1 = static_cast<long>(basis[s + 1].size());
    for (const std::uint64_t T : cols_T)
      for (std::size_t c = 0; c < basis[s].size(); ++c) {
        SparseCol<F> col;
        int pos = 0;
        for (int k = 0; k < m; ++k) {
          if (!(T >> k & 1)) continue;
          const long base = row_of.at(T & ~(std::uint64_t{1} << k)) * bs1;
          for (const auto& [ri, v] : mult[s][k][c])
            col.emplace_back(static_cast<int>(base + ri),
                             pos % 2 ? fld.neg(v) : v);
          ++pos;
        }
        cols.push_back(std::move(col));
      }
    const long r = sparse_rank(fld, static_cast<int>(nrows), std::move(cols),
                               max_entries, stop);
    rank[{i, s}] = r;
    return r;
  };

  BettiTable table;
  std::vector<long> nsubsets(m + 2, 0);
  for (int i = 0; i <= m; ++i)
    nsubsets[i] = static_cast<long>(size_subsets(m, i).size());
  for (int i = 0; i <= m; ++i)
    for (int s = 0; s <= max_strand; ++s) {
      const long dim = nsubsets[i] * static_cast<long>(basis[s].size());
      if (dim == 0) continue;
      const long beta = dim - rank_at(i, s) - rank_at(i + 1, s - 1);
      table.set(i, i + s, beta);
    }
  return table;
}

template BettiTable betti_koszul(const Fp&, const GroebnerBasis<Fp>&, int,
                                 long, const std::function<bool()>&);
template BettiTable betti_koszul(const QQ&, const GroebnerBasis<QQ>&, int,
                                 long, const std::function<bool()>&);

}  // namespace bei
