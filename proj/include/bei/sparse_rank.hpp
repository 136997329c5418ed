#pragma once
// Rank of a sparse matrix given as columns of (row, coeff) pairs, by
// incremental elimination against stored pivot columns.

#include <algorithm>
#include <functional>
#include <utility>
#include <vector>

#include "bei/budget.hpp"

namespace bei {

template <class F>
using SparseCol = std::vector<std::pair<int, typename F::Elem>>;

namespace detail {

// a + c*b for columns sorted by row
template <class F>
SparseCol<F> col_axpy(const F& fld, const SparseCol<F>& a,
                      const typename F::Elem& c, const SparseCol<F>& b) {
  SparseCol<F> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, fld.mul(c, b[j].second));
      ++j;
    } else {
      auto v = fld.add(a[i].second, fld.mul(c, b[j].second));
      if (!fld.is_zero(v)) out.emplace_back(a[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace detail

// Consumes the columns; rows only bounds the pivot table.  A positive
// max_stored caps the total entries held in pivot columns; a nonempty stop
// probe aborts between columns when it reports true.
template <class F>
long sparse_rank(const F& fld, int rows,
                 std::vector<SparseCol<F>> cols, long max_stored = -1,
                 const std::function<bool()>& stop = {}) {
  std::vector<SparseCol<F>> pivot(rows);
  std::vector<char> used(rows, 0);
  long rank = 0, stored = 0;
  for (auto& col : cols) {
    if (stop && stop())
      throw BudgetExceeded("rank elimination hit its wall-clock budget");
    std::sort(col.begin(), col.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseCol<F> cur = std::move(col);
    while (!cur.empty() && used[cur.front().first])
      cur = detail::col_axpy(fld, cur, fld.neg(cur.front().second),
                             pivot[cur.front().first]);
    if (cur.empty()) continue;
    const auto inv = fld.inv(cur.front().second);
    for (auto& t : cur) t.second = fld.mul(t.second, inv);
    used[cur.front().first] = 1;
    stored += static_cast<long>(cur.size());
    if (max_stored > 0 && stored > max_stored)
      throw BudgetExceeded("rank elimination exceeded its entry budget");
    pivot[cur.front().first] = std::move(cur);
    ++rank;
  }
  return rank;
}

}  // namespace bei
