#pragma once
// Graded Betti numbers beta_{i,j}(R/I), projective dimension, and
// Castelnuovo-Mumford regularity.  Two independent strategies: a trimmed
// syzygy-by-syzygy free resolution (default), and Koszul homology strand by
// strand for small instances.

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "bei/budget.hpp"
#include "bei/groebner.hpp"
#include "bei/zpoly.hpp"

namespace bei {

struct BettiTable {
  std::map<std::pair<int, int>, long> entries;  // nonzero (i, j) -> beta

  long get(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }
  void set(int i, int j, long v) {
    if (v < 0) throw std::logic_error("negative Betti number computed");
    if (v) entries[{i, j}] = v;
  }
  int pd() const {
    int m = 0;
    for (const auto& [ij, v] : entries) m = std::max(m, ij.first);
    return m;
  }
  int reg() const {
    int m = 0;
    for (const auto& [ij, v] : entries) m = std::max(m, ij.second - ij.first);
    return m;
  }
  bool operator==(const BettiTable&) const = default;
  std::string to_string() const;  // grid, row j-i, column i
};

// sum_i (-1)^i beta_{i,j} must equal the degree-j numerator coefficient
bool betti_matches_numerator(const BettiTable& t, const ZPoly& numerator);

// Corners of the table: (i, j) with beta_{i,j} != 0 such that every other
// nonzero entry (k, l) has k < i or l - k < j - i.  Sorted by i; the last
// corner realizes pd, the first realizes reg.
std::vector<std::pair<int, int>> extremal_betti(const BettiTable& t);
bool is_unique_extremal(const BettiTable& t);

// A nonempty stop probe lets callers bound wall-clock time; when it fires
// the computation raises BudgetExceeded rather than returning a partial
// table.
template <class F>
BettiTable betti_resolution(const F& fld, const GroebnerBasis<F>& gb,
                            long max_generators = 2000000,
                            const std::function<bool()>& stop = {});

// Complete for strands j - i <= max_strand; anything above the cap is not
// examined, so max_strand must be at least reg(R/I) for a full table.
// max_entries caps the fill of each strand's rank elimination.
template <class F>
BettiTable betti_koszul(const F& fld, const GroebnerBasis<F>& gb,
                        int max_strand, long max_entries = 20000000,
                        const std::function<bool()>& stop = {});

}  // namespace bei
