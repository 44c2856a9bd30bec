#pragma once

// Independent reference computations used by the verification suites and tests.
// Nothing here calls the routine it checks.

#include <cmath>
#include <vector>

#include "partent/algebra.hpp"
#include "partent/mset.hpp"
#include "partent/rational.hpp"
#include "partent/step_measure.hpp"

namespace partent::oracle {

namespace detail {
inline void enumerate_matchings(const std::vector<std::vector<Rat>>& w, std::size_t row, std::vector<bool>& used,
                                const Rat& acc, Rat& best) {
  if (row == w.size()) {
    if (best < acc) best = acc;
    return;
  }
  enumerate_matchings(w, row + 1, used, acc, best);
  for (std::size_t j = 0; j < used.size(); ++j) {
    if (used[j]) continue;
    used[j] = true;
    enumerate_matchings(w, row + 1, used, acc + w[row][j], best);
    used[j] = false;
  }
}
}  // namespace detail

/// 1 - (best total overlap over every partial matching), by exhaustive enumeration.
inline Rat distance_d_brute_force(const Algebra& a, const Algebra& b) {
  std::vector<std::vector<Rat>> w(a.size(), std::vector<Rat>(b.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) w[i][j] = (a[i] & b[j]).measure();
  std::vector<bool> used(b.size(), false);
  Rat best;
  detail::enumerate_matchings(w, 0, used, Rat(0), best);
  return Rat(1) - best;
}

/// Delta of L_m: (m(W) - m(V)) log2(lambda), from exact measure values.
inline double lm_delta(const SignedMeasure& m, const MSet& v, const MSet& w, const Rat& lambda) {
  return (m(w) - m(v)).to_double() * std::log2(lambda.to_double());
}

/// Exact cells m(cell_j) - m(Omega)/n of the normalized recovered measure of L_m.
inline std::vector<double> lm_grid(const SignedMeasure& m, int n) {
  const Rat total = m(MSet::whole());
  std::vector<double> cells;
  for (int j = 0; j < n; ++j)
    cells.push_back((m(MSet::interval(Rat(j, n), Rat(j + 1, n))) - total / Rat(n)).to_double());
  return cells;
}

/// Atom measures by direct interval-length summation, bypassing MSet::measure.
inline Rat raw_length(const MSet& s) {
  Rat total;
  for (const auto& iv : s.intervals()) total += iv.hi - iv.lo;
  return total;
}

}  // namespace partent::oracle
