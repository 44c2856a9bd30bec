#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "partent/partent.hpp"

namespace partent::testing {

inline Rat q(long p, long d = 1) { return Rat(p, d); }

/// Set from (lo, hi) pairs of "p/q" text, e.g. set({{"0", "1/2"}, {"3/4", "1"}}).
inline MSet set(std::initializer_list<std::pair<const char*, const char*>> pairs) {
  std::vector<Interval> raw;
  for (const auto& [lo, hi] : pairs) raw.push_back({Rat::parse(lo), Rat::parse(hi)});
  return MSet::normalize(std::move(raw));
}

inline Algebra algebra(std::initializer_list<MSet> atoms) { return Algebra::from_atoms(std::vector<MSet>(atoms)); }

inline const Algebra& halves() {
  static const Algebra a = Algebra::equipartition(2);
  return a;
}

/// density 2 on [0,1/2), 0 on [1/2,1)
inline SignedMeasure half_mass() { return SignedMeasure({q(0), q(1, 2), q(1)}, {q(2), q(0)}); }

/// density 2, 0, 1, 1 on the quarters
inline SignedMeasure quarters_measure() { return SignedMeasure::on_grid({q(2), q(0), q(1), q(1)}); }

}  // namespace partent::testing
