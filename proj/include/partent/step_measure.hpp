#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "partent/error.hpp"
#include "partent/mset.hpp"
#include "partent/rational.hpp"

namespace partent {

namespace detail {
inline Rat scale(const Rat& length, const Rat& density) { return length * density; }
inline double scale(const Rat& length, double density) { return length.to_double() * density; }
}  // namespace detail

/// Measure on [0,1) with a piecewise-constant density over rational breakpoints.
///
/// `Density = Rat` gives an exact signed measure; `Density = double` is used for
/// measures recovered numerically. Absolute continuity holds by construction.
template <class Density>
class StepMeasure {
 public:
  using density_type = Density;

  StepMeasure(std::vector<Rat> breakpoints, std::vector<Density> densities)
      : breakpoints_(std::move(breakpoints)), densities_(std::move(densities)) {
    if (breakpoints_.size() < 2 || breakpoints_.front() != Rat(0) || breakpoints_.back() != Rat(1))
      throw Error(ErrorCode::InvalidMeasure, "breakpoints must start at 0 and end at 1");
    for (std::size_t k = 1; k < breakpoints_.size(); ++k)
      if (!(breakpoints_[k - 1] < breakpoints_[k]))
        throw Error(ErrorCode::InvalidMeasure, "breakpoints must be strictly increasing");
    if (densities_.size() + 1 != breakpoints_.size())
      throw Error(ErrorCode::InvalidMeasure, "need exactly one density per breakpoint gap");
  }

  /// Density constant on [0,1).
  static StepMeasure uniform(Density value) { return StepMeasure({Rat(0), Rat(1)}, {std::move(value)}); }

  /// Density `values[i]` on cell [i/n, (i+1)/n), n = values.size().
  static StepMeasure on_grid(std::vector<Density> values) {
    const int n = static_cast<int>(values.size());
    std::vector<Rat> bp;
    bp.reserve(values.size() + 1);
    for (int i = 0; i <= n; ++i) bp.emplace_back(i, n);
    return StepMeasure(std::move(bp), std::move(values));
  }

  const std::vector<Rat>& breakpoints() const { return breakpoints_; }
  const std::vector<Density>& densities() const { return densities_; }

  /// Integral of the density over `a`.
  Density operator()(const MSet& a) const {
    Density total{};
    std::size_t piece = 0;
    for (const auto& iv : a.intervals()) {
      while (piece + 1 < breakpoints_.size() && breakpoints_[piece + 1] <= iv.lo) ++piece;
      for (std::size_t p = piece; p + 1 < breakpoints_.size() && breakpoints_[p] < iv.hi; ++p) {
        const Rat& lo = max(iv.lo, breakpoints_[p]);
        const Rat& hi = min(iv.hi, breakpoints_[p + 1]);
        if (lo < hi) total += detail::scale(hi - lo, densities_[p]);
      }
    }
    return total;
  }

  friend bool operator==(const StepMeasure&, const StepMeasure&) = default;

 private:
  std::vector<Rat> breakpoints_;
  std::vector<Density> densities_;
};

using SignedMeasure = StepMeasure<Rat>;
using StepDensity = StepMeasure<double>;

inline Rat measure_eval(const SignedMeasure& m, const MSet& a) { return m(a); }

/// Finite-valued simple function on [0,1) whose values may be +infinity.
struct SimpleFunction {
  struct Piece {
    MSet set;
    double value;
  };
  std::vector<Piece> pieces;

  /// Integral against a signed measure, with 0 * (+inf) = 0.
  double integrate(const SignedMeasure& m) const {
    double total = 0.0;
    for (const auto& p : pieces) {
      const Rat mass = m(p.set);
      if (mass.is_zero()) continue;
      total += p.value * mass.to_double();
    }
    return total;
  }
};

}  // namespace partent
