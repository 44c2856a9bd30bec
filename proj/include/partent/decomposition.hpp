#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>
#include <vector>

#include "partent/algebra.hpp"
#include "partent/entropy.hpp"
#include "partent/error.hpp"
#include "partent/random.hpp"
#include "partent/step_measure.hpp"
#include "partent/transport.hpp"

namespace partent {

/// Recovered measure on the n-cell equipartition: cells[j] = m([j/n, (j+1)/n)).
struct GridMeasure {
  int n = 0;
  std::vector<double> cells;

  double total() const { return std::accumulate(cells.begin(), cells.end(), 0.0); }
};

inline void require_grid(int n) {
  if (n < 2 || (n & (n - 1)) != 0)
    throw Error(ErrorCode::InvalidGrid, "grid size must be a power of two >= 2, got " + std::to_string(n));
}

/// cells[j] = (1/n) sum_i Delta(A_i, A_j) over the n-cell equipartition, so that
/// the recovered measure is normalized to m(Omega) = 0.
inline GridMeasure extract_measure(const EntropySpec& spec, int n) {
  require_grid(n);
  const Algebra grid = Algebra::equipartition(n);
  GridMeasure g{n, std::vector<double>(static_cast<std::size_t>(n), 0.0)};
  for (std::size_t j = 0; j < grid.size(); ++j) {
    double sum = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i)
      if (i != j) sum += delta_lambda(spec, {grid[i], grid[j]}, Rat(2)).value;
    g.cells[j] = sum / n;
  }
  return g;
}

/// Step density n * cells[j] on cell j.
inline StepDensity grid_to_density(const GridMeasure& g) {
  std::vector<double> d(g.cells.size());
  std::transform(g.cells.begin(), g.cells.end(), d.begin(), [&](double c) { return c * g.n; });
  return StepDensity::on_grid(std::move(d));
}

/// I~(A) = I(A) - L_m(A) for a recovered step density m.
class ResidualEntropy {
 public:
  ResidualEntropy(EntropySpec spec, StepDensity density) : spec_(std::move(spec)), density_(std::move(density)) {}

  double operator()(const Algebra& a) const {
    double lm = 0.0;
    for (const auto& atom : a.atoms()) lm += density_(atom) * info(atom.measure());
    return eval_entropy(spec_, a) - lm;
  }

  const EntropySpec& spec() const { return spec_; }
  const StepDensity& density() const { return density_; }

 private:
  EntropySpec spec_;
  StepDensity density_;
};

inline double residual_eval(const EntropySpec& spec, const GridMeasure& g, const Algebra& a) {
  return ResidualEntropy(spec, grid_to_density(g))(a);
}

/// Largest |I~(A) - I~(B)| over `trials` random pairs sharing their atom measures.
inline double verify_atom_dependence(const EntropySpec& spec, const GridMeasure& g, int trials, std::uint64_t seed) {
  if (trials < 1) throw Error(ErrorCode::InvalidTrials, "trials must be >= 1");
  const ResidualEntropy residual(spec, grid_to_density(g));
  Rng rng(seed);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const auto [a, b] = random_same_measure_pair(rng);
    worst = std::max(worst, std::abs(residual(a) - residual(b)));
  }
  return worst;
}

struct DecompositionReport {
  GridMeasure grid;
  ResidualEntropy residual;
  double atom_dependence_deviation = 0.0;
  int trials = 0;
  double additivity_deviation = 0.0;
};

/// Splits `spec` into L_m (recovered on an n-grid) plus a residual that should
/// depend on atom measures alone, and measures how far that holds.
inline DecompositionReport decompose(const EntropySpec& spec, int n, int trials, std::uint64_t seed) {
  if (trials < 1) throw Error(ErrorCode::InvalidTrials, "trials must be >= 1");
  GridMeasure g = extract_measure(spec, n);
  ResidualEntropy residual(spec, grid_to_density(g));
  const double dependence = verify_atom_dependence(spec, g, trials, seed);

  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  double additivity = 0.0;
  for (int t = 0; t < trials; ++t) {
    const auto [a, b] = random_independent_pair(rng);
    additivity = std::max(additivity, std::abs(residual(join(a, b)) - residual(a) - residual(b)));
  }
  return {std::move(g), std::move(residual), dependence, trials, additivity};
}

}  // namespace partent
