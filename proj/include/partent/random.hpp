#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

#include "partent/algebra.hpp"
#include "partent/mset.hpp"
#include "partent/rational.hpp"
#include "partent/step_measure.hpp"

namespace partent {

/// Seeded generator with platform-independent draws. std::mt19937_64's output
/// sequence is fixed by the standard; the distributions below avoid the
/// implementation-defined std:: distributions.
class Rng {
 public:
  static constexpr std::string_view kName = "mt19937_64/v1";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi].
  int uniform(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do x = engine_(); while (x >= limit);
    return lo + static_cast<int>(x % span);
  }

  bool coin() { return (engine_() >> 63) != 0; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i)
      std::swap(v[i - 1], v[static_cast<std::size_t>(uniform(0, static_cast<int>(i) - 1))]);
  }

  /// `count` distinct values from [lo, hi], ascending.
  std::vector<int> distinct_sorted(int count, int lo, int hi) {
    std::vector<int> all(static_cast<std::size_t>(hi - lo + 1));
    std::iota(all.begin(), all.end(), lo);
    shuffle(all);
    all.resize(static_cast<std::size_t>(count));
    std::sort(all.begin(), all.end());
    return all;
  }

 private:
  std::mt19937_64 engine_;
};

inline constexpr int kMaxDenominator = 64;

/// Profile with `atoms` weights, all with a common denominator <= max_den.
inline AtomProfile random_profile(Rng& rng, int atoms, int max_den = kMaxDenominator) {
  const int den = rng.uniform(atoms, std::max(atoms, max_den));
  std::vector<int> cuts = atoms > 1 ? rng.distinct_sorted(atoms - 1, 1, den - 1) : std::vector<int>{};
  cuts.insert(cuts.begin(), 0);
  cuts.push_back(den);
  std::vector<Rat> w;
  for (std::size_t i = 1; i < cuts.size(); ++i) w.emplace_back(cuts[i] - cuts[i - 1], den);
  return AtomProfile(std::move(w));
}

/// Random partition of [0,1) into `atoms` atoms, each a union of grid segments
/// with denominator <= max_den. Atoms are generally not intervals.
inline Algebra random_algebra(Rng& rng, int atoms, int max_den = kMaxDenominator) {
  const int q = rng.uniform(std::max(atoms, 2), std::max({atoms, 2, max_den}));
  const int segments = rng.uniform(atoms, std::min(q, 3 * atoms));
  std::vector<int> cuts = segments > 1 ? rng.distinct_sorted(segments - 1, 1, q - 1) : std::vector<int>{};
  cuts.insert(cuts.begin(), 0);
  cuts.push_back(q);
  std::vector<int> label(static_cast<std::size_t>(segments));
  for (int s = 0; s < segments; ++s) label[static_cast<std::size_t>(s)] = s < atoms ? s : rng.uniform(0, atoms - 1);
  rng.shuffle(label);
  std::vector<std::vector<Interval>> parts(static_cast<std::size_t>(atoms));
  for (int s = 0; s < segments; ++s)
    parts[static_cast<std::size_t>(label[static_cast<std::size_t>(s)])].push_back(
        {Rat(cuts[static_cast<std::size_t>(s)], q), Rat(cuts[static_cast<std::size_t>(s) + 1], q)});
  std::vector<MSet> out;
  for (auto& p : parts) out.push_back(MSet::normalize(std::move(p)));
  return Algebra::from_partition_unchecked(std::move(out));
}

inline Algebra random_algebra(Rng& rng, int min_atoms, int max_atoms, int max_den) {
  return random_algebra(rng, rng.uniform(min_atoms, max_atoms), max_den);
}

/// Union of randomly chosen grid cells; may be empty or the whole space.
inline MSet random_mset(Rng& rng, int max_den = kMaxDenominator) {
  const int q = rng.uniform(1, max_den);
  std::vector<Interval> cells;
  for (int i = 0; i < q; ++i)
    if (rng.coin()) cells.push_back({Rat(i, q), Rat(i + 1, q)});
  return MSet::normalize(std::move(cells));
}

/// Random subset of `r` with measure exactly theta: `r` is cut along a random
/// partition, the traces are shuffled and consumed until theta is reached.
inline MSet random_subset(Rng& rng, const MSet& r, const Rat& theta, int max_den = kMaxDenominator) {
  const Algebra cutter = random_algebra(rng, rng.uniform(2, 6), max_den);
  std::vector<MSet> traces;
  for (const auto& atom : cutter.atoms()) {
    MSet t = atom & r;
    if (!t.empty()) traces.push_back(std::move(t));
  }
  rng.shuffle(traces);
  MSet out;
  Rat left = theta;
  for (const auto& t : traces) {
    if (left.is_zero()) break;
    const MSet take = t.measure() <= left ? t : darboux_split(t, left);
    left -= take.measure();
    out = out | take;
  }
  if (!left.is_zero()) throw Error(ErrorCode::DarbouxRange, "random_subset: theta exceeds the measure of r");
  return out;
}

/// Random rational in [0, hi] with denominator <= max_den.
inline Rat random_rat(Rng& rng, const Rat& hi, int max_den = kMaxDenominator) {
  const int q = rng.uniform(1, max_den);
  const Rat r(rng.uniform(0, q), q);
  return r * hi;
}

/// Random rational strictly between 0 and hi (hi > 0).
inline Rat random_open_rat(Rng& rng, const Rat& hi, int max_den = kMaxDenominator) {
  const int q = rng.uniform(2, max_den);
  return Rat(rng.uniform(1, q - 1), q) * hi;
}

/// Independent pair with up to `max_atoms` atoms each. The second factor is
/// built against a refinement of the first, so its placement varies.
inline std::pair<Algebra, Algebra> random_independent_pair(Rng& rng, int max_atoms = 8,
                                                          int max_den = kMaxDenominator) {
  Algebra a = random_algebra(rng, 1, max_atoms, max_den);
  const Algebra scramble = random_algebra(rng, 1, 4, max_den);
  Algebra b = independent_with_profile(join(a, scramble), random_profile(rng, rng.uniform(1, max_atoms), max_den));
  if (rng.coin()) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

/// Two algebras with the same atom-measure multiset placed differently.
inline std::pair<Algebra, Algebra> random_same_measure_pair(Rng& rng, int max_atoms = 8,
                                                           int max_den = kMaxDenominator) {
  const AtomProfile profile = random_profile(rng, rng.uniform(2, max_atoms), max_den);
  const Algebra base1 = random_algebra(rng, 1, 6, max_den);
  const Algebra base2 = random_algebra(rng, 1, 6, max_den);
  return {independent_with_profile(base1, profile), independent_with_profile(base2, profile)};
}

/// Signed step measure on a grid of at most `max_cells` cells with densities in [-2, 2].
inline SignedMeasure random_signed_measure(Rng& rng, int max_cells = 16) {
  const int cells = rng.uniform(1, max_cells);
  std::vector<Rat> dens;
  for (int i = 0; i < cells; ++i) dens.emplace_back(rng.uniform(-16, 16), 8);
  return SignedMeasure::on_grid(std::move(dens));
}

/// Algebra with atoms A_1 > v, A_2 > w, P(A_2)/P(A_1) = lambda and
/// P(A_1 + A_2) >= total_floor; any leftover mass forms a third atom. The
/// fillers are random subsets of the complement of v | w.
inline Algebra random_family_algebra(Rng& rng, const MSet& v, const MSet& w, const Rat& lambda,
                                     const Rat& total_floor = Rat(0)) {
  const Rat one(1);
  const Rat s_min = max(max(v.measure() * (one + lambda), w.measure() * (one + lambda) / lambda), total_floor);
  if (s_min > one) throw Error(ErrorCode::SizeBound, "swap sets too large for a family algebra");
  Rat s = s_min + random_rat(rng, one - s_min);
  if (s.is_zero()) s = one;
  const Rat first = s / (one + lambda);
  const Rat second = s - first;
  const MSet free = complement(v | w);
  const MSet f1 = random_subset(rng, free, first - v.measure());
  const MSet f2 = random_subset(rng, free - f1, second - w.measure());
  const MSet a1 = v | f1;
  const MSet a2 = w | f2;
  std::vector<MSet> atoms{a1, a2};
  MSet rest = complement(a1 | a2);
  if (!rest.empty()) atoms.push_back(std::move(rest));
  return Algebra::from_partition_unchecked(std::move(atoms));
}

/// Disjoint pair of equal measure `mu`, placed at random.
inline std::pair<MSet, MSet> random_disjoint_pair(Rng& rng, const Rat& mu) {
  MSet v = random_subset(rng, MSet::whole(), mu);
  MSet w = random_subset(rng, complement(v), mu);
  return {std::move(v), std::move(w)};
}

}  // namespace partent
