#pragma once

// Seeded property suites over the whole library. Each property reports the
// largest deviation seen against its tolerance; exact properties count
// violations against a tolerance of zero.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "partent/algebra.hpp"
#include "partent/decomposition.hpp"
#include "partent/entropy.hpp"
#include "partent/error.hpp"
#include "partent/mset.hpp"
#include "partent/random.hpp"
#include "partent/step_measure.hpp"
#include "partent/transport.hpp"
#include "partent/verify/oracles.hpp"

namespace partent::verify {

struct PropertyCheck {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  long samples = 0;

  bool passed() const { return max_deviation <= tolerance; }
};

struct SuiteReport {
  std::string suite;
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<PropertyCheck> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const PropertyCheck& c) { return c.passed(); });
  }
};

class Tracker {
 public:
  void exact(const std::string& name, bool ok) { record(name, ok ? 0.0 : 1.0, 0.0, true); }
  void close(const std::string& name, double deviation, double tolerance) {
    record(name, std::isnan(deviation) ? INFINITY : deviation, tolerance, false);
  }
  std::vector<PropertyCheck> take() { return std::move(checks_); }

 private:
  void record(const std::string& name, double dev, double tol, bool count) {
    auto it = std::find_if(checks_.begin(), checks_.end(), [&](const PropertyCheck& c) { return c.name == name; });
    if (it == checks_.end()) {
      checks_.push_back({name, 0.0, tol, 0});
      it = std::prev(checks_.end());
    }
    it->max_deviation = count ? it->max_deviation + dev : std::max(it->max_deviation, dev);
    ++it->samples;
  }
  std::vector<PropertyCheck> checks_;
};

/// The built-in functionals exercised by the additivity properties.
inline std::vector<std::pair<std::string, EntropySpec>> builtin_specs() {
  const SignedMeasure half_mass({Rat(0), Rat(1, 2), Rat(1)}, {Rat(2), Rat(0)});
  return {{"shannon", Shannon{}},
          {"renyi(0)", Renyi(Rat(0))},
          {"renyi(1/2)", Renyi(Rat(1, 2))},
          {"renyi(2)", Renyi(Rat(2))},
          {"hartley", Hartley{}},
          {"min", MinInfo{}},
          {"max", MaxInfo{}},
          {"variance", Variance{}},
          {"lm", Lm{half_mass}}};
}

/// Coarsening of `a`: its atoms merged into `groups` nonempty unions.
inline Algebra random_coarsening(Rng& rng, const Algebra& a, int groups) {
  std::vector<int> label(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    label[i] = static_cast<int>(i) < groups ? static_cast<int>(i) : rng.uniform(0, groups - 1);
  rng.shuffle(label);
  std::vector<MSet> atoms(static_cast<std::size_t>(groups));
  for (std::size_t i = 0; i < a.size(); ++i)
    atoms[static_cast<std::size_t>(label[i])] = atoms[static_cast<std::size_t>(label[i])] | a[i];
  return Algebra::from_partition_unchecked(std::move(atoms));
}

/// Splits an equal-measure pair into `parts` equal-measure sub-pairs placed at random.
inline std::vector<SwapPair> random_split(Rng& rng, const SwapPair& p, int parts) {
  std::vector<SwapPair> out;
  MSet v = p.v, w = p.w;
  for (int i = 0; i + 1 < parts; ++i) {
    const Rat t = random_rat(rng, v.measure());
    SwapPair piece{random_subset(rng, v, t), random_subset(rng, w, t)};
    v = v - piece.v;
    w = w - piece.w;
    out.push_back(std::move(piece));
  }
  out.push_back({std::move(v), std::move(w)});
  return out;
}

inline const Rat& pick(Rng& rng, const std::vector<Rat>& xs) {
  return xs[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(xs.size()) - 1))];
}

inline std::vector<PropertyCheck> set_laws(int trials, std::uint64_t seed) {
  Rng rng(seed);
  Tracker t;
  for (int k = 0; k < trials; ++k) {
    const MSet a = random_mset(rng), b = random_mset(rng), c = random_mset(rng);
    t.exact("union commutative", (a | b) == (b | a));
    t.exact("intersection commutative", (a & b) == (b & a));
    t.exact("union associative", ((a | b) | c) == (a | (b | c)));
    t.exact("intersection associative", ((a & b) & c) == (a & (b & c)));
    t.exact("distributivity", (a & (b | c)) == ((a & b) | (a & c)) && (a | (b & c)) == ((a | b) & (a | c)));
    t.exact("de morgan",
            complement(a | b) == (complement(a) & complement(b)) && complement(a & b) == (complement(a) | complement(b)));
    t.exact("double complement", complement(complement(a)) == a);
    t.exact("symdiff self empty", (a ^ a).empty());
    t.exact("inclusion-exclusion", (a | b).measure() + (a & b).measure() == a.measure() + b.measure());
    t.exact("measure matches interval lengths", a.measure() == oracle::raw_length(a));

    const Rat theta = random_rat(rng, a.measure());
    const MSet s = darboux_split(a, theta);
    t.exact("darboux subset with exact measure", s.subset_of(a) && s.measure() == theta);
    t.exact("darboux full measure is identity", darboux_split(a, a.measure()) == a);

    std::vector<Interval> raw;
    for (const auto& iv : a.intervals()) {
      const Rat mid = iv.lo + (iv.hi - iv.lo) * Rat(rng.uniform(0, 4), 4);
      raw.push_back({iv.lo, mid});
      raw.push_back({mid, iv.hi});
    }
    rng.shuffle(raw);
    t.exact("normalize order-insensitive", MSet::normalize(raw) == a);
    t.exact("normalize idempotent", MSet::normalize(a.intervals()) == a);

    const SignedMeasure m = random_signed_measure(rng);
    const MSet b_only = b - a;
    t.exact("signed measure additive", m(a | b_only) == m(a) + m(b_only));
  }
  return t.take();
}

inline std::vector<PropertyCheck> algebra_laws(int trials, std::uint64_t seed) {
  Rng rng(seed);
  Tracker t;
  const Algebra trivial;
  for (int k = 0; k < trials; ++k) {
    const Algebra a = random_algebra(rng, 1, 6, 32), b = random_algebra(rng, 1, 6, 32),
                  c = random_algebra(rng, 1, 4, 32);
    t.exact("join commutative", join(a, b) == join(b, a));
    t.exact("join associative", join(join(a, b), c) == join(a, join(b, c)));
    t.exact("join idempotent", join(a, a) == a);
    t.exact("trivial algebra is join identity", join(a, trivial) == a);

    const AtomProfile profile = random_profile(rng, rng.uniform(1, 6));
    const auto blocks = independent_blocks(a, profile);
    bool measures_ok = true;
    for (std::size_t j = 0; j < blocks.size(); ++j) measures_ok = measures_ok && blocks[j].measure() == profile.weights()[j];
    t.exact("independent_with_profile independent with requested measures",
            measures_ok && is_independent(a, independent_with_profile(a, profile)));

    // K is a coarsening of A; B is independent of A, of K only, or arbitrary.
    const Algebra kk = random_coarsening(rng, a, rng.uniform(1, static_cast<int>(a.size())));
    const int mode = rng.uniform(0, 2);
    const Algebra bb = mode == 0   ? independent_with_profile(a, random_profile(rng, rng.uniform(1, 4)))
                       : mode == 1 ? independent_with_profile(kk, random_profile(rng, rng.uniform(1, 4)))
                                   : b;
    t.exact("separation equivalence",
            is_independent(a, bb) == (is_independent(bb, kk) && conditional_independent(a, bb, kk)));
    t.exact("conditional on trivial algebra is independence",
            conditional_independent(a, bb, trivial) == is_independent(a, bb));

    // Transport on a random member of a random family.
    const std::vector<Rat> lambdas{Rat(1, 2), Rat(1), Rat(2), Rat(3), Rat(2, 3)};
    const Rat lambda = pick(rng, lambdas), kappa = pick(rng, lambdas);
    const Rat bound = epsilon(kappa) * epsilon(lambda) / Rat(2);
    Rat mu = random_rat(rng, bound);
    if (mu.is_zero()) mu = bound;
    const auto [v, w] = random_disjoint_pair(rng, mu);
    const SwapPair p{v, w};
    const Algebra fam = random_family_algebra(rng, v, w, lambda, Rat(1, 2));
    const Algebra moved = transport(fam, p);
    t.exact("transport involutive", transport(moved, p) == fam);
    t.exact("transport preserves atom measures", same_atom_measures(moved, fam));
    const auto back = in_family(moved, p.reversed());
    t.exact("reversed pair sees the same ratio", back && *back == lambda && *in_family(fam, p) == lambda);

    const Algebra indep = make_independent_family_algebra(fam, p, kappa);
    t.exact("independent family algebra", is_independent(fam, indep) && in_family(indep, p) == kappa);
    t.exact("transport commutes with products",
            transport(join(fam, indep), p) == join(transport(fam, p), transport(indep, p)));

    const auto parts = random_split(rng, p, rng.uniform(1, 4));
    Algebra stepwise = fam;
    for (const auto& q : parts) stepwise = transport(stepwise, q);
    t.exact("piecewise transport equals single transport", stepwise == moved);
  }
  return t.take();
}

inline std::vector<PropertyCheck> additivity(int trials, std::uint64_t seed) {
  Rng rng(seed);
  Tracker t;
  const auto specs = builtin_specs();
  for (int k = 0; k < trials; ++k) {
    const auto [a, b] = random_independent_pair(rng);
    for (const auto& [name, spec] : specs) t.close("additivity " + name, additivity_residual(spec, a, b), 1e-9);

    const auto [x, y] = random_same_measure_pair(rng);
    for (const auto& [name, spec] : specs)
      if (name != "lm") t.close("atom-measure invariance " + name, std::abs(eval_entropy(spec, x) - eval_entropy(spec, y)), 1e-12);

    const double h = eval_entropy(Shannon{}, a);
    t.close("renyi -> shannon near order 1",
            std::max(std::abs(eval_entropy(Renyi(Rat(1) + Rat(1, 1000000)), a) - h),
                     std::abs(eval_entropy(Renyi(Rat(1) - Rat(1, 1000000)), a) - h)),
            1e-4);
    t.exact("hartley equals renyi(0)", eval_entropy(Hartley{}, a) == eval_entropy(Renyi(Rat(0)), a));
    t.exact("min <= shannon <= max",
            eval_entropy(MinInfo{}, a) <= h + 1e-12 && h <= eval_entropy(MaxInfo{}, a) + 1e-12);

    // Two measures that differ on A, P(A) != 1/2, give different L_m on <A, A^c>.
    const SignedMeasure m1 = random_signed_measure(rng), m2 = random_signed_measure(rng);
    const MSet s = random_mset(rng);
    if (!s.empty() && s.measure() != Rat(1) && s.measure() != Rat(1, 2) && m1(s) != m2(s)) {
      const Algebra split = Algebra::from_atoms({s, complement(s)});
      t.exact("L_m injective", eval_entropy(Lm{m1}, split) != eval_entropy(Lm{m2}, split));
    }
  }
  return t.take();
}

inline std::vector<PropertyCheck> delta_laws(int trials, std::uint64_t seed) {
  Rng rng(seed);
  Tracker t;
  const std::vector<Rat> lambdas{Rat(1, 2), Rat(2), Rat(3)};
  for (int k = 0; k < trials; ++k) {
    const SignedMeasure m = random_signed_measure(rng);
    const EntropySpec spec = combo({{Rat(1), Shannon{}}, {Rat(1), Lm{m}}, {Rat(1, 2), Variance{}}});
    const Rat lambda = pick(rng, lambdas), kappa = pick(rng, lambdas);
    const Rat mu = random_rat(rng, Rat(1, 2));
    const MSet u = random_subset(rng, MSet::whole(), mu), v = random_subset(rng, MSet::whole(), mu),
               w = random_subset(rng, MSet::whole(), mu);
    auto d = [&](const MSet& x, const MSet& y, const Rat& l) { return delta_lambda(spec, {x, y}, l).value; };

    t.close("cocycle", std::abs(d(u, w, lambda) - d(u, v, lambda) - d(v, w, lambda)), 1e-8);
    const auto parts = random_split(rng, {v, w}, 2);
    t.close("split additivity",
            std::abs(d(v, w, lambda) - d(parts[0].v, parts[0].w, lambda) - d(parts[1].v, parts[1].w, lambda)), 1e-8);
    t.close("log law", std::abs(d(v, w, kappa * lambda) - d(v, w, kappa) - d(v, w, lambda)), 1e-8);
    t.close("antisymmetry", std::abs(d(v, w, lambda) + d(w, v, lambda)), 1e-9);
    t.close("L_m oracle", std::abs(delta_lambda(Lm{m}, {v, w}, lambda).value - oracle::lm_delta(m, v, w, lambda)), 1e-9);
    t.close("shannon delta vanishes", std::abs(delta_lambda(Shannon{}, {v, w}, lambda).value), 1e-10);
    t.close("proportionality", delta(spec, {v, w}).crosscheck_residual, 1e-8);
  }
  return t.take();
}

inline std::vector<PropertyCheck> delta_welldef(int trials, std::uint64_t seed) {
  Rng rng(seed);
  Tracker t;
  auto specs = builtin_specs();
  const std::vector<Rat> lambdas{Rat(1, 3), Rat(1, 2), Rat(1), Rat(2), Rat(3)};
  for (int k = 0; k < trials; ++k) {
    const SignedMeasure m = random_signed_measure(rng);
    specs.emplace_back("shannon+lm", EntropySpec(Shannon{}) + EntropySpec(Lm{m}));
    const Rat lambda = pick(rng, lambdas);
    const auto [v, w] = random_disjoint_pair(rng, random_open_rat(rng, epsilon(lambda)));
    const SwapPair p{v, w};
    const Algebra a = make_family_algebra(p, lambda);
    const Algebra b = random_family_algebra(rng, v, w, lambda);
    for (const auto& [name, spec] : specs) {
      const double da = eval_entropy(spec, transport(a, p)) - eval_entropy(spec, a);
      const double db = eval_entropy(spec, transport(b, p)) - eval_entropy(spec, b);
      t.close("same increment across family " + name, std::abs(da - db), 1e-9);
    }
    specs.pop_back();
  }
  return t.take();
}

inline std::vector<PropertyCheck> extraction(int trials, std::uint64_t seed) {
  Rng rng(seed);
  Tracker t;
  const int rounds = std::max(1, trials / 20);
  for (int k = 0; k < rounds; ++k) {
    std::vector<Rat> dens;
    for (int i = 0; i < 4; ++i) dens.emplace_back(rng.uniform(-16, 16), 8);
    const SignedMeasure m = SignedMeasure::on_grid(dens);
    const EntropySpec spec = EntropySpec(Shannon{}) + EntropySpec(Lm{m});
    const GridMeasure g8 = extract_measure(spec, 8);
    const auto expect = oracle::lm_grid(m, 8);
    double worst = 0.0;
    for (int j = 0; j < 8; ++j) worst = std::max(worst, std::abs(g8.cells[static_cast<std::size_t>(j)] - expect[static_cast<std::size_t>(j)]));
    t.close("L_m cells match exact oracle", worst, 1e-8);
    t.close("recovered total vanishes", std::abs(g8.total()), 1e-8);

    const GridMeasure g16 = extract_measure(spec, 16);
    double refine = 0.0;
    for (int j = 0; j < 8; ++j)
      refine = std::max(refine, std::abs(g16.cells[static_cast<std::size_t>(2 * j)] +
                                         g16.cells[static_cast<std::size_t>(2 * j + 1)] -
                                         g8.cells[static_cast<std::size_t>(j)]));
    t.close("grid refinement consistency", refine, 1e-8);

    const EntropySpec other = Lm{random_signed_measure(rng, 8)};
    const GridMeasure go = extract_measure(other, 8);
    const GridMeasure glin = extract_measure(combo({{Rat(2), spec}, {Rat(-1, 3), other}}), 8);
    double lin = 0.0;
    for (std::size_t j = 0; j < 8; ++j) lin = std::max(lin, std::abs(glin.cells[j] - 2 * g8.cells[j] + go.cells[j] / 3));
    t.close("extraction linear in the spec", lin, 1e-8);
  }
  for (const EntropySpec& s : {EntropySpec(Renyi(Rat(2))), EntropySpec(Variance{}), EntropySpec(Hartley{}),
                               EntropySpec(MinInfo{}), EntropySpec(MaxInfo{}), EntropySpec(Shannon{})}) {
    const GridMeasure g = extract_measure(s, 8);
    double worst = 0.0;
    for (double c : g.cells) worst = std::max(worst, std::abs(c));
    t.close("atom-measure-only specs extract to zero", worst, 1e-8);
  }
  return t.take();
}

inline std::vector<PropertyCheck> decomposition(int trials, std::uint64_t seed) {
  Tracker t;
  const SignedMeasure m = SignedMeasure::on_grid({Rat(2), Rat(0), Rat(1), Rat(1)});
  const EntropySpec spec = EntropySpec(Shannon{}) + EntropySpec(Lm{m});
  const DecompositionReport r = decompose(spec, 16, trials, seed);
  const auto expect = oracle::lm_grid(m, 16);
  double worst = 0.0;
  for (std::size_t j = 0; j < expect.size(); ++j) worst = std::max(worst, std::abs(r.grid.cells[j] - expect[j]));
  t.close("recovered grid matches m - m(Omega) P", worst, 1e-8);
  t.close("residual depends on atom measures only", r.atom_dependence_deviation, 1e-8);
  t.close("residual is additive", r.additivity_deviation, 1e-8);
  t.close("residual on two-cell equipartition is 2", std::abs(r.residual(Algebra::equipartition(2)) - 2.0), 1e-8);

  const DecompositionReport shannon = decompose(Shannon{}, 8, std::max(1, trials / 4), seed + 1);
  double shannon_worst = std::max(shannon.atom_dependence_deviation, shannon.additivity_deviation);
  for (double c : shannon.grid.cells) shannon_worst = std::max(shannon_worst, std::abs(c));
  t.close("shannon decomposes with zero measure", shannon_worst, 1e-9);
  return t.take();
}

inline std::vector<PropertyCheck> metrics(int trials, std::uint64_t seed) {
  Rng rng(seed);
  Tracker t;
  for (int k = 0; k < trials; ++k) {
    const Algebra a = random_algebra(rng, 1, 6, 32), b = random_algebra(rng, 1, 6, 32),
                  c = random_algebra(rng, 1, 6, 32);
    const Rat ab = distance_d(a, b), bc = distance_d(b, c), ac = distance_d(a, c);
    t.exact("bitmask DP equals brute force", ab == oracle::distance_d_brute_force(a, b));
    t.exact("d(a,a) = 0", distance_d(a, a).is_zero());
    t.exact("d symmetric", ab == distance_d(b, a));
    t.exact("d triangle inequality", ac <= ab + bc);
    t.exact("d = 0 implies same atom measures", !ab.is_zero() || same_atom_measures(a, b));
    const long na = static_cast<long>(a.size()), nb = static_cast<long>(b.size());
    t.exact("D = d + atom count gap", distance_D(a, b) == ab + Rat(na > nb ? na - nb : nb - na));
    t.exact("D triangle inequality", distance_D(a, c) <= distance_D(a, b) + distance_D(b, c));
  }
  return t.take();
}

inline const std::vector<std::string_view>& suite_names() {
  static const std::vector<std::string_view> names{"set-laws",      "algebra-laws", "additivity",    "delta-laws",
                                                   "delta-welldef", "extraction",   "decomposition", "metrics"};
  return names;
}

inline SuiteReport run_suite(std::string_view name, int trials, std::uint64_t seed) {
  if (trials < 1) throw Error(ErrorCode::InvalidTrials, "trials must be >= 1");
  SuiteReport r{std::string(name), trials, seed, {}};
  if (name == "set-laws") r.checks = set_laws(trials, seed);
  else if (name == "algebra-laws") r.checks = algebra_laws(trials, seed);
  else if (name == "additivity") r.checks = additivity(trials, seed);
  else if (name == "delta-laws") r.checks = delta_laws(trials, seed);
  else if (name == "delta-welldef") r.checks = delta_welldef(trials, seed);
  else if (name == "extraction") r.checks = extraction(trials, seed);
  else if (name == "decomposition") r.checks = decomposition(trials, seed);
  else if (name == "metrics") r.checks = metrics(trials, seed);
  else throw Error(ErrorCode::UnknownSuite, "unknown suite '" + std::string(name) + "'");
  return r;
}

}  // namespace partent::verify
