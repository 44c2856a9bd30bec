// Acceptance criteria 1-11: one PASS/FAIL line each, with deviation and runtime
// against its limit. Exit status is nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "partent/partent.hpp"
#include "partent/verify/oracles.hpp"
#include "partent/verify/suites.hpp"

using namespace partent;

namespace {

struct Outcome {
  bool ok = true;
  double deviation = 0.0;
  std::string note;
};

struct Criterion {
  int id;
  const char* title;
  double limit_s;
  std::function<Outcome()> body;
};

Outcome within(double deviation, double tol, std::string note = {}) {
  return {deviation <= tol, deviation, std::move(note)};
}

void widen(double& worst, double d) {
  if (!(d <= worst)) worst = d;  // NaN sticks
}

SignedMeasure quarters() { return SignedMeasure::on_grid({Rat(2), Rat(0), Rat(1), Rat(1)}); }

EntropySpec shannon_plus(const SignedMeasure& m) { return EntropySpec(Shannon{}) + EntropySpec(Lm{m}); }

Outcome shannon_normalization() {
  return within(std::abs(eval_entropy(Shannon{}, Algebra::equipartition(2)) - 1.0), 1e-12);
}

Outcome additivity_suite() {
  Rng rng(2001);
  const auto specs = verify::builtin_specs();
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const auto [a, b] = random_independent_pair(rng, 8);
    if (a.size() > 8 || b.size() > 8 || !is_independent(a, b)) return {false, 0.0, "generator broke its contract"};
    for (const auto& [name, spec] : specs) widen(worst, additivity_residual(spec, a, b));
  }
  return within(worst, 1e-9, std::to_string(specs.size()) + " specs x 200 pairs");
}

Outcome delta_well_defined() {
  Rng rng(2003);
  const std::vector<Rat> lambdas{Rat(1, 3), Rat(1, 2), Rat(1), Rat(2), Rat(3), Rat(5, 2)};
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const EntropySpec spec = shannon_plus(random_signed_measure(rng));
    const Rat& lambda = lambdas[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(lambdas.size()) - 1))];
    const auto [v, w] = random_disjoint_pair(rng, random_open_rat(rng, epsilon(lambda)));
    const SwapPair p{v, w};
    const Algebra a = make_family_algebra(p, lambda);
    Algebra b = random_family_algebra(rng, v, w, lambda);
    for (int retry = 0; b == a && retry < 8; ++retry) b = random_family_algebra(rng, v, w, lambda);
    if (b == a || in_family(a, p) != lambda || in_family(b, p) != lambda)
      return {false, 0.0, "could not build two distinct family algebras"};
    const double da = eval_entropy(spec, transport(a, p)) - eval_entropy(spec, a);
    const double db = eval_entropy(spec, transport(b, p)) - eval_entropy(spec, b);
    widen(worst, std::abs(da - db));
  }
  return within(worst, 1e-9, "50 trials, Shannon + L_m");
}

Outcome delta_laws() {
  const std::vector<std::string> wanted{"cocycle", "split additivity", "log law", "antisymmetry"};
  double worst = 0.0;
  std::size_t seen = 0;
  for (const auto& c : verify::delta_laws(50, 2004)) {
    if (std::find(wanted.begin(), wanted.end(), c.name) == wanted.end()) continue;
    ++seen;
    if (c.samples != 50) return {false, 0.0, c.name + ": wrong sample count"};
    widen(worst, c.max_deviation);
  }
  if (seen != wanted.size()) return {false, 0.0, "missing law"};
  return within(worst, 1e-8, "cocycle, split, log, antisymmetry over 50 trials");
}

Outcome proportionality() {
  Rng rng(2005);
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const EntropySpec spec = shannon_plus(random_signed_measure(rng));
    const Rat mu = random_rat(rng, Rat(1, 2));
    const MSet v = random_subset(rng, MSet::whole(), mu), w = random_subset(rng, MSet::whole(), mu);
    const double d2 = delta_lambda(spec, {v, w}, Rat(2)).value;
    const double d4 = delta_lambda(spec, {v, w}, Rat(4)).value;
    widen(worst, std::abs(d4 - 2 * d2));
  }
  return within(worst, 1e-8, "50 trials");
}

Outcome extraction_oracle() {
  const SignedMeasure m = quarters();
  const GridMeasure g = extract_measure(shannon_plus(m), 16);
  if (g.cells.size() != 16) return {false, 0.0, "wrong grid size"};
  double worst = 0.0;
  for (int j = 0; j < 16; ++j) {
    const Rat exact = measure_eval(m, MSet::interval(Rat(j, 16), Rat(j + 1, 16))) - Rat(1, 16);
    widen(worst, std::abs(g.cells[static_cast<std::size_t>(j)] - exact.to_double()));
  }
  return within(worst, 1e-8, "n = 16");
}

Outcome atom_only_zero() {
  double worst = 0.0;
  for (const EntropySpec& s :
       {EntropySpec(Renyi(Rat(2))), EntropySpec(Variance{}), EntropySpec(Hartley{}), EntropySpec(MinInfo{})})
    for (double c : extract_measure(s, 8).cells) widen(worst, std::abs(c));
  return within(worst, 1e-8, "Renyi(2), Variance, Hartley, MinInfo at n = 8");
}

Outcome decomposition() {
  const DecompositionReport r = decompose(shannon_plus(quarters()), 16, 100, 2008);
  double worst = std::max(r.atom_dependence_deviation, r.additivity_deviation);
  widen(worst, std::abs(r.residual(Algebra::equipartition(2)) - 2.0));
  return within(worst, 1e-8, "100 pairs; residual on halves = " + std::to_string(r.residual(Algebra::equipartition(2))));
}

Outcome refinement() {
  const EntropySpec spec = shannon_plus(quarters());
  const GridMeasure coarse = extract_measure(spec, 16), fine = extract_measure(spec, 32);
  double worst = 0.0;
  for (std::size_t j = 0; j < 16; ++j) widen(worst, std::abs(fine.cells[2 * j] + fine.cells[2 * j + 1] - coarse.cells[j]));
  return within(worst, 1e-8, "n = 32 paired vs n = 16");
}

Outcome metric_d() {
  Rng rng(2010);
  int violations = 0;
  for (int k = 0; k < 100; ++k) {
    const Algebra a = random_algebra(rng, 1, 6, 32), b = random_algebra(rng, 1, 6, 32);
    if (distance_d(a, b) != oracle::distance_d_brute_force(a, b)) ++violations;
  }
  for (int k = 0; k < 100; ++k) {
    const Algebra a = random_algebra(rng, 1, 6, 32), b = random_algebra(rng, 1, 6, 32), c = random_algebra(rng, 1, 6, 32);
    const Rat ab = distance_d(a, b), bc = distance_d(b, c), ac = distance_d(a, c);
    if (!distance_d(a, a).is_zero() || ab != distance_d(b, a) || ac > ab + bc || ab.sign() < 0) ++violations;
    if (ab.is_zero() && !same_atom_measures(a, b)) ++violations;
  }
  return {violations == 0, static_cast<double>(violations), "violations over 100 pairs + 100 triples"};
}

Outcome exact_layer() {
  int failing = 0;
  std::string names;
  for (const char* suite : {"set-laws", "algebra-laws"})
    for (const auto& c : verify::run_suite(suite, 200, 2011).checks)
      if (c.max_deviation != 0.0 || c.samples == 0) {
        ++failing;
        names += " " + c.name;
      }
  return {failing == 0, static_cast<double>(failing), failing ? "failing:" + names : "set-laws + algebra-laws, 200 trials"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Shannon normalization", 0.1, shannon_normalization},
      {2, "additivity of built-in entropies", 5, additivity_suite},
      {3, "Delta well-definedness across the family", 2, delta_well_defined},
      {4, "Delta laws", 5, delta_laws},
      {5, "proportionality Delta(4) = 2 Delta(2)", 2, proportionality},
      {6, "extraction matches exact oracle", 10, extraction_oracle},
      {7, "atom-measure-only specs extract to zero", 10, atom_only_zero},
      {8, "decomposition into L_m plus residual", 15, decomposition},
      {9, "grid refinement consistency", 30, refinement},
      {10, "metric d: DP vs brute force, pseudometric axioms", 2, metric_d},
      {11, "exact-layer suites", 5, exact_layer},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, 0.0, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = o.ok && secs < c.limit_s;
    if (!ok) ++failed;
    std::printf("criterion %2d: %s  %-48s deviation=%.3g  time=%.3fs/%.1fs  %s%s\n", c.id, ok ? "PASS" : "FAIL",
                c.title, o.deviation, secs, c.limit_s, o.note.c_str(), o.ok && !ok ? " (too slow)" : "");
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
