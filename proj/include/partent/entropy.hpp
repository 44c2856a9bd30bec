#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <utility>
#include <variant>
#include <vector>

#include "partent/algebra.hpp"
#include "partent/error.hpp"
#include "partent/rational.hpp"
#include "partent/step_measure.hpp"

namespace partent {

// Entropy functionals on finite algebras. All logarithms are base 2.

struct Shannon {};
struct Hartley {};
struct MinInfo {};
struct MaxInfo {};
struct Variance {};

class Renyi {
 public:
  explicit Renyi(Rat alpha) : alpha_(std::move(alpha)) {
    if (alpha_ == Rat(1)) throw Error(ErrorCode::RenyiAlphaOne, "Renyi order 1 is not allowed; use Shannon");
  }
  const Rat& alpha() const { return alpha_; }

 private:
  Rat alpha_;
};

/// L_m(A) = sum_i m(A_i) log(1/P(A_i)).
struct Lm {
  SignedMeasure m;
};

class EntropySpec;

struct Term;

/// Rational-weighted sum of specs. Terms are shared immutably.
struct Combo {
  std::vector<std::shared_ptr<const Term>> terms;
};

class EntropySpec {
 public:
  using Kind = std::variant<Shannon, Renyi, Hartley, MinInfo, MaxInfo, Variance, Lm, Combo>;

  EntropySpec(Kind kind) : kind_(std::move(kind)) {}  // NOLINT(google-explicit-constructor)
  template <class K>
    requires std::is_constructible_v<Kind, K>
  EntropySpec(K kind) : kind_(std::move(kind)) {}  // NOLINT(google-explicit-constructor)

  const Kind& kind() const { return kind_; }

  /// True when the value depends on the atom measures alone.
  bool atom_measure_only() const;

 private:
  Kind kind_;
};

struct Term {
  Rat weight;
  EntropySpec spec;
};

inline EntropySpec combo(std::vector<std::pair<Rat, EntropySpec>> terms) {
  Combo c;
  for (auto& [w, s] : terms) c.terms.push_back(std::make_shared<const Term>(Term{std::move(w), std::move(s)}));
  return EntropySpec(std::move(c));
}

inline EntropySpec operator+(const EntropySpec& a, const EntropySpec& b) {
  return combo({{Rat(1), a}, {Rat(1), b}});
}

inline bool EntropySpec::atom_measure_only() const {
  if (const auto* lm = std::get_if<Lm>(&kind_)) {
    // L_m depends on atom measures alone exactly when m is a multiple of P.
    const auto& d = lm->m.densities();
    return std::all_of(d.begin(), d.end(), [&](const Rat& x) { return x == d.front(); });
  }
  if (const auto* c = std::get_if<Combo>(&kind_)) {
    // Conservative: mixtures of Lm terms may cancel, but are reported as not atom-only.
    return std::all_of(c->terms.begin(), c->terms.end(),
                       [](const auto& t) { return t->weight.is_zero() || t->spec.atom_measure_only(); });
  }
  return true;
}

inline double info(const Rat& p) { return -std::log2(p.to_double()); }

/// L(A): value log(1/P(A_i)) on atom A_i.
inline SimpleFunction information_function(const Algebra& a) {
  SimpleFunction f;
  for (const auto& atom : a.atoms()) f.pieces.push_back({atom, info(atom.measure())});
  return f;
}

inline double shannon(const std::vector<Rat>& probs) {
  double h = 0.0;
  for (const auto& p : probs) h += p.to_double() * info(p);
  return h;
}

inline double renyi_sum(const std::vector<Rat>& probs, double alpha) {
  double s = 0.0;
  for (const auto& p : probs) s += std::pow(p.to_double(), alpha);
  return s;
}

inline double eval_entropy(const EntropySpec& spec, const Algebra& a) {
  const auto probs = a.atom_measures();
  return std::visit(
      [&](const auto& k) -> double {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Shannon>) {
          return shannon(probs);
        } else if constexpr (std::is_same_v<K, Renyi>) {
          const Rat one_minus = Rat(1) - k.alpha();
          return std::log2(renyi_sum(probs, k.alpha().to_double())) / one_minus.to_double();
        } else if constexpr (std::is_same_v<K, Hartley>) {
          return std::log2(static_cast<double>(probs.size()));
        } else if constexpr (std::is_same_v<K, MinInfo>) {
          return info(*std::max_element(probs.begin(), probs.end()));
        } else if constexpr (std::is_same_v<K, MaxInfo>) {
          return info(*std::min_element(probs.begin(), probs.end()));
        } else if constexpr (std::is_same_v<K, Variance>) {
          const double h = shannon(probs);
          double v = 0.0;
          for (const auto& p : probs) {
            const double dev = info(p) - h;
            v += p.to_double() * dev * dev;
          }
          return v;
        } else if constexpr (std::is_same_v<K, Lm>) {
          double total = 0.0;
          for (const auto& atom : a.atoms()) total += k.m(atom).to_double() * info(atom.measure());
          return total;
        } else {
          double total = 0.0;
          for (const auto& t : k.terms) total += t->weight.to_double() * eval_entropy(t->spec, a);
          return total;
        }
      },
      spec.kind());
}

/// Cumulant generating function of L(A): log sum_i P(A_i)^(1-t).
inline double cgf(const Algebra& a, double t) { return std::log2(renyi_sum(a.atom_measures(), 1.0 - t)); }

/// |I(A.B) - I(A) - I(B)| for independent A, B.
inline double additivity_residual(const EntropySpec& spec, const Algebra& a, const Algebra& b) {
  if (!is_independent(a, b)) throw Error(ErrorCode::NotIndependent, "additivity needs independent algebras");
  return std::abs(eval_entropy(spec, join(a, b)) - eval_entropy(spec, a) - eval_entropy(spec, b));
}

}  // namespace partent
