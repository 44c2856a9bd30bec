#pragma once

#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "partent/algebra.hpp"
#include "partent/entropy.hpp"
#include "partent/error.hpp"
#include "partent/mset.hpp"
#include "partent/rational.hpp"

namespace partent {

/// Two sets to be exchanged between atoms.
struct SwapPair {
  MSet v;
  MSet w;

  SwapPair reversed() const { return {w, v}; }
};

struct DeltaResult {
  double value = 0.0;
  Rat lambda_used{1};
  int pieces = 1;
  double crosscheck_residual = 0.0;
};

inline void require_positive(const Rat& lambda) {
  if (lambda.sign() <= 0) throw Error(ErrorCode::NonPositiveLambda, "lambda must be positive, got " + lambda.str());
}

inline void require_equal_measures(const SwapPair& p) {
  if (p.v.measure() != p.w.measure())
    throw Error(ErrorCode::UnequalMeasures,
                "swap sets have measures " + p.v.measure().str() + " and " + p.w.measure().str());
}

inline void require_disjoint(const SwapPair& p) {
  if (!p.v.disjoint_from(p.w)) throw Error(ErrorCode::OverlappingPair, "swap sets overlap");
}

/// Measure of the smaller block of a two-block partition with ratio lambda.
inline Rat epsilon(const Rat& lambda) {
  require_positive(lambda);
  const Rat one(1);
  return min(one / (one + lambda), lambda / (one + lambda));
}

/// Atom positions (holding v, holding w) when the pair sits in two distinct atoms.
/// An empty member sits in any atom not used by the other one.
inline std::optional<std::pair<int, int>> family_atoms(const Algebra& a, const SwapPair& p) {
  require_disjoint(p);
  const int n = static_cast<int>(a.size());
  int iv = a.atom_containing(p.v);
  int iw = a.atom_containing(p.w);
  if ((!p.v.empty() && iv < 0) || (!p.w.empty() && iw < 0)) return std::nullopt;
  if (n < 2) return std::nullopt;
  if (p.v.empty()) iv = iw == 0 ? 1 : 0;
  if (p.w.empty()) iw = iv == 0 ? 1 : 0;
  if (iv == iw) return std::nullopt;
  return std::pair{iv, iw};
}

/// P(atom holding w) / P(atom holding v), if the algebra belongs to the family of the pair.
inline std::optional<Rat> in_family(const Algebra& a, const SwapPair& p) {
  const auto idx = family_atoms(a, p);
  if (!idx) return std::nullopt;
  return a[static_cast<std::size_t>(idx->second)].measure() / a[static_cast<std::size_t>(idx->first)].measure();
}

/// Exchanges v and w between their atoms; all atom measures are preserved.
inline Algebra transport(const Algebra& a, const SwapPair& p) {
  require_equal_measures(p);
  if (p.v.empty() && p.w.empty()) return a;
  const auto idx = family_atoms(a, p);
  if (!idx) throw Error(ErrorCode::NotInFamily, "swap sets are not contained in two distinct atoms");
  std::vector<MSet> atoms = a.atoms();
  auto& av = atoms[static_cast<std::size_t>(idx->first)];
  auto& aw = atoms[static_cast<std::size_t>(idx->second)];
  MSet new_v = (av - p.v) | p.w;
  MSet new_w = (aw - p.w) | p.v;
  av = std::move(new_v);
  aw = std::move(new_w);
  return Algebra::from_partition_unchecked(std::move(atoms));
}

/// Two-atom algebra A_1 > v, A_2 > w with P(A_2)/P(A_1) = lambda. The filler
/// of A_1 is the leftmost part of the complement of v | w.
inline Algebra make_family_algebra(const SwapPair& p, const Rat& lambda) {
  require_disjoint(p);
  const Rat eps = epsilon(lambda);
  if (p.v.measure() > eps || p.w.measure() > eps)
    throw Error(ErrorCode::SizeBound, "swap sets exceed epsilon(" + lambda.str() + ") = " + eps.str());
  const Rat first = Rat(1) / (Rat(1) + lambda);
  const MSet free = complement(p.v | p.w);
  const MSet a1 = p.v | darboux_split(free, first - p.v.measure());
  return Algebra::from_partition_unchecked({a1, complement(a1)});
}

/// Two-atom B independent of `a` with B_1 > v, B_2 > w and P(B_2)/P(B_1) = kappa.
/// Every atom of `a` is cut in ratio kappa; the atoms holding v and w keep
/// them on the matching side.
inline Algebra make_independent_family_algebra(const Algebra& a, const SwapPair& p, const Rat& kappa) {
  require_positive(kappa);
  const auto idx = family_atoms(a, p);
  if (!idx) throw Error(ErrorCode::NotInFamily, "algebra is not in the family of the swap pair");
  const MSet& av = a[static_cast<std::size_t>(idx->first)];
  const MSet& aw = a[static_cast<std::size_t>(idx->second)];
  const Rat lambda = aw.measure() / av.measure();
  const Rat bound = epsilon(kappa) * epsilon(lambda) * (av.measure() + aw.measure());
  if (p.v.measure() > bound || p.w.measure() > bound)
    throw Error(ErrorCode::SizeBound, "swap sets exceed the bound " + bound.str());

  const Rat first_share = Rat(1) / (Rat(1) + kappa);
  MSet b1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const MSet& atom = a[i];
    const Rat target = atom.measure() * first_share;
    if (static_cast<int>(i) == idx->first) {
      b1 = b1 | p.v | darboux_split(atom - p.v, target - p.v.measure());
    } else if (static_cast<int>(i) == idx->second) {
      const MSet rest = atom - p.w;
      b1 = b1 | darboux_split(rest, target);
    } else {
      b1 = b1 | darboux_split(atom, target);
    }
  }
  return Algebra::from_partition_unchecked({b1, complement(b1)});
}

/// Delta(V, W, lambda): the entropy change when V and W are exchanged between
/// the two atoms of a lambda-ratio algebra. The overlap is dropped first, then
/// the remaining sets are cut into equal prefix pieces small enough for a
/// family algebra to exist, and the per-piece increments are summed.
inline DeltaResult delta_lambda(const EntropySpec& spec, const SwapPair& p, const Rat& lambda) {
  require_positive(lambda);
  require_equal_measures(p);
  const MSet v = p.v - p.w;
  const MSet w = p.w - p.v;
  DeltaResult r;
  r.lambda_used = lambda;
  if (v.measure().is_zero()) return r;

  const Rat bound = min(epsilon(lambda), Rat(1, 4));
  // smallest k with P(v)/k < bound
  const Rat ratio = v.measure() / bound;
  mpz_class k_big = ratio.numerator() / ratio.denominator() + 1;
  const int k = static_cast<int>(k_big.get_si());

  const auto vs = equal_pieces(v, k);
  const auto ws = equal_pieces(w, k);
  double total = 0.0;
  for (int i = 0; i < k; ++i) {
    const SwapPair piece{vs[static_cast<std::size_t>(i)], ws[static_cast<std::size_t>(i)]};
    const Algebra base = make_family_algebra(piece, lambda);
    total += eval_entropy(spec, transport(base, piece)) - eval_entropy(spec, base);
  }
  r.value = total;
  r.pieces = k;
  return r;
}

/// Delta(V, W) read off at lambda = 2 (log2 2 = 1). The residual
/// |Delta(V,W,4) - 2 Delta(V,W,2)| checks the log-proportionality.
inline DeltaResult delta(const EntropySpec& spec, const SwapPair& p) {
  DeltaResult r = delta_lambda(spec, p, Rat(2));
  const DeltaResult at4 = delta_lambda(spec, p, Rat(4));
  r.crosscheck_residual = std::abs(at4.value - 2.0 * r.value);
  return r;
}

}  // namespace partent
