#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "partent/error.hpp"
#include "partent/mset.hpp"
#include "partent/rational.hpp"

namespace partent {

/// Finite subalgebra of the Borel sets of [0,1), represented by its atoms.
///
/// Atoms are pairwise disjoint, nonempty (hence of positive measure) and cover
/// [0,1). They are kept in ascending order of their leftmost endpoint, so two
/// algebras are equal exactly when their atom lists are equal.
class Algebra {
 public:
  /// The trivial algebra {0, Omega}.
  Algebra() : atoms_{MSet::whole()} {}

  /// Validating constructor. Reports empty atoms, overlapping pairs and gaps
  /// with the offending atom indices (positions in the input list).
  static Algebra from_atoms(std::vector<MSet> atoms) {
    if (atoms.empty()) throw Error(ErrorCode::AtomGap, "no atoms: the partition does not cover [0,1)");
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (atoms[i].empty())
        throw Error(ErrorCode::EmptyAtom, "atom " + std::to_string(i) + " is empty", {static_cast<int>(i)});
    for (std::size_t i = 0; i < atoms.size(); ++i)
      for (std::size_t j = i + 1; j < atoms.size(); ++j)
        if (!atoms[i].disjoint_from(atoms[j]))
          throw Error(ErrorCode::AtomOverlap,
                      "atoms " + std::to_string(i) + " and " + std::to_string(j) + " overlap",
                      {static_cast<int>(i), static_cast<int>(j)});
    Rat total;
    for (const auto& a : atoms) total += a.measure();
    if (total != Rat(1))
      throw Error(ErrorCode::AtomGap, "atoms cover measure " + total.str() + " of [0,1)");
    return Algebra(std::move(atoms));
  }

  /// n-cell equipartition into [i/n, (i+1)/n).
  static Algebra equipartition(int n) {
    std::vector<MSet> atoms;
    for (int i = 0; i < n; ++i) atoms.push_back(MSet::interval(Rat(i, n), Rat(i + 1, n)));
    return Algebra(std::move(atoms));
  }

  /// Builds from a partition already known to be valid (disjoint, nonempty, covering).
  static Algebra from_partition_unchecked(std::vector<MSet> atoms) { return Algebra(std::move(atoms)); }

  const std::vector<MSet>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  const MSet& operator[](std::size_t i) const { return atoms_[i]; }

  std::vector<Rat> atom_measures() const {
    std::vector<Rat> out;
    out.reserve(atoms_.size());
    for (const auto& a : atoms_) out.push_back(a.measure());
    return out;
  }

  /// Index of the atom containing `s`, or -1. The empty set matches no atom.
  int atom_containing(const MSet& s) const {
    if (s.empty()) return -1;
    for (std::size_t i = 0; i < atoms_.size(); ++i)
      if (s.subset_of(atoms_[i])) return static_cast<int>(i);
    return -1;
  }

  friend bool operator==(const Algebra&, const Algebra&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Algebra& a) {
    os << '<';
    for (std::size_t i = 0; i < a.atoms_.size(); ++i) os << (i ? ", " : "") << a.atoms_[i];
    return os << '>';
  }

 private:
  explicit Algebra(std::vector<MSet> atoms) : atoms_(std::move(atoms)) {
    std::sort(atoms_.begin(), atoms_.end(),
              [](const MSet& x, const MSet& y) { return x.leftmost() < y.leftmost(); });
  }

  std::vector<MSet> atoms_;
};

inline Algebra algebra_new(std::vector<MSet> atoms) { return Algebra::from_atoms(std::move(atoms)); }

/// Positive weights summing to exactly one.
class AtomProfile {
 public:
  explicit AtomProfile(std::vector<Rat> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) throw Error(ErrorCode::ProfileSum, "profile has no weights");
    Rat total;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
      if (weights_[i].sign() <= 0)
        throw Error(ErrorCode::ProfileNonPositive, "profile weight " + std::to_string(i) + " is not positive",
                    {static_cast<int>(i)});
      total += weights_[i];
    }
    if (total != Rat(1)) throw Error(ErrorCode::ProfileSum, "profile weights sum to " + total.str());
  }

  const std::vector<Rat>& weights() const { return weights_; }
  std::size_t size() const { return weights_.size(); }

 private:
  std::vector<Rat> weights_;
};

/// Atoms are the nonempty pairwise intersections.
inline Algebra join(const Algebra& a, const Algebra& b) {
  std::vector<MSet> atoms;
  for (const auto& x : a.atoms())
    for (const auto& y : b.atoms()) {
      MSet c = x & y;
      if (!c.empty()) atoms.push_back(std::move(c));
    }
  return Algebra::from_partition_unchecked(std::move(atoms));
}

inline bool is_independent(const Algebra& a, const Algebra& b) {
  for (const auto& x : a.atoms())
    for (const auto& y : b.atoms())
      if ((x & y).measure() != x.measure() * y.measure()) return false;
  return true;
}

/// Blocks C_1..C_k (in profile order) of an algebra independent of `a` with
/// P(C_j) = weights[j]: each atom of `a` is cut into consecutive prefix pieces
/// of measure weights[j] * P(atom), and C_j collects the j-th pieces.
inline std::vector<MSet> independent_blocks(const Algebra& a, const AtomProfile& profile) {
  const auto& w = profile.weights();
  std::vector<MSet> blocks(w.size());
  for (const auto& atom : a.atoms()) {
    MSet rest = atom;
    for (std::size_t j = 0; j < w.size(); ++j) {
      MSet piece = j + 1 == w.size() ? rest : darboux_split(rest, w[j] * atom.measure());
      rest = rest - piece;
      blocks[j] = blocks[j] | piece;
    }
  }
  return blocks;
}

inline Algebra independent_with_profile(const Algebra& a, const AtomProfile& profile) {
  return Algebra::from_partition_unchecked(independent_blocks(a, profile));
}

/// Trace of an algebra on a set of positive measure: a partition of `base`.
struct Restriction {
  MSet base;
  std::vector<MSet> atoms;
};

inline Restriction restrict(const Algebra& a, const MSet& k) {
  if (k.measure().is_zero()) throw Error(ErrorCode::ZeroMeasure, "cannot restrict to a null set");
  Restriction r{k, {}};
  for (const auto& atom : a.atoms()) {
    MSet t = atom & k;
    if (!t.empty()) r.atoms.push_back(std::move(t));
  }
  return r;
}

/// Independence of the traces of `a` and `b` on every atom of `k` under P(.)/P(K).
inline bool conditional_independent(const Algebra& a, const Algebra& b, const Algebra& k) {
  for (const auto& katom : k.atoms()) {
    const Restriction ra = restrict(a, katom);
    const Restriction rb = restrict(b, katom);
    const Rat& pk = katom.measure();
    for (const auto& x : ra.atoms)
      for (const auto& y : rb.atoms)
        if ((x & y).measure() * pk != x.measure() * y.measure()) return false;
  }
  return true;
}

/// True iff the multisets of atom measures coincide.
inline bool same_atom_measures(const Algebra& a, const Algebra& b) {
  if (a.size() != b.size()) return false;
  auto x = a.atom_measures();
  auto y = b.atom_measures();
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

inline constexpr std::size_t kMaxMatchingAtoms = 16;

/// Maximum total P(A_i & B_j) over partial matchings between the atoms.
/// Bitmask DP over the smaller side, rows taken from the larger side.
inline Rat max_overlap_matching(const Algebra& a, const Algebra& b) {
  const bool swap = a.size() < b.size();
  const Algebra& rows = swap ? b : a;
  const Algebra& cols = swap ? a : b;
  if (cols.size() > kMaxMatchingAtoms)
    throw Error(ErrorCode::TooManyAtoms, "both algebras exceed " + std::to_string(kMaxMatchingAtoms) + " atoms");
  const std::size_t nc = cols.size();
  std::vector<std::vector<Rat>> weight(rows.size(), std::vector<Rat>(nc));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < nc; ++j) weight[i][j] = (rows[i] & cols[j]).measure();

  const std::uint32_t full = 1u << nc;
  std::vector<Rat> best(full);
  std::vector<bool> reachable(full, false);
  reachable[0] = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<Rat> next = best;  // row i left unmatched
    std::vector<bool> next_reach = reachable;
    for (std::uint32_t mask = 0; mask < full; ++mask) {
      if (!reachable[mask]) continue;
      for (std::size_t j = 0; j < nc; ++j) {
        if (mask & (1u << j) || weight[i][j].is_zero()) continue;
        const std::uint32_t to = mask | (1u << j);
        Rat cand = best[mask] + weight[i][j];
        if (!next_reach[to] || next[to] < cand) {
          next[to] = std::move(cand);
          next_reach[to] = true;
        }
      }
    }
    best = std::move(next);
    reachable = std::move(next_reach);
  }
  Rat top;
  for (std::uint32_t mask = 0; mask < full; ++mask)
    if (reachable[mask] && top < best[mask]) top = best[mask];
  return top;
}

/// Least measure of a set off which the two algebras agree.
inline Rat distance_d(const Algebra& a, const Algebra& b) { return Rat(1) - max_overlap_matching(a, b); }

/// distance_d plus the difference in atom counts.
inline Rat distance_D(const Algebra& a, const Algebra& b) {
  const long na = static_cast<long>(a.size());
  const long nb = static_cast<long>(b.size());
  return distance_d(a, b) + Rat(na > nb ? na - nb : nb - na);
}

}  // namespace partent
