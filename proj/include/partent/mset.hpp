#pragma once

#include <algorithm>
#include <ostream>
#include <utility>
#include <vector>

#include "partent/error.hpp"
#include "partent/rational.hpp"

namespace partent {

/// Half-open interval [lo, hi).
struct Interval {
  Rat lo;
  Rat hi;

  Rat length() const { return hi - lo; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// A measurable subset of [0,1): a finite union of half-open rational intervals
/// kept in canonical form (sorted, pairwise disjoint, non-adjacent, non-degenerate).
/// Canonical form is unique, so equality is structural.
class MSet {
 public:
  MSet() = default;

  /// Canonicalizes an arbitrary list of intervals. Degenerate pairs vanish.
  static MSet normalize(std::vector<Interval> raw) {
    for (const auto& iv : raw) {
      if (iv.lo.sign() < 0 || iv.hi > Rat(1) || iv.lo > Rat(1) || iv.hi.sign() < 0)
        throw Error(ErrorCode::EndpointOutOfRange,
                    "interval [" + iv.lo.str() + ", " + iv.hi.str() + ") leaves [0,1]");
      if (iv.lo > iv.hi)
        throw Error(ErrorCode::ReversedInterval,
                    "interval [" + iv.lo.str() + ", " + iv.hi.str() + ") has lo > hi");
    }
    std::erase_if(raw, [](const Interval& iv) { return iv.lo == iv.hi; });
    std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    return coalesce(std::move(raw));
  }

  static MSet interval(const Rat& lo, const Rat& hi) { return normalize({{lo, hi}}); }
  static MSet whole() { return MSet({{Rat(0), Rat(1)}}, Rat(1)); }

  const std::vector<Interval>& intervals() const { return iv_; }
  bool empty() const { return iv_.empty(); }
  const Rat& measure() const { return measure_; }

  /// Left endpoint of the first interval; 1 for the empty set.
  Rat leftmost() const { return iv_.empty() ? Rat(1) : iv_.front().lo; }

  friend bool operator==(const MSet& a, const MSet& b) { return a.iv_ == b.iv_; }

  friend MSet unite(const MSet& a, const MSet& b) {
    std::vector<Interval> out;
    out.reserve(a.iv_.size() + b.iv_.size());
    std::merge(a.iv_.begin(), a.iv_.end(), b.iv_.begin(), b.iv_.end(), std::back_inserter(out),
               [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
    return coalesce(std::move(out));
  }

  friend MSet intersect(const MSet& a, const MSet& b) {
    std::vector<Interval> out;
    std::size_t i = 0, j = 0;
    while (i < a.iv_.size() && j < b.iv_.size()) {
      const auto& x = a.iv_[i];
      const auto& y = b.iv_[j];
      const Rat& lo = max(x.lo, y.lo);
      const Rat& hi = min(x.hi, y.hi);
      if (lo < hi) out.push_back({lo, hi});
      if (x.hi < y.hi) ++i; else ++j;
    }
    return coalesce(std::move(out));
  }

  friend MSet complement(const MSet& a) {
    std::vector<Interval> out;
    Rat cursor(0);
    for (const auto& iv : a.iv_) {
      if (cursor < iv.lo) out.push_back({cursor, iv.lo});
      cursor = iv.hi;
    }
    if (cursor < Rat(1)) out.push_back({cursor, Rat(1)});
    return coalesce(std::move(out));
  }

  friend MSet difference(const MSet& a, const MSet& b) { return intersect(a, complement(b)); }
  friend MSet symdiff(const MSet& a, const MSet& b) { return unite(difference(a, b), difference(b, a)); }

  friend MSet operator|(const MSet& a, const MSet& b) { return unite(a, b); }
  friend MSet operator&(const MSet& a, const MSet& b) { return intersect(a, b); }
  friend MSet operator-(const MSet& a, const MSet& b) { return difference(a, b); }
  friend MSet operator^(const MSet& a, const MSet& b) { return symdiff(a, b); }

  bool subset_of(const MSet& other) const { return difference(*this, other).empty(); }
  bool disjoint_from(const MSet& other) const { return intersect(*this, other).empty(); }

  friend std::ostream& operator<<(std::ostream& os, const MSet& s) {
    os << '{';
    for (std::size_t k = 0; k < s.iv_.size(); ++k)
      os << (k ? " u " : "") << '[' << s.iv_[k].lo << ", " << s.iv_[k].hi << ')';
    return os << '}';
  }

 private:
  MSet(std::vector<Interval> canonical, Rat measure)
      : iv_(std::move(canonical)), measure_(std::move(measure)) {}

  // Input sorted by lo and non-degenerate; merges overlapping and touching intervals.
  static MSet coalesce(std::vector<Interval> sorted) {
    std::vector<Interval> out;
    out.reserve(sorted.size());
    for (auto& iv : sorted) {
      if (!out.empty() && iv.lo <= out.back().hi) {
        if (out.back().hi < iv.hi) out.back().hi = std::move(iv.hi);
      } else {
        out.push_back(std::move(iv));
      }
    }
    Rat total;
    for (const auto& iv : out) total += iv.length();
    return MSet(std::move(out), std::move(total));
  }

  std::vector<Interval> iv_;
  Rat measure_;
};

inline MSet mset_normalize(std::vector<Interval> raw) { return MSet::normalize(std::move(raw)); }
inline Rat mset_measure(const MSet& a) { return a.measure(); }

/// Leftmost-prefix subset of `a` with measure exactly `theta`.
inline MSet darboux_split(const MSet& a, const Rat& theta) {
  if (theta.sign() < 0 || theta > a.measure())
    throw Error(ErrorCode::DarbouxRange,
                "darboux split of " + theta.str() + " from a set of measure " + a.measure().str());
  std::vector<Interval> out;
  Rat left = theta;
  for (const auto& iv : a.intervals()) {
    if (left.is_zero()) break;
    const Rat len = iv.length();
    if (len <= left) {
      out.push_back(iv);
      left -= len;
    } else {
      out.push_back({iv.lo, iv.lo + left});
      left = Rat(0);
    }
  }
  return MSet::normalize(std::move(out));
}

/// Cuts `a` into `k` consecutive prefix pieces of equal measure.
inline std::vector<MSet> equal_pieces(const MSet& a, int k) {
  std::vector<MSet> pieces;
  pieces.reserve(static_cast<std::size_t>(k));
  const Rat share = a.measure() / Rat(k);
  MSet rest = a;
  for (int i = 0; i + 1 < k; ++i) {
    pieces.push_back(darboux_split(rest, share));
    rest = rest - pieces.back();
  }
  pieces.push_back(std::move(rest));
  return pieces;
}

}  // namespace partent
