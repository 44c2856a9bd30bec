#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace partent {

/// Machine-readable failure categories. Every library error carries exactly one.
enum class ErrorCode {
  InvalidRational,
  DivisionByZero,
  EndpointOutOfRange,
  ReversedInterval,
  DarbouxRange,
  InvalidMeasure,
  EmptyAtom,
  AtomOverlap,
  AtomGap,
  ProfileNonPositive,
  ProfileSum,
  ZeroMeasure,
  TooManyAtoms,
  RenyiAlphaOne,
  NotIndependent,
  NonPositiveLambda,
  OverlappingPair,
  UnequalMeasures,
  NotInFamily,
  SizeBound,
  InvalidGrid,
  InvalidTrials,
  MalformedInput,
  UnknownSuite,
  Io,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidRational: return "invalid_rational";
    case ErrorCode::DivisionByZero: return "division_by_zero";
    case ErrorCode::EndpointOutOfRange: return "endpoint_out_of_range";
    case ErrorCode::ReversedInterval: return "reversed_interval";
    case ErrorCode::DarbouxRange: return "darboux_range";
    case ErrorCode::InvalidMeasure: return "invalid_measure";
    case ErrorCode::EmptyAtom: return "empty_atom";
    case ErrorCode::AtomOverlap: return "atom_overlap";
    case ErrorCode::AtomGap: return "atom_gap";
    case ErrorCode::ProfileNonPositive: return "profile_nonpositive";
    case ErrorCode::ProfileSum: return "profile_sum";
    case ErrorCode::ZeroMeasure: return "zero_measure";
    case ErrorCode::TooManyAtoms: return "too_many_atoms";
    case ErrorCode::RenyiAlphaOne: return "renyi_alpha_one";
    case ErrorCode::NotIndependent: return "not_independent";
    case ErrorCode::NonPositiveLambda: return "nonpositive_lambda";
    case ErrorCode::OverlappingPair: return "overlapping_pair";
    case ErrorCode::UnequalMeasures: return "unequal_measures";
    case ErrorCode::NotInFamily: return "not_in_family";
    case ErrorCode::SizeBound: return "size_bound";
    case ErrorCode::InvalidGrid: return "invalid_grid";
    case ErrorCode::InvalidTrials: return "invalid_trials";
    case ErrorCode::MalformedInput: return "malformed_input";
    case ErrorCode::UnknownSuite: return "unknown_suite";
    case ErrorCode::Io: return "io_error";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail, std::vector<int> indices = {})
      : std::runtime_error(detail), code_(code), indices_(std::move(indices)) {}

  ErrorCode code() const noexcept { return code_; }

  /// Offending element positions (atom indices for algebra validation), if any.
  const std::vector<int>& indices() const noexcept { return indices_; }

 private:
  ErrorCode code_;
  std::vector<int> indices_;
};

}  // namespace partent
