#pragma once

#include <stdexcept>
#include <string>

namespace eaforge {

enum class errc {
  non_prime_characteristic,
  reducible_modulus,
  field_too_large,
  mixed_fields,
  division_by_zero,
  not_quadratic_extension,
  non_coprime_length,
  zero_constant_term,
  not_square,
  zero_matrix,
  dimension_mismatch,
  length_mismatch,
  not_coset_closed,
  not_divisor,
  repeated_evaluation_point,
  zero_multiplier,
  redundancy_out_of_range,
  dependent_basis,
  budget_exceeded,
  not_dual_containing,
  too_many_ebits_requested,
  witness_search_failed,
  condition_violated,
  not_moment_form,
  invalid_r,
  not_lcd,
  parity_not_supported,
  degenerate_k,
  congruence_mismatch,
  no_witness,
  unknown_construction,
  parse_error,
  verification_failed,
};

inline const char* errc_name(errc e) {
  switch (e) {
    case errc::non_prime_characteristic: return "NonPrimeCharacteristic";
    case errc::reducible_modulus: return "ReducibleModulus";
    case errc::field_too_large: return "FieldTooLarge";
    case errc::mixed_fields: return "MixedFields";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::not_quadratic_extension: return "NotQuadraticExtension";
    case errc::non_coprime_length: return "NonCoprimeLength";
    case errc::zero_constant_term: return "ZeroConstantTerm";
    case errc::not_square: return "NotSquare";
    case errc::zero_matrix: return "ZeroMatrix";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::not_coset_closed: return "NotCosetClosed";
    case errc::not_divisor: return "NotDivisor";
    case errc::repeated_evaluation_point: return "RepeatedEvaluationPoint";
    case errc::zero_multiplier: return "ZeroMultiplier";
    case errc::redundancy_out_of_range: return "RedundancyOutOfRange";
    case errc::dependent_basis: return "DependentBasis";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::not_dual_containing: return "NotDualContaining";
    case errc::too_many_ebits_requested: return "TooManyEbitsRequested";
    case errc::witness_search_failed: return "WitnessSearchFailed";
    case errc::condition_violated: return "ConditionViolated";
    case errc::not_moment_form: return "NotMomentForm";
    case errc::invalid_r: return "InvalidR";
    case errc::not_lcd: return "NotLcd";
    case errc::parity_not_supported: return "ParityNotSupported";
    case errc::degenerate_k: return "DegenerateK";
    case errc::congruence_mismatch: return "CongruenceMismatch";
    case errc::no_witness: return "NoWitness";
    case errc::unknown_construction: return "UnknownConstruction";
    case errc::parse_error: return "ParseError";
    case errc::verification_failed: return "VerificationFailed";
  }
  return "UnknownError";
}

class forge_error : public std::runtime_error {
 public:
  forge_error(errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

// Thrown by distance enumeration; carries the best bounds established before
// the budget ran out.
class budget_exceeded : public forge_error {
 public:
  budget_exceeded(const std::string& detail, int lower, int upper)
      : forge_error(errc::budget_exceeded, detail), lower_(lower), upper_(upper) {}

  int lower() const noexcept { return lower_; }
  int upper() const noexcept { return upper_; }

 private:
  int lower_;
  int upper_;
};

[[noreturn]] inline void fail(errc code, const std::string& detail) {
  throw forge_error(code, detail);
}

}  // namespace eaforge
