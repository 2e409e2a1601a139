#pragma once

#include <stdexcept>
#include <string>

namespace ttab {

// Error codes for precondition and structural failures across the library.
enum class Errc {
  not_weakly_decreasing,
  truncation_too_large,
  shifted_needs_distinct_parts,
  valuation_mismatch,
  non_integer_result,
  too_large,
  shape_mismatch,
  entry_out_of_range,
  length_restriction,
  requires_n_leq_m,
  inner_not_contained,
  nonconvergent_spec,
  domain_error,
  singular_denominator,
  unsupported_family,
  unknown_suite,
  parse_error,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::not_weakly_decreasing: return "NotWeaklyDecreasing";
    case Errc::truncation_too_large: return "TruncationTooLarge";
    case Errc::shifted_needs_distinct_parts: return "ShiftedNeedsDistinctParts";
    case Errc::valuation_mismatch: return "ValuationMismatch";
    case Errc::non_integer_result: return "NonIntegerResult";
    case Errc::too_large: return "TooLarge";
    case Errc::shape_mismatch: return "ShapeMismatch";
    case Errc::entry_out_of_range: return "EntryOutOfRange";
    case Errc::length_restriction: return "LengthRestriction";
    case Errc::requires_n_leq_m: return "RequiresNLeqM";
    case Errc::inner_not_contained: return "InnerNotContained";
    case Errc::nonconvergent_spec: return "NonconvergentSpec";
    case Errc::domain_error: return "DomainError";
    case Errc::singular_denominator: return "SingularDenominator";
    case Errc::unsupported_family: return "UnsupportedFamily";
    case Errc::unknown_suite: return "UnknownSuite";
    case Errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace ttab
