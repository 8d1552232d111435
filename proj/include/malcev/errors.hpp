#ifndef MALCEV_ERRORS_HPP
#define MALCEV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace malcev {

/// Typed failure conditions. Mathematical verdicts (pass/fail with witness)
/// are values, not errors; these cover malformed input and unattainable
/// preconditions.
enum class Errc {
  dimension_mismatch,
  ambient_mismatch,
  variable_mismatch,
  degree_overflow,
  non_rational_spectrum,
  not_simultaneously_diagonalizable,
  target_not_invariant,
  bad_k,
  bad_rank,
  unsupported_class,
  not_an_ideal,
  not_malcev,
  already_split,
  split_not_malcev,
  result_not_malcev,
  bad_levi_data,
  extension_spec_violation,
  action_not_automorphism,
  action_not_associator_trivial,
  oracle_failed,
  series_not_stabilized,
  verification_failed,
  parse_error,
  duplicate_bracket,
  non_antisymmetric_pair,
  bad_rational,
  usage_error,
};

const char* errc_name(Errc e);

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code),
        message_(std::move(message)) {}

  Errc code() const { return code_; }
  const std::string& message() const { return message_; }

 private:
  Errc code_;
  std::string message_;
};

/// Raised when a characteristic polynomial has an irreducible factor of
/// degree > 1 over the rationals; carries the rational-root-free factor.
class NonRationalSpectrumError : public Error {
 public:
  explicit NonRationalSpectrumError(std::string factor)
      : Error(Errc::non_rational_spectrum,
              "characteristic polynomial does not split over Q; remaining factor " + factor),
        factor_(std::move(factor)) {}

  const std::string& factor() const { return factor_; }

 private:
  std::string factor_;
};

}  // namespace malcev

#endif
