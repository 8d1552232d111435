#include "malcev/errors.hpp"

namespace malcev {

const char* errc_name(Errc e) {
  switch (e) {
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::ambient_mismatch: return "AmbientMismatch";
    case Errc::variable_mismatch: return "VariableMismatch";
    case Errc::degree_overflow: return "DegreeOverflow";
    case Errc::non_rational_spectrum: return "NonRationalSpectrum";
    case Errc::not_simultaneously_diagonalizable: return "NotSimultaneouslyDiagonalizable";
    case Errc::target_not_invariant: return "TargetNotInvariant";
    case Errc::bad_k: return "BadK";
    case Errc::bad_rank: return "BadRank";
    case Errc::unsupported_class: return "UnsupportedClass";
    case Errc::not_an_ideal: return "NotAnIdeal";
    case Errc::not_malcev: return "NotMalcev";
    case Errc::already_split: return "AlreadySplit";
    case Errc::split_not_malcev: return "SplitNotMalcev";
    case Errc::result_not_malcev: return "ResultNotMalcev";
    case Errc::bad_levi_data: return "BadLeviData";
    case Errc::extension_spec_violation: return "SpecViolation";
    case Errc::action_not_automorphism: return "ActionNotAutomorphism";
    case Errc::action_not_associator_trivial: return "ActionNotAssociatorTrivial";
    case Errc::oracle_failed: return "OracleFailed";
    case Errc::series_not_stabilized: return "SeriesNotStabilized";
    case Errc::verification_failed: return "VerificationFailed";
    case Errc::parse_error: return "ParseError";
    case Errc::duplicate_bracket: return "DuplicateBracket";
    case Errc::non_antisymmetric_pair: return "NonAntisymmetricPair";
    case Errc::bad_rational: return "BadRational";
    case Errc::usage_error: return "UsageError";
  }
  return "UnknownError";
}

}  // namespace malcev
