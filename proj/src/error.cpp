#include "bicomm/error.hpp"

namespace bicomm {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::NonInvertibleModP: return "NonInvertibleModP";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::InvalidPrime: return "InvalidPrime";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::BothZero: return "BothZero";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::DegreeTooLarge: return "DegreeTooLarge";
    case Errc::NotSquare: return "NotSquare";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::Inconsistent: return "Inconsistent";
    case Errc::AmbientMismatch: return "AmbientMismatch";
    case Errc::NotInPolynomialAlgebra: return "NotInPolynomialAlgebra";
    case Errc::NotEndomorphism: return "NotEndomorphism";
    case Errc::Infeasible: return "Infeasible";
    case Errc::DenominatorSingular: return "DenominatorSingular";
    case Errc::NotPrimary: return "NotPrimary";
    case Errc::TruncationTooShort: return "TruncationTooShort";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::NotInBicommutant: return "NotInBicommutant";
    case Errc::NotIrreducible: return "NotIrreducible";
    case Errc::PrimeMismatch: return "PrimeMismatch";
    case Errc::NotInRp: return "NotInRp";
    case Errc::LevelTooHigh: return "LevelTooHigh";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace bicomm
