#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bicomm {

enum class Errc {
  ZeroDenominator,
  NonInvertibleModP,
  DivisionByZero,
  InvalidPrime,
  FieldMismatch,
  BothZero,
  ZeroInput,
  DegreeTooLarge,
  NotSquare,
  SizeMismatch,
  Inconsistent,
  AmbientMismatch,
  NotInPolynomialAlgebra,
  NotEndomorphism,
  Infeasible,
  DenominatorSingular,
  NotPrimary,
  TruncationTooShort,
  NotCoprime,
  NotInBicommutant,
  NotIrreducible,
  PrimeMismatch,
  NotInRp,
  LevelTooHigh,
  Parse,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace bicomm
