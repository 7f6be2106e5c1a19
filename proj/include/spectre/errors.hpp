#pragma once

#include <stdexcept>
#include <string>

namespace spectre {

// Base for all domain errors; name() is the stable identifier shown by the CLI.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

#define SPECTRE_ERROR(Cls)                                               \
  class Cls : public Error {                                             \
   public:                                                               \
    explicit Cls(const std::string& what) : Error(#Cls, what) {}         \
  };

SPECTRE_ERROR(ParseError)
SPECTRE_ERROR(DomainError)
SPECTRE_ERROR(EmptySpectrum)
SPECTRE_ERROR(NegativeMultiplicity)
SPECTRE_ERROR(NotConvenient)
SPECTRE_ERROR(DegenerateFace)
SPECTRE_ERROR(ConditionIIIViolated)
SPECTRE_ERROR(ConditionIIIPrimeViolated)
SPECTRE_ERROR(NegativeEntry)
SPECTRE_ERROR(NotPolynomial)
SPECTRE_ERROR(NotIsolated)
SPECTRE_ERROR(EmptyMonoid)
SPECTRE_ERROR(NotPureTail)
SPECTRE_ERROR(InvalidSpectrum)
SPECTRE_ERROR(OutsidePositiveOrthantLogic)
SPECTRE_ERROR(NegativeFinalSpectrum)
SPECTRE_ERROR(MismatchReport)
SPECTRE_ERROR(BoundViolated)
SPECTRE_ERROR(DegenerateSection)
SPECTRE_ERROR(RankDisagreement)
SPECTRE_ERROR(UnderdeterminedWeights)

#undef SPECTRE_ERROR

}  // namespace spectre
