#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lpq {

enum class ErrorKind {
  InvalidArgument,
  Overflow,
  NotPrime,
  QOutOfRange,
  ZeroInverse,
  ZeroInput,
  ZeroM,
  ModulusMismatch,
  NotStandardRange,
  WrongCore,
  DegenerateOrbit,
  DegenerateNonContractible,
  TooFewNonContractibleEnds,
  InconsistentRamification,
  HalfIntegerResult,
  NonIntegralIndex,
  CongruenceViolation,
  DegenerateFactors,
  AdjunctionViolation,
  ParityViolation,
};

std::string_view to_string(ErrorKind kind);

// Every contract violation in the library surfaces as an Error carrying a kind.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

}  // namespace lpq
