#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace quotsing {

enum class ErrorKind {
  DivisionByZero,
  ConductorMismatch,
  NotADivisor,
  NotARootOfUnity,
  CapExceeded,
  SingularGenerator,
  OrderCapExceeded,
  DimensionMismatch,
  NonIntegerMultiplicity,
  PseudoReflectionPresent,
  TrivialGroup,
  InvalidLattice,
  NotStronglyConvex,
  NotQGorenstein,
  NotAFace,
  NotDiagonal,
  NotASubgroupOfG,
  InvalidExponent,
  HNotAbelianNormal,
  ParseError,
  InvalidWeights,
  OracleDisagreement,
};

const char* to_string(ErrorKind kind);

/// Errors raised by every module. Input errors and internal check failures
/// share this type; `is_check_failure()` separates the two for the CLI.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, std::vector<std::size_t> offenders = {})
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind),
        offenders_(std::move(offenders)) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// Element indices attached to the error (pseudo-reflections, for example).
  const std::vector<std::size_t>& offenders() const noexcept { return offenders_; }

  bool is_check_failure() const noexcept {
    return kind_ == ErrorKind::OracleDisagreement || kind_ == ErrorKind::NonIntegerMultiplicity ||
           kind_ == ErrorKind::NotASubgroupOfG;
  }

 private:
  ErrorKind kind_;
  std::vector<std::size_t> offenders_;
};

}  // namespace quotsing
