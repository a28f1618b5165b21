#pragma once

#include <stdexcept>
#include <string>

namespace hmfcert {

enum class ErrorCode {
    InvalidArgument,
    NotIrreducible,
    NotTotallyReal,
    DivisionByZero,
    NotSquarefree,
    NotTotallyPositive,
    UnsupportedDegree,
    ParityMismatch,
    WeightTooSmall,
    InvalidPartition,
    DegenerateSplit,
    FusionMismatch,
    SupportViolation,
    NotCommuting,
    NotStable,
    ExtensionNeeded,
    CapExceeded,
    SizeOverflow,
    Inconsistent,
    ZeroEigenvalue,
    SamplePole,
    PoleAtS,
    MissingRatio,
    MissingCoefficient,
    Indeterminate,
    ConfigError,
    UsageError,
};

char const* to_string(ErrorCode code);

/* All failures of the toolkit are reported through this exception; the code
 * identifies the precondition that was violated. */
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, std::string const& what);
    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, std::string const& what);

} // namespace hmfcert
