#include "hmfcert/error.hpp"

namespace hmfcert {

char const* to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::NotTotallyReal: return "NotTotallyReal";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotSquarefree: return "NotSquarefree";
    case ErrorCode::NotTotallyPositive: return "NotTotallyPositive";
    case ErrorCode::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorCode::ParityMismatch: return "ParityMismatch";
    case ErrorCode::WeightTooSmall: return "WeightTooSmall";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::DegenerateSplit: return "DegenerateSplit";
    case ErrorCode::FusionMismatch: return "FusionMismatch";
    case ErrorCode::SupportViolation: return "SupportViolation";
    case ErrorCode::NotCommuting: return "NotCommuting";
    case ErrorCode::NotStable: return "NotStable";
    case ErrorCode::ExtensionNeeded: return "ExtensionNeeded";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::SizeOverflow: return "SizeOverflow";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::ZeroEigenvalue: return "ZeroEigenvalue";
    case ErrorCode::SamplePole: return "SamplePole";
    case ErrorCode::PoleAtS: return "PoleAtS";
    case ErrorCode::MissingRatio: return "MissingRatio";
    case ErrorCode::MissingCoefficient: return "MissingCoefficient";
    case ErrorCode::Indeterminate: return "Indeterminate";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::UsageError: return "UsageError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, std::string const& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
{
}

void raise(ErrorCode code, std::string const& what)
{
    throw Error(code, what);
}

} // namespace hmfcert
