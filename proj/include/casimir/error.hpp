#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

enum class ErrorCode {
    non_monotonic,
    negative_value,
    malformed_row,
    empty_table,
    too_few_samples,
    fit_diverged,
    tolerance_not_reached,
    invalid_xi,
    invalid_eps,
    domain_error,
    cache_range_exceeded,
    invalid_argument,
    io_error,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
          code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

inline const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::non_monotonic: return "NonMonotonic";
        case ErrorCode::negative_value: return "NegativeValue";
        case ErrorCode::malformed_row: return "MalformedRow";
        case ErrorCode::empty_table: return "EmptyTable";
        case ErrorCode::too_few_samples: return "TooFewSamples";
        case ErrorCode::fit_diverged: return "FitDiverged";
        case ErrorCode::tolerance_not_reached: return "ToleranceNotReached";
        case ErrorCode::invalid_xi: return "InvalidXi";
        case ErrorCode::invalid_eps: return "InvalidEps";
        case ErrorCode::domain_error: return "DomainError";
        case ErrorCode::cache_range_exceeded: return "CacheRangeExceeded";
        case ErrorCode::invalid_argument: return "InvalidArgument";
        case ErrorCode::io_error: return "IoError";
    }
    return "UnknownError";
}

}  // namespace casimir
