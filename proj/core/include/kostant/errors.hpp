#pragma once

#include <stdexcept>
#include <string>

namespace kostant {

// Failure classes surfaced by the library. The CLI maps ResourceLimit to
// exit code 3 and NoConvergence to exit code 4; everything else is a usage
// or input error (exit code 2) unless it is Internal, which indicates a bug.
enum class ErrorKind {
    NonZeroSum,
    EmptyPolytope,
    BadParams,
    LengthMismatch,
    InfeasibleFlow,
    ResourceLimit,
    Disconnected,
    NegativeArg,
    ZeroMarginal,
    NoConvergence,
    Unsupported,
    RegimeViolation,
    HypothesisViolation,
    DomainViolation,
    NegativeEntry,
    NonPositiveEntry,
    Internal,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

// Always-on internal consistency check. Certification logic must never rely
// on NDEBUG-stripped asserts.
inline void internal_check(bool ok, const char* what) {
    if (!ok) throw Error(ErrorKind::Internal, what);
}

}  // namespace kostant
