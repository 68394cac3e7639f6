#ifndef VOAF_ERROR_HPP
#define VOAF_ERROR_HPP

#include <stdexcept>
#include <string>

namespace voaf {

// Every failure the engine can signal. Verification mismatches are *not*
// errors (they are Report outcomes); these are contract violations.
enum class ErrorKind {
    DenominatorNotSupported,  // phase/exponent needs a finer cyclotomic order
    ExponentNotRepresentable, // exponent denominator does not divide the root denom
    WindowUnderflow,          // an operation produced an empty validity window
    WindowAccess,             // coefficient requested outside a validity window
    LogBoundExceeded,
    ExponentNotIntegral,
    HConditionFailed,
    NotConformal,
    CertificateViolation,
    KindMismatch,
    ParseError,
    ConfigError,
    Internal,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

} // namespace voaf

#endif
