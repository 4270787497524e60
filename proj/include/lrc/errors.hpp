#ifndef LRC_ERRORS_HPP
#define LRC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lrc {

// Every failure the library can signal, by name. Kinds map onto process
// exit codes at the CLI boundary: bad input -> 2, exhausted search budget
// -> 3, everything else (internal invariant violations) -> 1.
enum class ErrorKind {
    NonPrimeCharacteristic,
    SizeOverflow,
    NotCoprime,
    NoSuchRoot,
    NotASubfield,
    DivisionByZeroPolynomial,
    FieldMismatch,
    NonMonicGenerator,
    CoefficientNotInBaseField,
    NotADivisor,
    LengthMismatch,
    InvalidParams,
    PreconditionFailed,
    RootCollision,
    InfeasibleBudget,
    EmptyLocalDual,
    LocalRepairInfeasible,
    AmbiguousErasure,
};

const char* error_kind_name(ErrorKind kind);

// 2 = rejected input, 3 = budget exhaustion, 1 = internal error.
int error_exit_code(ErrorKind kind);

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

}  // namespace lrc

#endif
