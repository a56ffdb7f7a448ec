#pragma once

#include <stdexcept>
#include <string>

namespace btfp {

// Stable error codes; the CLI prints the enumerator name verbatim so scripts
// can match on it.
enum class ErrorCode {
    NotPrime,
    ZeroInverse,
    ModulusMismatch,
    ZeroModulus,
    ZeroOrConstant,
    NotIrreducible,
    RootAtZero,
    CapacityExceeded,
    SeedLengthMismatch,
    ZeroLeadingCoefficient,
    DenseTooLarge,
    DimensionMismatch,
    NotSquare,
    Singular,
    OrderTooSmall,
    IndexOutOfRange,
    NotFoundWithinBound,
    BadBand,
    BadInput,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

}  // namespace btfp
