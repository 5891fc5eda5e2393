#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sl2kit {

// Machine-readable error codes. Every code maps onto one of the three
// CLI exit classes (usage / domain / check failed).
enum class ErrorCode {
    Usage,
    NotMonic,
    Reducible,
    UnsupportedDegree,
    FieldMismatch,
    Singular,
    NotPrime,
    NotAValuation,
    DegenerateInput,
    EntryOutsideRing,
    Unsupported,
    BudgetExceeded,
    DetNotOne,
    RankDeficient,
    Commutative,
    NotASubalgebra,
    IndependenceFailure,
    NotTraceless,
    GIsInH,
    CheckFailed,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace sl2kit
