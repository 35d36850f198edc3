#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ingham {

enum class ErrorCode {
    Overflow,
    DivisionByZero,
    ParseError,
    FieldMismatch,
    SingularL,
    DuplicateTranslate,
    InvalidSpec,
    NotInLattice,
    PeriodTooLarge,
    SizeMismatch,
    InvalidConfig,
    NotHermitian,
    DegenerateTiling,
    SizeTooLarge,
    HoleOutsideDomain,
    EmptySupport,
    UnknownTiling,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it to an exit status and a stable message.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace ingham
