#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lamarle {

/// Machine-readable failure categories shared by every module.
enum class ErrorCode {
    NonFinite,
    NotTimelike,
    NullInput,
    OppositeTimecones,
    DegenerateSpan,
    LexError,
    ParseError,
    UnknownFunction,
    DomainError,
    OutOfDomain,
    NullTangent,
    CylindricalDirector,
    CylindricalSurface,
    NullDirectorDerivative,
    OutOfPlane,
    DegenerateNormal,
    ZeroNormal,
    DegenerateMetric,
    InconsistentClassification,
    UnsupportedClass,
    OutsideDomain,
    IndeterminateAtOrigin,
    UnknownSurface,
    GenerationExhausted,
    DefinitionError,
};

/// Stable snake_case identifier, used in reports and CLI diagnostics.
std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message,
          std::optional<std::size_t> position = std::nullopt)
        : std::runtime_error(message), code_(code), position_(position) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

    /// Byte offset into the source text for lexer, parser and evaluation errors.
    [[nodiscard]] std::optional<std::size_t> position() const noexcept { return position_; }

private:
    ErrorCode code_;
    std::optional<std::size_t> position_;
};

}  // namespace lamarle
