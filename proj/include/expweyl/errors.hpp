#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace expweyl
{

// Stable error codes. The numeric values are part of the CLI contract
// (process exit status is 10 + code), so never renumber existing entries.
enum class ErrorCode : int
{
    DivisionByZero = 1,
    NonInvertibleSeries = 2,
    SignatureMismatch = 3,
    NotAFunction = 4,
    NegativePower = 5,
    ZeroElement = 6,
    NotHomogeneous = 7,
    UnsupportedElement = 8,
    NotClosed = 9,
    NotIndependent = 10,
    NotGraded = 11,
    DegreeZero = 12,
    ResonantDegree = 13,
    IntegrationFailed = 14,
    WindowOverflow = 15,
    NotAntisymmetric = 16,
    HbarModeOff = 17,
    SyntaxError = 18,
    UnknownSymbol = 19,
    InvalidConfig = 20,
    InvalidArgument = 21,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error
{
public:
    Error(ErrorCode code, const std::string &message);

    ErrorCode code() const noexcept { return m_code; }
    std::string_view name() const noexcept { return error_name(m_code); }

private:
    ErrorCode m_code;
};

// Parse failures carry the byte offset into the source text.
class ParseError : public Error
{
public:
    ParseError(ErrorCode code, const std::string &message, std::size_t position);

    std::size_t position() const noexcept { return m_position; }

private:
    std::size_t m_position;
};

} // namespace expweyl
