#include "expweyl/errors.hpp"

namespace expweyl
{

std::string_view error_name(ErrorCode code)
{
    switch (code)
    {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NonInvertibleSeries: return "NonInvertibleSeries";
    case ErrorCode::SignatureMismatch: return "SignatureMismatch";
    case ErrorCode::NotAFunction: return "NotAFunction";
    case ErrorCode::NegativePower: return "NegativePower";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::UnsupportedElement: return "UnsupportedElement";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::NotIndependent: return "NotIndependent";
    case ErrorCode::NotGraded: return "NotGraded";
    case ErrorCode::DegreeZero: return "DegreeZero";
    case ErrorCode::ResonantDegree: return "ResonantDegree";
    case ErrorCode::IntegrationFailed: return "IntegrationFailed";
    case ErrorCode::WindowOverflow: return "WindowOverflow";
    case ErrorCode::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorCode::HbarModeOff: return "HbarModeOff";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownSymbol: return "UnknownSymbol";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(error_name(code)) + ": " + message), m_code(code)
{
}

ParseError::ParseError(ErrorCode code, const std::string &message, std::size_t position)
    : Error(code, message + " (at offset " + std::to_string(position) + ")"), m_position(position)
{
}

} // namespace expweyl
