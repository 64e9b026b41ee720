#pragma once

// Typed error conditions. Everything the engine can refuse to do is one of
// these; the CLI maps kinds to exit codes and the library API can surface
// them as result values instead of exceptions.

#include <stdexcept>
#include <string>

namespace pkx {

enum class ErrorKind {
    Parse,
    DivisionByZeroCoefficient,
    DivisionByZeroSeries,
    InsufficientOrder,   // internal: dominant term not yet visible, caller should iterate
    EssentialSingularity,
    ResourceExhausted,
    NonElementaryIntegral,
    Unsupported,         // e.g. nested logarithms as coefficient atoms
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t position, std::string message)
        : Error(ErrorKind::Parse, std::move(message)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::Parse: return "parse_error";
        case ErrorKind::DivisionByZeroCoefficient: return "division_by_zero_coefficient";
        case ErrorKind::DivisionByZeroSeries: return "division_by_zero_series";
        case ErrorKind::InsufficientOrder: return "insufficient_order";
        case ErrorKind::EssentialSingularity: return "essential_singularity";
        case ErrorKind::ResourceExhausted: return "resource_exhausted";
        case ErrorKind::NonElementaryIntegral: return "non_elementary_integral";
        case ErrorKind::Unsupported: return "unsupported";
    }
    return "unknown";
}

}  // namespace pkx
