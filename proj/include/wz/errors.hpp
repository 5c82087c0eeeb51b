#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wz {

enum class ErrorCode {
    BothZero,
    ZeroDenominator,
    DivisionByZero,
    PoleHit,
    IncompatibleShifts,
    BaseNotParameterOnly,
    PathPole,
    XPole,
    SyntaxError,
    UnsupportedShift,
    NonAffineExponent,
    DegenerateBinomial,
    NotAWZPair,
};

std::string_view to_string(ErrorCode code);

// Base of every error raised by the library. The code identifies the failure
// class; the message is human-readable.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), m_code(code) {}

    ErrorCode code() const noexcept { return m_code; }

private:
    ErrorCode m_code;
};

// Raised by the term and certificate parsers. Line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(ErrorCode code, std::size_t line, std::size_t column, const std::string& detail);

    std::size_t line() const noexcept { return m_line; }
    std::size_t column() const noexcept { return m_column; }
    const std::string& detail() const noexcept { return m_detail; }

private:
    std::size_t m_line;
    std::size_t m_column;
    std::string m_detail;
};

// Raised when a shift quotient on an evaluation path is singular or vanishes.
// (from_n, from_k) -> (to_n, to_k) is the offending lattice step.
class PathPoleError : public Error {
public:
    PathPoleError(unsigned from_n, unsigned from_k, unsigned to_n, unsigned to_k, const std::string& why);

    unsigned from_n() const noexcept { return m_from_n; }
    unsigned from_k() const noexcept { return m_from_k; }
    unsigned to_n() const noexcept { return m_to_n; }
    unsigned to_k() const noexcept { return m_to_k; }

private:
    unsigned m_from_n, m_from_k, m_to_n, m_to_k;
};

} // namespace wz
