#include "wz/big_rational.hpp"

#include <ostream>

#include "wz/errors.hpp"

namespace wz {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::PoleHit: return "PoleHit";
    case ErrorCode::IncompatibleShifts: return "IncompatibleShifts";
    case ErrorCode::BaseNotParameterOnly: return "BaseNotParameterOnly";
    case ErrorCode::PathPole: return "PathPole";
    case ErrorCode::XPole: return "XPole";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnsupportedShift: return "UnsupportedShift";
    case ErrorCode::NonAffineExponent: return "NonAffineExponent";
    case ErrorCode::DegenerateBinomial: return "DegenerateBinomial";
    case ErrorCode::NotAWZPair: return "NotAWZPair";
    }
    return "Unknown";
}

ParseError::ParseError(ErrorCode code, std::size_t line, std::size_t column, const std::string& detail)
    : Error(code, std::string(to_string(code)) + " at " + std::to_string(line) + ":" + std::to_string(column) +
                      ": " + detail),
      m_line(line), m_column(column), m_detail(detail)
{
}

namespace {

std::string step_text(unsigned fn, unsigned fk, unsigned tn, unsigned tk, const std::string& why)
{
    return "path pole on step (" + std::to_string(fn) + "," + std::to_string(fk) + ") -> (" + std::to_string(tn) +
           "," + std::to_string(tk) + "): " + why;
}

} // namespace

PathPoleError::PathPoleError(unsigned from_n, unsigned from_k, unsigned to_n, unsigned to_k, const std::string& why)
    : Error(ErrorCode::PathPole, step_text(from_n, from_k, to_n, to_k, why)),
      m_from_n(from_n), m_from_k(from_k), m_to_n(to_n), m_to_k(to_k)
{
}

BigRational::BigRational(const BigInt& num, const BigInt& den)
{
    if (den == 0) {
        throw Error(ErrorCode::ZeroDenominator, "rational with zero denominator");
    }
    m_value = mpq_class(num, den);
    m_value.canonicalize();
}

BigRational BigRational::parse(std::string_view text)
{
    const auto bad = [&]() { return Error(ErrorCode::SyntaxError, "not a rational literal: '" + std::string(text) + "'"); };
    const auto parse_int = [&](std::string_view s, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) {
            i = 1;
        }
        if (i == s.size()) {
            throw bad();
        }
        for (std::size_t j = i; j < s.size(); ++j) {
            if (s[j] < '0' || s[j] > '9') {
                throw bad();
            }
        }
        std::string digits(s);
        if (digits[0] == '+') {
            digits.erase(0, 1);
        }
        return BigInt(digits, 10);
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return BigRational(parse_int(text, true));
    }
    return BigRational(parse_int(text.substr(0, slash), true), parse_int(text.substr(slash + 1), false));
}

BigRational BigRational::abs() const
{
    BigRational r;
    r.m_value = ::abs(m_value);
    return r;
}

BigRational BigRational::inverse() const
{
    if (is_zero()) {
        throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    }
    BigRational r;
    mpq_inv(r.m_value.get_mpq_t(), m_value.get_mpq_t());
    return r;
}

BigRational BigRational::pow(long exponent) const
{
    if (exponent < 0) {
        return inverse().pow(-exponent);
    }
    BigRational r;
    mpz_pow_ui(r.m_value.get_num_mpz_t(), m_value.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(r.m_value.get_den_mpz_t(), m_value.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return r;
}

std::string BigRational::to_string() const
{
    return m_value.get_str(10);
}

BigRational& BigRational::operator+=(const BigRational& rhs)
{
    m_value += rhs.m_value;
    return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs)
{
    m_value -= rhs.m_value;
    return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs)
{
    m_value *= rhs.m_value;
    return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs)
{
    if (rhs.is_zero()) {
        throw Error(ErrorCode::DivisionByZero, "rational division by zero");
    }
    m_value /= rhs.m_value;
    return *this;
}

BigRational BigRational::operator-() const
{
    BigRational r;
    r.m_value = -m_value;
    return r;
}

std::ostream& operator<<(std::ostream& os, const BigRational& q)
{
    return os << q.to_string();
}

} // namespace wz
