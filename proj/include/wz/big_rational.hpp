#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace wz {

using BigInt = mpz_class;

// Arbitrary-precision rational, always kept in lowest terms with a positive
// denominator. Zero is 0/1.
class BigRational {
public:
    BigRational() = default;
    BigRational(long value) : m_value(value) {}
    BigRational(int value) : m_value(value) {}
    BigRational(const BigInt& value) : m_value(value) {}
    BigRational(const BigInt& num, const BigInt& den);

    // Accepts "p", "-p", "p/q" with decimal integers. Throws Error(SyntaxError)
    // or Error(ZeroDenominator).
    static BigRational parse(std::string_view text);

    BigInt num() const { return m_value.get_num(); }
    BigInt den() const { return m_value.get_den(); }

    int sign() const { return sgn(m_value); }
    bool is_zero() const { return sign() == 0; }
    bool is_one() const { return m_value == 1; }
    bool is_integer() const { return m_value.get_den() == 1; }

    BigRational abs() const;
    BigRational inverse() const;
    BigRational pow(long exponent) const;

    std::string to_string() const;

    BigRational& operator+=(const BigRational& rhs);
    BigRational& operator-=(const BigRational& rhs);
    BigRational& operator*=(const BigRational& rhs);
    BigRational& operator/=(const BigRational& rhs);

    friend BigRational operator+(BigRational lhs, const BigRational& rhs) { return lhs += rhs; }
    friend BigRational operator-(BigRational lhs, const BigRational& rhs) { return lhs -= rhs; }
    friend BigRational operator*(BigRational lhs, const BigRational& rhs) { return lhs *= rhs; }
    friend BigRational operator/(BigRational lhs, const BigRational& rhs) { return lhs /= rhs; }
    BigRational operator-() const;

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.m_value == b.m_value; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b)
    {
        const int c = cmp(a.m_value, b.m_value);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    const mpq_class& raw() const { return m_value; }

private:
    mpq_class m_value;
};

std::ostream& operator<<(std::ostream& os, const BigRational& q);

} // namespace wz
