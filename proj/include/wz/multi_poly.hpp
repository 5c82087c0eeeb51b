#pragma once

#include <array>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wz/big_rational.hpp"
#include "wz/monomial.hpp"

namespace wz {

struct PolyTerm {
    Monomial mono;
    BigRational coef;

    friend bool operator==(const PolyTerm&, const PolyTerm&) = default;
};

// Sparse polynomial in x, n, k over the rationals. Terms are stored in
// strictly decreasing canonical monomial order with nonzero coefficients, so
// structural equality is mathematical equality.
class MultiPoly {
public:
    MultiPoly() = default;
    MultiPoly(const BigRational& c);
    MultiPoly(long c) : MultiPoly(BigRational(c)) {}
    MultiPoly(int c) : MultiPoly(BigRational(c)) {}

    static MultiPoly var(Var v);
    static MultiPoly monomial(const Monomial& m, const BigRational& c = BigRational(1));
    // Terms may be in any order and contain repeats or zeros.
    static MultiPoly from_terms(std::vector<PolyTerm> terms);

    const std::vector<PolyTerm>& terms() const { return m_terms; }
    std::size_t size() const { return m_terms.size(); }
    bool is_zero() const { return m_terms.empty(); }
    bool is_constant() const { return m_terms.empty() || (m_terms.size() == 1 && m_terms[0].mono.is_one()); }
    // Only meaningful when is_constant().
    BigRational constant_value() const;

    // Leading term under the canonical order; the polynomial must be nonzero.
    const PolyTerm& leading() const { return m_terms.front(); }
    const BigRational& leading_coef() const { return m_terms.front().coef; }

    // Total degree; -1 for the zero polynomial.
    long total_degree() const;
    // Degree in one variable; -1 for the zero polynomial.
    long degree_in(Var v) const;
    bool contains(Var v) const { return degree_in(v) > 0; }

    // Coefficient of each power of v, index = exponent. Entries are free of v.
    std::vector<MultiPoly> coefficients_in(Var v) const;
    static MultiPoly from_coefficients(Var v, const std::vector<MultiPoly>& coeffs);

    // Coefficient of a single monomial (zero when absent).
    BigRational coefficient(const Monomial& m) const;

    MultiPoly monic() const;
    MultiPoly pow(unsigned e) const;

    // Evaluates at (x, n, k).
    BigRational evaluate(const std::array<BigRational, 3>& point) const;

    // Replaces v by the polynomial `value`.
    MultiPoly compose(Var v, const MultiPoly& value) const;

    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    MultiPoly& operator*=(const MultiPoly& rhs);
    MultiPoly& operator*=(const BigRational& rhs);

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const BigRational& c) { return a *= c; }
    friend MultiPoly operator*(const BigRational& c, MultiPoly a) { return a *= c; }
    friend MultiPoly operator*(MultiPoly a, long c) { return a *= BigRational(c); }
    friend MultiPoly operator*(long c, MultiPoly a) { return a *= BigRational(c); }
    MultiPoly operator-() const;

    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

    // Canonical text: descending order, explicit '*', '^' for powers.
    std::string to_string() const;

private:
    std::vector<PolyTerm> m_terms;
};

enum class PolyOp { add, sub, mul };

MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, PolyOp op);

// Returns q with a == q * b, or nullopt if b does not divide a.
// Throws Error(DivisionByZero) for b == 0.
std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b);

// Monic greatest common divisor. Throws Error(BothZero) when a = b = 0.
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

// Monic least common multiple of two nonzero polynomials.
MultiPoly poly_lcm(const MultiPoly& a, const MultiPoly& b);

// Partial derivative with respect to v.
MultiPoly derivative(const MultiPoly& p, Var v);

// Product of the distinct irreducible factors of p (monic); 1 for constants.
MultiPoly squarefree_part(const MultiPoly& p);

// Monic gcd of the coefficients of p viewed as a polynomial in v.
MultiPoly content_in(const MultiPoly& p, Var v);

} // namespace wz
