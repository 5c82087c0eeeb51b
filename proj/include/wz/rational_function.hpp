#pragma once

#include <array>
#include <optional>
#include <string>

#include "wz/multi_poly.hpp"

namespace wz {

// Quotient of two polynomials in canonical form: fully cancelled, with a
// denominator whose leading coefficient is 1. Zero is 0/1.
class RationalFunction {
public:
    RationalFunction() : m_den(1) {}
    RationalFunction(const MultiPoly& p) : m_num(p), m_den(1) {}
    RationalFunction(const BigRational& c) : m_num(c), m_den(1) {}
    RationalFunction(long c) : RationalFunction(BigRational(c)) {}
    RationalFunction(int c) : RationalFunction(BigRational(c)) {}

    // Throws Error(ZeroDenominator) when den == 0.
    static RationalFunction normalize(const MultiPoly& num, const MultiPoly& den);

    static RationalFunction var(Var v) { return RationalFunction(MultiPoly::var(v)); }

    const MultiPoly& num() const { return m_num; }
    const MultiPoly& den() const { return m_den; }

    bool is_zero() const { return m_num.is_zero(); }
    bool is_polynomial() const { return m_den.is_constant(); }
    bool is_constant() const { return m_num.is_constant() && m_den.is_constant(); }
    bool contains(Var v) const { return m_num.contains(v) || m_den.contains(v); }

    // Value at (x, n, k); nullopt if the denominator vanishes there.
    std::optional<BigRational> try_evaluate(const std::array<BigRational, 3>& point) const;
    // Throws Error(PoleHit) if the denominator vanishes there.
    BigRational evaluate(const std::array<BigRational, 3>& point) const;

    RationalFunction pow(long e) const;
    RationalFunction inverse() const;

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction operator-() const;

    RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
    RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
    RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }
    RationalFunction& operator/=(const RationalFunction& b) { return *this = *this / b; }

    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

    // "num" when the denominator is 1, otherwise "num/den" with parentheses
    // wherever re-parsing would otherwise change the meaning.
    std::string to_string() const;

private:
    RationalFunction(MultiPoly num, MultiPoly den, int) : m_num(std::move(num)), m_den(std::move(den)) {}

    MultiPoly m_num;
    MultiPoly m_den;
};

enum class RfOp { add, sub, mul, div };

RationalFunction rf_normalize(const MultiPoly& num, const MultiPoly& den);
RationalFunction rf_arith(const RationalFunction& a, const RationalFunction& b, RfOp op);

// Partial assignment of rational functions to the variables x, n, k. Unbound
// variables pass through unchanged.
class Bindings {
public:
    Bindings() = default;
    Bindings(std::initializer_list<std::pair<Var, RationalFunction>> init)
    {
        for (const auto& [v, f] : init) {
            bind(v, f);
        }
    }

    Bindings& bind(Var v, RationalFunction value)
    {
        m_values[var_index(v)] = std::move(value);
        return *this;
    }

    const std::optional<RationalFunction>& operator[](Var v) const { return m_values[var_index(v)]; }

private:
    std::array<std::optional<RationalFunction>, 3> m_values;
};

// Simultaneous substitution. Throws Error(PoleHit) if the denominator becomes
// the zero polynomial.
RationalFunction substitute(const RationalFunction& f, const Bindings& bindings);

// Shorthand for substitute(f, {v -> v + delta}).
RationalFunction shift(const RationalFunction& f, Var v, long delta);

} // namespace wz
