#include "wz/rational_function.hpp"

#include <stdexcept>

#include "wz/errors.hpp"

namespace wz {

RationalFunction RationalFunction::normalize(const MultiPoly& num, const MultiPoly& den)
{
    if (den.is_zero()) {
        throw Error(ErrorCode::ZeroDenominator, "rational function with zero denominator");
    }
    if (num.is_zero()) {
        return RationalFunction();
    }
    if (den.is_constant()) {
        return RationalFunction(num * den.constant_value().inverse(), MultiPoly(1), 0);
    }
    if (num.is_constant()) {
        const BigRational lc = den.leading_coef();
        return RationalFunction(num * lc.inverse(), den.monic(), 0);
    }
    const MultiPoly g = poly_gcd(num, den);
    MultiPoly n = num;
    MultiPoly d = den;
    if (!g.is_constant()) {
        n = *divide_exact(num, g);
        d = *divide_exact(den, g);
    }
    const BigRational inv = d.leading_coef().inverse();
    return RationalFunction(n * inv, d * inv, 0);
}

std::optional<BigRational> RationalFunction::try_evaluate(const std::array<BigRational, 3>& point) const
{
    const BigRational d = m_den.evaluate(point);
    if (d.is_zero()) {
        return std::nullopt;
    }
    return m_num.evaluate(point) / d;
}

BigRational RationalFunction::evaluate(const std::array<BigRational, 3>& point) const
{
    auto v = try_evaluate(point);
    if (!v) {
        throw Error(ErrorCode::PoleHit, "evaluation at a pole of " + to_string());
    }
    return *v;
}

RationalFunction RationalFunction::inverse() const
{
    if (is_zero()) {
        throw Error(ErrorCode::DivisionByZero, "inverse of the zero rational function");
    }
    return normalize(m_den, m_num);
}

RationalFunction RationalFunction::pow(long e) const
{
    if (e < 0) {
        return inverse().pow(-e);
    }
    // Powers of a cancelled fraction stay cancelled; only rescale.
    return RationalFunction(m_num.pow(static_cast<unsigned>(e)), m_den.pow(static_cast<unsigned>(e)), 0);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b)
{
    if (a.is_zero()) {
        return b;
    }
    if (b.is_zero()) {
        return a;
    }
    if (a.m_den == b.m_den) {
        return RationalFunction::normalize(a.m_num + b.m_num, a.m_den);
    }
    return RationalFunction::normalize(a.m_num * b.m_den + b.m_num * a.m_den, a.m_den * b.m_den);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b)
{
    return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b)
{
    if (a.is_zero() || b.is_zero()) {
        return RationalFunction();
    }
    if (a.is_polynomial() && b.is_polynomial()) {
        return RationalFunction(a.m_num * b.m_num, MultiPoly(1), 0);
    }
    // a and b are each cancelled, so only cross factors can cancel.
    const MultiPoly g1 = a.m_num.is_constant() || b.m_den.is_constant() ? MultiPoly(1) : poly_gcd(a.m_num, b.m_den);
    const MultiPoly g2 = b.m_num.is_constant() || a.m_den.is_constant() ? MultiPoly(1) : poly_gcd(b.m_num, a.m_den);
    const auto cut = [](const MultiPoly& p, const MultiPoly& g) { return g.is_constant() ? p : *divide_exact(p, g); };
    MultiPoly num = cut(a.m_num, g1) * cut(b.m_num, g2);
    MultiPoly den = cut(a.m_den, g2) * cut(b.m_den, g1);
    const BigRational inv = den.leading_coef().inverse();
    return RationalFunction(num * inv, den * inv, 0);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b)
{
    if (b.is_zero()) {
        throw Error(ErrorCode::DivisionByZero, "division by the zero rational function");
    }
    return a * b.inverse();
}

RationalFunction RationalFunction::operator-() const
{
    return RationalFunction(-m_num, m_den, 0);
}

namespace {

bool bare_factor(const MultiPoly& p)
{
    // A single power of a single variable with coefficient 1.
    if (p.size() != 1 || !p.leading_coef().is_one()) {
        return false;
    }
    int vars = 0;
    for (Var v : all_vars) {
        vars += p.leading().mono[v] > 0 ? 1 : 0;
    }
    return vars == 1;
}

} // namespace

std::string RationalFunction::to_string() const
{
    if (m_den.is_constant()) {
        return m_num.to_string();
    }
    std::string num = m_num.to_string();
    if (m_num.size() > 1 || (m_num.size() == 1 && !m_num.leading_coef().is_integer())) {
        num = "(" + num + ")";
    }
    std::string den = m_den.to_string();
    if (!bare_factor(m_den)) {
        den = "(" + den + ")";
    }
    return num + "/" + den;
}

RationalFunction rf_normalize(const MultiPoly& num, const MultiPoly& den)
{
    return RationalFunction::normalize(num, den);
}

RationalFunction rf_arith(const RationalFunction& a, const RationalFunction& b, RfOp op)
{
    switch (op) {
    case RfOp::add: return a + b;
    case RfOp::sub: return a - b;
    case RfOp::mul: return a * b;
    case RfOp::div: return a / b;
    }
    throw std::invalid_argument("unknown rational function operation");
}

namespace {

// p with each bound variable v = p_v/q_v replaced, scaled by
// prod_v q_v^deg_v(p) so that the result stays a polynomial.
MultiPoly substitute_scaled(const MultiPoly& p, const Bindings& bindings)
{
    std::array<std::vector<MultiPoly>, 3> num_pows;
    std::array<std::vector<MultiPoly>, 3> den_pows;
    std::array<long, 3> degree{0, 0, 0};
    for (Var v : all_vars) {
        const auto& b = bindings[v];
        if (!b) {
            continue;
        }
        const auto i = var_index(v);
        const long d = p.degree_in(v);
        degree[i] = d;
        num_pows[i].emplace_back(1);
        den_pows[i].emplace_back(1);
        for (long e = 1; e <= d; ++e) {
            num_pows[i].push_back(num_pows[i].back() * b->num());
            den_pows[i].push_back(den_pows[i].back() * b->den());
        }
    }
    MultiPoly acc;
    for (const auto& t : p.terms()) {
        Monomial rest = t.mono;
        MultiPoly factor(t.coef);
        for (Var v : all_vars) {
            if (!bindings[v]) {
                continue;
            }
            const auto i = var_index(v);
            const auto e = t.mono[v];
            rest[v] = 0;
            if (e > 0) {
                factor *= num_pows[i][e];
            }
            if (degree[i] > static_cast<long>(e)) {
                factor *= den_pows[i][static_cast<std::size_t>(degree[i] - e)];
            }
        }
        acc += factor * MultiPoly::monomial(rest);
    }
    return acc;
}

} // namespace

RationalFunction substitute(const RationalFunction& f, const Bindings& bindings)
{
    MultiPoly num = substitute_scaled(f.num(), bindings);
    MultiPoly den = substitute_scaled(f.den(), bindings);
    if (den.is_zero()) {
        throw Error(ErrorCode::PoleHit, "substitution makes the denominator of " + f.to_string() + " vanish");
    }
    // num and den were scaled by different powers of each binding's
    // denominator; restore the ratio without a gcd.
    for (Var v : all_vars) {
        const auto& b = bindings[v];
        if (!b || f.num().is_zero()) {
            continue;
        }
        const long diff = f.den().degree_in(v) - f.num().degree_in(v);
        if (diff > 0) {
            num *= b->den().pow(static_cast<unsigned>(diff));
        } else if (diff < 0) {
            den *= b->den().pow(static_cast<unsigned>(-diff));
        }
    }
    return RationalFunction::normalize(num, den);
}

RationalFunction shift(const RationalFunction& f, Var v, long delta)
{
    return substitute(f, Bindings{{v, RationalFunction(MultiPoly::var(v) + MultiPoly(delta))}});
}

} // namespace wz
