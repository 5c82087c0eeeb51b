#include "wz/hyperterm.hpp"

#include "wz/errors.hpp"

namespace wz {

HyperTerm HyperTerm::make(RationalFunction base, RationalFunction rn, RationalFunction rk)
{
    if (base.contains(Var::n) || base.contains(Var::k)) {
        throw Error(ErrorCode::BaseNotParameterOnly, "term base must depend on x only, got " + base.to_string());
    }
    if (rn.is_zero() || rk.is_zero()) {
        throw Error(ErrorCode::IncompatibleShifts, "shift quotients must be nonzero");
    }
    const RationalFunction lhs = shift(rn, Var::k, 1) * rk;
    const RationalFunction rhs = shift(rk, Var::n, 1) * rn;
    if (lhs != rhs) {
        throw Error(ErrorCode::IncompatibleShifts, "shift quotients do not commute: rn = " + rn.to_string() +
                                                       ", rk = " + rk.to_string());
    }
    return HyperTerm(std::move(base), std::move(rn), std::move(rk));
}

HyperTerm HyperTerm::one()
{
    return HyperTerm(RationalFunction(1), RationalFunction(1), RationalFunction(1));
}

HyperTerm term_mul(const HyperTerm& a, const HyperTerm& b)
{
    return HyperTerm::make(a.base() * b.base(), a.rn() * b.rn(), a.rk() * b.rk());
}

namespace {

RationalFunction constant_rf(unsigned v)
{
    return RationalFunction(BigRational(static_cast<long>(v)));
}

// The quotient q at integer (n, k), used on the step (n,k) -> to.
RationalFunction path_factor(const RationalFunction& q, unsigned n, unsigned k, unsigned to_n, unsigned to_k)
{
    RationalFunction f;
    try {
        f = substitute(q, Bindings{{Var::n, constant_rf(n)}, {Var::k, constant_rf(k)}});
    } catch (const Error& e) {
        if (e.code() != ErrorCode::PoleHit) {
            throw;
        }
        throw PathPoleError(n, k, to_n, to_k, "quotient " + q.to_string() + " has a pole");
    }
    if (f.is_zero()) {
        throw PathPoleError(n, k, to_n, to_k, "quotient " + q.to_string() + " vanishes");
    }
    return f;
}

struct Accumulator {
    MultiPoly num;
    MultiPoly den;

    void multiply(const RationalFunction& f)
    {
        num *= f.num();
        den *= f.den();
    }
};

} // namespace

RationalFunction eval_point(const HyperTerm& t, LatticePoint p, EvalPath path)
{
    Accumulator acc{t.base().num(), t.base().den()};
    if (path == EvalPath::n_first) {
        for (unsigned i = 0; i < p.n; ++i) {
            acc.multiply(path_factor(t.rn(), i, 0, i + 1, 0));
        }
        for (unsigned j = 0; j < p.k; ++j) {
            acc.multiply(path_factor(t.rk(), p.n, j, p.n, j + 1));
        }
    } else {
        for (unsigned j = 0; j < p.k; ++j) {
            acc.multiply(path_factor(t.rk(), 0, j, 0, j + 1));
        }
        for (unsigned i = 0; i < p.n; ++i) {
            acc.multiply(path_factor(t.rn(), i, p.k, i + 1, p.k));
        }
    }
    return RationalFunction::normalize(acc.num, acc.den);
}

std::vector<RationalFunction> eval_row(const HyperTerm& t, unsigned n, unsigned k_max)
{
    std::vector<RationalFunction> row;
    row.reserve(k_max + 1);
    row.push_back(eval_point(t, {n, 0}));
    for (unsigned j = 0; j < k_max; ++j) {
        row.push_back(row.back() * path_factor(t.rk(), n, j, n, j + 1));
    }
    return row;
}

namespace {

BigRational numeric_factor(const RationalFunction& q, unsigned n, unsigned k, unsigned to_n, unsigned to_k,
                           const BigRational& x)
{
    const std::array<BigRational, 3> point{x, BigRational(static_cast<long>(n)), BigRational(static_cast<long>(k))};
    const BigRational den = q.den().evaluate(point);
    if (den.is_zero()) {
        // Distinguish a pole of the lattice step from a pole at this x only.
        path_factor(q, n, k, to_n, to_k);
        throw Error(ErrorCode::XPole, "quotient " + q.to_string() + " has a pole at x = " + x.to_string() +
                                          " on step (" + std::to_string(n) + "," + std::to_string(k) + ")");
    }
    const BigRational value = q.num().evaluate(point) / den;
    if (value.is_zero()) {
        path_factor(q, n, k, to_n, to_k);
    }
    return value;
}

} // namespace

BigRational eval_numeric(const HyperTerm& t, LatticePoint p, const BigRational& x)
{
    const std::array<BigRational, 3> origin{x, BigRational(0), BigRational(0)};
    const BigRational base_den = t.base().den().evaluate(origin);
    if (base_den.is_zero()) {
        throw Error(ErrorCode::XPole, "term base " + t.base().to_string() + " has a pole at x = " + x.to_string());
    }
    BigRational value = t.base().num().evaluate(origin) / base_den;
    for (unsigned i = 0; i < p.n; ++i) {
        value *= numeric_factor(t.rn(), i, 0, i + 1, 0, x);
    }
    for (unsigned j = 0; j < p.k; ++j) {
        value *= numeric_factor(t.rk(), p.n, j, p.n, j + 1, x);
    }
    return value;
}

} // namespace wz
