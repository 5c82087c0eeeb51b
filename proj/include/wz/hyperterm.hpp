#pragma once

#include <vector>

#include "wz/rational_function.hpp"

namespace wz {

// A proper hypergeometric term T(n, k), stored as its value at the origin
// together with its two shift quotients:
//   base = T(0,0)            (a rational function of x only)
//   rn   = T(n+1,k) / T(n,k)
//   rk   = T(n,k+1) / T(n,k)
// Construction checks that the quotients commute, i.e.
//   rn(n,k+1) * rk(n,k) == rk(n+1,k) * rn(n,k).
class HyperTerm {
public:
    // Throws Error(BaseNotParameterOnly) if base mentions n or k and
    // Error(IncompatibleShifts) if a quotient is zero or the quotients do not
    // commute.
    static HyperTerm make(RationalFunction base, RationalFunction rn, RationalFunction rk);

    // The constant term 1.
    static HyperTerm one();

    const RationalFunction& base() const { return m_base; }
    const RationalFunction& rn() const { return m_rn; }
    const RationalFunction& rk() const { return m_rk; }

    friend bool operator==(const HyperTerm&, const HyperTerm&) = default;

private:
    HyperTerm(RationalFunction base, RationalFunction rn, RationalFunction rk)
        : m_base(std::move(base)), m_rn(std::move(rn)), m_rk(std::move(rk))
    {
    }

    RationalFunction m_base;
    RationalFunction m_rn;
    RationalFunction m_rk;
};

inline HyperTerm make_term(RationalFunction base, RationalFunction rn, RationalFunction rk)
{
    return HyperTerm::make(std::move(base), std::move(rn), std::move(rk));
}

HyperTerm term_mul(const HyperTerm& a, const HyperTerm& b);

inline HyperTerm operator*(const HyperTerm& a, const HyperTerm& b) { return term_mul(a, b); }

struct LatticePoint {
    unsigned n = 0;
    unsigned k = 0;

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

enum class EvalPath {
    n_first, // (0,0) -> (n,0) -> (n,k), the canonical path
    k_first, // (0,0) -> (0,k) -> (n,k)
};

// T(n, k) as a rational function of x. Throws PathPoleError naming the first
// lattice step whose quotient is singular or identically zero.
RationalFunction eval_point(const HyperTerm& t, LatticePoint p, EvalPath path = EvalPath::n_first);

// T(n, 0), ..., T(n, k_max) along the canonical path.
std::vector<RationalFunction> eval_row(const HyperTerm& t, unsigned n, unsigned k_max);

// T(n, k) at a concrete x, multiplying numeric path factors. Throws
// PathPoleError for structural poles and Error(XPole) when only the chosen x
// is singular.
BigRational eval_numeric(const HyperTerm& t, LatticePoint p, const BigRational& x);

} // namespace wz
