#include "wz/wz_core.hpp"

#include <algorithm>
#include <random>

#include "wz/combinatorics.hpp"
#include "wz/errors.hpp"
#include "wz/term_dsl.hpp"

namespace wz {

RationalFunction verify_pair(const HyperTerm& f, const RationalFunction& r)
{
    return (f.rn() - RationalFunction(1)) - (shift(r, Var::k, 1) * f.rk() - r);
}

WZPair WZPair::make(HyperTerm f, RationalFunction r, std::string term_src, std::string cert_src)
{
    const RationalFunction residual = verify_pair(f, r);
    if (!residual.is_zero()) {
        throw Error(ErrorCode::NotAWZPair, "certificate does not satisfy the WZ equation; residual " +
                                               residual.to_string());
    }
    if (term_src.empty()) {
        term_src = "T with base " + f.base().to_string() + ", rn " + f.rn().to_string() + ", rk " + f.rk().to_string();
    }
    if (cert_src.empty()) {
        cert_src = r.to_string();
    }
    return WZPair(std::move(f), std::move(r), std::move(term_src), std::move(cert_src));
}

namespace {

RationalFunction at_lattice(const RationalFunction& q, LatticePoint p)
{
    return substitute(q, Bindings{{Var::n, RationalFunction(BigRational(static_cast<long>(p.n)))},
                                  {Var::k, RationalFunction(BigRational(static_cast<long>(p.k)))}});
}

RationalFunction g_value(const HyperTerm& f, const RationalFunction& r, LatticePoint p)
{
    const RationalFunction rv = at_lattice(r, p);
    if (rv.is_zero()) {
        return rv;
    }
    return rv * eval_point(f, p);
}

RationalFunction sum_of(const std::vector<RationalFunction>& values)
{
    RationalFunction acc;
    for (const auto& v : values) {
        acc += v;
    }
    return acc;
}

TelescopeResult telescope_impl(const HyperTerm& f, const RationalFunction& r, unsigned m, unsigned n)
{
    TelescopeResult out;
    out.lhs = sum_of(eval_row(f, n, m));
    RationalFunction rhs;
    for (unsigned j = 0; j < n; ++j) {
        rhs += g_value(f, r, {j, m + 1}) - g_value(f, r, {j, 0});
    }
    rhs += sum_of(eval_row(f, 0, m));
    out.rhs = std::move(rhs);
    return out;
}

MultiPoly one_minus_x()
{
    return MultiPoly(1) - MultiPoly::var(Var::x);
}

// (1-x)^0 .. (1-x)^count
std::vector<MultiPoly> powers_of_one_minus_x(unsigned count)
{
    std::vector<MultiPoly> p{MultiPoly(1)};
    const MultiPoly base = one_minus_x();
    for (unsigned i = 0; i < count; ++i) {
        p.push_back(p.back() * base);
    }
    return p;
}

MultiPoly x_power(unsigned e)
{
    return MultiPoly::monomial(Monomial::of(Var::x, e));
}

// sum_{j=0}^{n} C(m+j, j) (1-x)^j
MultiPoly weighted_one_minus_x_sum(unsigned m, unsigned n, const std::vector<MultiPoly>& powers)
{
    MultiPoly acc;
    for (unsigned j = 0; j <= n; ++j) {
        acc += powers[j] * BigRational(combinatorics::binomial(m + j, j));
    }
    return acc;
}

PartialSumResult partial_sum_impl(const HyperTerm& f, unsigned m, unsigned n)
{
    PartialSumResult out;
    out.sum = sum_of(eval_row(f, n, m));
    const auto powers = powers_of_one_minus_x(n);
    out.closed = RationalFunction(MultiPoly(1) - x_power(m + 1) * weighted_one_minus_x_sum(m, n, powers));
    return out;
}

BigRational random_rational(std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> num(-97, 97);
    std::uniform_int_distribution<long> den(1, 13);
    return BigRational(BigInt(num(rng)), BigInt(den(rng)));
}

} // namespace

RationalFunction WZPair::g_at(LatticePoint p) const
{
    return g_value(m_f, m_r, p);
}

WZPair chaundy_bullard_pair()
{
    return WZPair::make(dsl::term_from_source(chaundy_bullard_term_source),
                        dsl::parse_cert(chaundy_bullard_cert_source), std::string(chaundy_bullard_term_source),
                        std::string(chaundy_bullard_cert_source));
}

NumericCheck verify_pair_numeric(const HyperTerm& f, const RationalFunction& r, std::size_t samples,
                                 std::uint64_t seed)
{
    constexpr std::size_t retry_cap = 1000;
    const RationalFunction r_next = shift(r, Var::k, 1);
    std::mt19937_64 rng(seed);
    NumericCheck out;
    for (std::size_t s = 0; s < samples; ++s) {
        bool drawn = false;
        for (std::size_t attempt = 0; attempt < retry_cap && !drawn; ++attempt) {
            const std::array<BigRational, 3> point{random_rational(rng), random_rational(rng), random_rational(rng)};
            const auto rn = f.rn().try_evaluate(point);
            const auto rk = f.rk().try_evaluate(point);
            const auto r0 = r.try_evaluate(point);
            const auto r1 = r_next.try_evaluate(point);
            if (!rn || !rk || !r0 || !r1) {
                continue;
            }
            drawn = true;
            ++out.samples_checked;
            const BigRational residual = (*rn - BigRational(1)) - (*r1 * *rk - *r0);
            if (!residual.is_zero()) {
                out.witness = point;
                out.witness_value = residual;
                out.message = "residual " + residual.to_string() + " at x = " + point[0].to_string() +
                              ", n = " + point[1].to_string() + ", k = " + point[2].to_string();
                return out;
            }
        }
        if (!drawn) {
            out.message = "could not draw a pole-free sample after " + std::to_string(retry_cap) + " attempts";
            return out;
        }
    }
    out.pass = true;
    out.message = std::to_string(out.samples_checked) + " samples, residual zero at all";
    return out;
}

bool check_boundary(const WZPair& pair)
{
    return substitute(pair.certificate(), Bindings{{Var::k, RationalFunction(0)}}).is_zero();
}

RationalFunction initial_row_sum(const HyperTerm& f, unsigned m)
{
    return sum_of(eval_row(f, 0, m));
}

TelescopeResult telescope_check(const WZPair& pair, unsigned m, unsigned n)
{
    return telescope_impl(pair.term(), pair.certificate(), m, n);
}

PartialSumResult partial_sum_closed_form(const WZPair& pair, unsigned m, unsigned n)
{
    return partial_sum_impl(pair.term(), m, n);
}

ChaundyBullardParts chaundy_bullard_parts(unsigned m, unsigned n)
{
    const auto powers = powers_of_one_minus_x(std::max(m, n) + 1);
    MultiPoly x_sum;
    for (unsigned k = 0; k <= m; ++k) {
        x_sum += x_power(k) * BigRational(combinatorics::binomial(n + k, k));
    }
    return {powers[n + 1] * x_sum, x_power(m + 1) * weighted_one_minus_x_sum(m, n, powers)};
}

MultiPoly chaundy_bullard(unsigned m, unsigned n)
{
    const auto parts = chaundy_bullard_parts(m, n);
    return parts.first + parts.second;
}

ProofTrace build_proof_trace(unsigned m, unsigned n)
{
    return build_proof_trace(dsl::term_from_source(chaundy_bullard_term_source),
                             dsl::parse_cert(chaundy_bullard_cert_source), std::string(chaundy_bullard_term_source),
                             std::string(chaundy_bullard_cert_source), m, n);
}

ProofTrace build_proof_trace(const HyperTerm& f, const RationalFunction& r, std::string term_src,
                             std::string cert_src, unsigned m, unsigned n)
{
    ProofTrace t;
    t.m = m;
    t.n = n;
    t.term_src = std::move(term_src);
    t.cert_src = std::move(cert_src);
    t.initial_row_expected = RationalFunction(MultiPoly(1) - x_power(m + 1));

    const auto attempt = [&t](const char* step, auto&& body) {
        try {
            body();
        } catch (const std::exception& e) {
            t.failures.push_back(std::string(step) + ": " + e.what());
        }
    };

    attempt("wz_pair", [&] {
        t.wz_residual = verify_pair(f, r);
        if (!t.wz_residual->is_zero()) {
            t.failures.push_back("wz_pair: residual " + t.wz_residual->to_string() + " is not zero");
        }
    });
    attempt("boundary", [&] {
        t.boundary = substitute(r, Bindings{{Var::k, RationalFunction(0)}}).is_zero();
        if (!t.boundary) {
            t.failures.push_back("boundary: G(j,0) does not vanish");
        }
    });
    attempt("initial_row", [&] {
        t.initial_row_got = initial_row_sum(f, m);
        if (*t.initial_row_got != t.initial_row_expected) {
            t.failures.push_back("initial_row: got " + t.initial_row_got->to_string() + ", expected " +
                                 t.initial_row_expected.to_string());
        }
    });
    attempt("telescope", [&] {
        const auto tel = telescope_impl(f, r, m, n);
        t.telescope_lhs = tel.lhs;
        t.telescope_rhs = tel.rhs;
        if (!tel.holds()) {
            t.failures.push_back("telescope: lhs " + tel.lhs.to_string() + " != rhs " + tel.rhs.to_string());
        }
    });
    attempt("partial_sum", [&] {
        const auto ps = partial_sum_impl(f, m, n);
        t.partial_sum = ps.sum;
        t.partial_closed = ps.closed;
        if (!ps.holds()) {
            t.failures.push_back("partial_sum: sum " + ps.sum.to_string() + " != closed form " + ps.closed.to_string());
        }
    });
    attempt("final_identity", [&] {
        t.final_identity = chaundy_bullard(m, n);
        if (*t.final_identity != MultiPoly(1)) {
            t.failures.push_back("final_identity: expansion is " + t.final_identity->to_string() + ", not 1");
        }
    });
    return t;
}

} // namespace wz
