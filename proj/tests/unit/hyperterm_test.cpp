#include <gtest/gtest.h>

#include "wz/errors.hpp"
#include "wz/hyperterm.hpp"
#include "wz/term_dsl.hpp"
#include "wz/wz_core.hpp"
#include "oracles.hpp"

using namespace wz;

namespace {

const MultiPoly X = MultiPoly::var(Var::x);
const MultiPoly N = MultiPoly::var(Var::n);
const MultiPoly K = MultiPoly::var(Var::k);

RationalFunction frac(const MultiPoly& a, const MultiPoly& b) { return rf_normalize(a, b); }

HyperTerm cb_term()
{
    return make_term(RationalFunction(1 - X), frac((N + K + 1) * (1 - X), N + 1), frac((N + K + 1) * X, K + 1));
}

} // namespace

TEST(MakeTerm, BuiltInTermIsValid)
{
    EXPECT_NO_THROW(cb_term());
    EXPECT_EQ(cb_term(), dsl::term_from_source(chaundy_bullard_term_source));
}

TEST(MakeTerm, ConstantTerm)
{
    const auto t = make_term(1, 1, 1);
    EXPECT_EQ(t, HyperTerm::one());
}

TEST(MakeTerm, IncompatibleShifts)
{
    try {
        make_term(1, frac(N + K + 1, N + 1), frac(N + 2 * K, K + 1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::IncompatibleShifts);
    }
}

TEST(MakeTerm, BaseMustBeParameterOnly)
{
    try {
        make_term(RationalFunction(N), 1, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::BaseNotParameterOnly);
    }
}

TEST(MakeTerm, ZeroQuotientRejected)
{
    EXPECT_THROW(make_term(1, 0, 1), Error);
}

TEST(TermMul, FactorsOfBuiltInTerm)
{
    const auto b = dsl::term_from_source("binom(n+k,k)");
    const auto xk = dsl::term_from_source("x^k");
    const auto p = dsl::term_from_source("(1-x)^(n+1)");
    EXPECT_EQ(b * xk * p, cb_term());
}

TEST(TermMul, IdentityAndExponentAddition)
{
    EXPECT_EQ(cb_term() * HyperTerm::one(), cb_term());
    const auto xk = dsl::term_from_source("x^k");
    const auto sq = xk * xk;
    EXPECT_EQ(sq.rk(), RationalFunction(X * X));
    EXPECT_EQ(sq.rn(), RationalFunction(1));
}

TEST(TermMul, AssociativeAndCommutative)
{
    const auto a = dsl::term_from_source("binom(n+k,k)");
    const auto b = dsl::term_from_source("(1+x)^(2*n-k+3)");
    const auto c = dsl::term_from_source("binom(n,k) * 3");
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
}

TEST(EvalPoint, Examples)
{
    const auto f = cb_term();
    EXPECT_EQ(eval_point(f, {0, 0}), RationalFunction(1 - X));
    EXPECT_EQ(eval_point(f, {1, 1}), RationalFunction(2 * X * (1 - X) * (1 - X)));
    RationalFunction sum;
    for (unsigned k = 0; k <= 2; ++k) {
        sum = sum + eval_point(f, {0, k});
    }
    EXPECT_EQ(sum, RationalFunction(1 - X * X * X));
}

TEST(EvalPoint, MatchesOracle)
{
    const auto f = cb_term();
    for (unsigned n = 0; n <= 12; ++n) {
        for (unsigned k = 0; k <= 12; ++k) {
            ASSERT_EQ(eval_point(f, {n, k}), RationalFunction(oracle::to_poly(oracle::chaundy_bullard_term(n, k))))
                << n << "," << k;
        }
    }
}

TEST(EvalPoint, PathIndependence)
{
    const std::vector<HyperTerm> terms{cb_term(), dsl::term_from_source("binom(n+k,n) * (2-x)^(k-n) * x^n"),
                                       dsl::term_from_source("binom(n+k+1,k) * (1+x)^k")};
    for (const auto& t : terms) {
        for (unsigned n = 0; n <= 8; ++n) {
            for (unsigned k = 0; k <= 8; ++k) {
                ASSERT_EQ(eval_point(t, {n, k}, EvalPath::n_first), eval_point(t, {n, k}, EvalPath::k_first))
                    << n << "," << k;
            }
        }
    }
}

TEST(EvalPoint, ShiftQuotientStep)
{
    const auto f = cb_term();
    for (unsigned n = 0; n < 6; ++n) {
        for (unsigned k = 0; k < 6; ++k) {
            const auto rn = substitute(f.rn(), Bindings{{Var::n, RationalFunction(long(n))},
                                                        {Var::k, RationalFunction(long(k))}});
            ASSERT_EQ(eval_point(f, {n + 1, k}), rn * eval_point(f, {n, k}));
        }
    }
}

TEST(EvalPoint, PathPoleIsReported)
{
    // rk = 1/(k - 2) has a pole on the step from k = 2 to k = 3.
    const auto t = make_term(1, 1, frac(1, K - 2));
    EXPECT_NO_THROW(eval_point(t, {0, 2}));
    try {
        eval_point(t, {1, 3});
        FAIL();
    } catch (const PathPoleError& e) {
        EXPECT_EQ(e.code(), ErrorCode::PathPole);
        EXPECT_EQ(e.from_k(), 2u);
        EXPECT_EQ(e.to_k(), 3u);
    }
}

TEST(EvalRow, MatchesPointwise)
{
    const auto f = cb_term();
    const auto row = eval_row(f, 3, 5);
    ASSERT_EQ(row.size(), 6u);
    for (unsigned k = 0; k <= 5; ++k) {
        EXPECT_EQ(row[k], eval_point(f, {3, k}));
    }
}

TEST(EvalNumeric, Examples)
{
    const auto f = cb_term();
    EXPECT_EQ(eval_numeric(f, {1, 1}, BigRational(1, 2)), BigRational(1, 4));
    for (unsigned n = 0; n <= 10; ++n) {
        EXPECT_EQ(eval_numeric(f, {n, 0}, BigRational(0)), BigRational(1));
    }
    for (unsigned k = 0; k <= 10; ++k) {
        EXPECT_EQ(eval_numeric(f, {0, k}, BigRational(1)), BigRational(0));
    }
}

TEST(EvalNumeric, AgreesWithSymbolic)
{
    const auto f = cb_term();
    const BigRational x(2, 7);
    for (unsigned n = 0; n <= 10; ++n) {
        for (unsigned k = 0; k <= 10; ++k) {
            const auto dense = oracle::chaundy_bullard_term(n, k);
            const mpq_class want = oracle::eval(dense, mpq_class(2, 7));
            ASSERT_EQ(eval_numeric(f, {n, k}, x), BigRational(BigInt(want.get_num()), BigInt(want.get_den())));
        }
    }
}

TEST(EvalNumeric, XPole)
{
    // base 1/(1-x) is singular at x = 1 only.
    const auto t = make_term(frac(1, 1 - X), 1, 1);
    EXPECT_EQ(eval_numeric(t, {2, 2}, BigRational(3)), BigRational(-1, 2));
    try {
        eval_numeric(t, {2, 2}, BigRational(1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::XPole);
    }
}
