#include <gtest/gtest.h>

#include "wz/errors.hpp"
#include "wz/term_dsl.hpp"
#include "wz/wz_core.hpp"
#include "oracles.hpp"

using namespace wz;

namespace {

const MultiPoly X = MultiPoly::var(Var::x);
const MultiPoly N = MultiPoly::var(Var::n);
const MultiPoly K = MultiPoly::var(Var::k);

RationalFunction frac(const MultiPoly& a, const MultiPoly& b) { return rf_normalize(a, b); }

HyperTerm cb_term() { return dsl::term_from_source(chaundy_bullard_term_source); }

RationalFunction cb_cert() { return frac(-K, N + 1); }

// Dense oracle for sum_{k=0}^{m} F(n,k).
oracle::Dense row_sum(unsigned n, unsigned m)
{
    oracle::Dense s;
    for (unsigned k = 0; k <= m; ++k) {
        s = oracle::add(s, oracle::chaundy_bullard_term(n, k));
    }
    return s;
}

} // namespace

TEST(VerifyPair, Examples)
{
    EXPECT_TRUE(verify_pair(cb_term(), cb_cert()).is_zero());
    EXPECT_EQ(verify_pair(cb_term(), RationalFunction()), frac(K - (N + K + 1) * X, N + 1));
    EXPECT_TRUE(verify_pair(HyperTerm::one(), RationalFunction()).is_zero());
}

TEST(VerifyPair, WrongCertificate)
{
    const auto res = verify_pair(cb_term(), frac(-K, N + 2));
    EXPECT_FALSE(res.is_zero());
    EXPECT_EQ(res.to_string(), "(-n*x - k*x + k - x)/(n^2 + 3*n + 2)");
}

TEST(WZPair, MakeRejectsNonPair)
{
    try {
        WZPair::make(cb_term(), frac(-K, N + 2));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotAWZPair);
    }
    EXPECT_NO_THROW(WZPair::make(cb_term(), cb_cert()));
}

TEST(VerifyPairNumeric, Examples)
{
    const auto ok = verify_pair_numeric(cb_term(), cb_cert(), 100, 1);
    EXPECT_TRUE(ok.pass);
    EXPECT_EQ(ok.samples_checked, 100u);

    for (std::uint64_t seed : {1u, 2u, 99u}) {
        const auto bad = verify_pair_numeric(cb_term(), frac(-K, N + 2), 100, seed);
        EXPECT_FALSE(bad.pass);
        ASSERT_TRUE(bad.witness.has_value());
        EXPECT_NE(bad.witness_value, BigRational(0));
    }

    EXPECT_TRUE(verify_pair_numeric(HyperTerm::one(), RationalFunction(), 50, 3).pass);
}

TEST(VerifyPairNumeric, ZeroResidualPassesForAnySeed)
{
    const std::vector<std::pair<std::string, std::string>> pairs{
        {std::string(chaundy_bullard_term_source), "-k/(n+1)"},
        {"1", "0"},
        // F = C(n,k) 2^-n, G = -k/(2(n-k+1)) F.
        {"binom(n,k) * (1/2)^n", "-k/(2*(n-k+1))"},
    };
    for (const auto& [t, c] : pairs) {
        const auto f = dsl::term_from_source(t);
        const auto r = dsl::parse_cert(c);
        ASSERT_TRUE(verify_pair(f, r).is_zero()) << t;
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            EXPECT_TRUE(verify_pair_numeric(f, r, 25, seed).pass) << t << " seed " << seed;
        }
    }
}

TEST(Boundary, Examples)
{
    EXPECT_TRUE(check_boundary(chaundy_bullard_pair()));
    EXPECT_TRUE(check_boundary(WZPair::make(HyperTerm::one(), RationalFunction())));
    // -(k+1)/(n+1) does not pair with F; a k-free r pairs with the constant term.
    EXPECT_TRUE(verify_pair(HyperTerm::one(), frac(-1, N + 1)).is_zero());
    EXPECT_FALSE(check_boundary(WZPair::make(HyperTerm::one(), frac(-1, N + 1))));
}

TEST(InitialRow, Examples)
{
    const auto f = cb_term();
    EXPECT_EQ(initial_row_sum(f, 0), RationalFunction(1 - X));
    EXPECT_EQ(initial_row_sum(f, 3), RationalFunction(1 - X.pow(4)));
    EXPECT_EQ(initial_row_sum(f, 5), RationalFunction(1 - X.pow(6)));
    oracle::Dense geometric;
    for (unsigned k = 0; k <= 5; ++k) {
        geometric = oracle::add(geometric, oracle::mul(oracle::power(oracle::x_poly, k), oracle::one_minus_x));
    }
    EXPECT_EQ(initial_row_sum(f, 5), RationalFunction(oracle::to_poly(geometric)));
}

TEST(InitialRow, ClosedFormUpTo30)
{
    const auto f = cb_term();
    for (unsigned m = 0; m <= 30; ++m) {
        ASSERT_EQ(initial_row_sum(f, m), RationalFunction(1 - X.pow(m + 1))) << m;
    }
}

TEST(Telescope, Examples)
{
    const auto pair = chaundy_bullard_pair();
    const auto t02 = telescope_check(pair, 0, 2);
    EXPECT_EQ(t02.lhs, RationalFunction((1 - X).pow(3)));
    EXPECT_EQ(t02.rhs, t02.lhs);

    for (unsigned m = 0; m <= 6; ++m) {
        const auto t = telescope_check(pair, m, 0);
        EXPECT_EQ(t.lhs, RationalFunction(1 - X.pow(m + 1)));
        EXPECT_TRUE(t.holds());
    }

    const auto t23 = telescope_check(pair, 2, 3);
    EXPECT_TRUE(t23.holds());
    EXPECT_EQ(t23.lhs.num().total_degree(), 6);
    EXPECT_EQ(t23.lhs, RationalFunction(oracle::to_poly(row_sum(3, 2))));
}

TEST(Telescope, GridUpTo12)
{
    const auto pair = chaundy_bullard_pair();
    for (unsigned m = 0; m <= 12; ++m) {
        for (unsigned n = 0; n <= 12; ++n) {
            const auto t = telescope_check(pair, m, n);
            ASSERT_TRUE(t.holds()) << m << "," << n;
            ASSERT_EQ(t.lhs, RationalFunction(oracle::to_poly(row_sum(n, m)))) << m << "," << n;
        }
    }
}

TEST(PartialSum, Examples)
{
    const auto pair = chaundy_bullard_pair();
    for (unsigned n = 0; n <= 6; ++n) {
        const auto p = partial_sum_closed_form(pair, 0, n);
        EXPECT_EQ(p.closed, RationalFunction((1 - X).pow(n + 1)));
        EXPECT_TRUE(p.holds());
    }
    const auto p00 = partial_sum_closed_form(pair, 0, 0);
    EXPECT_EQ(p00.sum, RationalFunction(1 - X));
    const auto p22 = partial_sum_closed_form(pair, 2, 2);
    EXPECT_TRUE(p22.holds());
    EXPECT_EQ(p22.sum.num().total_degree(), 5);
    EXPECT_EQ(p22.sum, RationalFunction(oracle::to_poly(row_sum(2, 2))));
}

TEST(PartialSum, GridUpTo12)
{
    const auto pair = chaundy_bullard_pair();
    for (unsigned m = 0; m <= 12; ++m) {
        for (unsigned n = 0; n <= 12; ++n) {
            ASSERT_TRUE(partial_sum_closed_form(pair, m, n).holds()) << m << "," << n;
        }
    }
}

TEST(ChaundyBullard, Examples)
{
    EXPECT_EQ(chaundy_bullard(0, 0), MultiPoly(1));
    const auto parts = chaundy_bullard_parts(1, 1);
    const std::array<BigRational, 3> half{BigRational(1, 2), BigRational(0), BigRational(0)};
    EXPECT_EQ(parts.first.evaluate(half), BigRational(1, 2));
    EXPECT_EQ(parts.second.evaluate(half), BigRational(1, 2));
    EXPECT_EQ(chaundy_bullard(3, 5), MultiPoly(1));
}

TEST(ChaundyBullard, MatchesDenseOracle)
{
    for (unsigned m = 0; m <= 8; ++m) {
        for (unsigned n = 0; n <= 8; ++n) {
            oracle::Dense second;
            for (unsigned k = 0; k <= n; ++k) {
                second = oracle::add(second, oracle::scale(oracle::power(oracle::one_minus_x, k),
                                                           mpq_class(oracle::pascal_binomial(m + k, k))));
            }
            second = oracle::mul(oracle::power(oracle::x_poly, m + 1), second);
            const auto parts = chaundy_bullard_parts(m, n);
            ASSERT_EQ(parts.first, oracle::to_poly(row_sum(n, m))) << m << "," << n;
            ASSERT_EQ(parts.second, oracle::to_poly(second)) << m << "," << n;
        }
    }
}

TEST(ChaundyBullard, GridUpTo20)
{
    for (unsigned m = 0; m <= 20; ++m) {
        for (unsigned n = 0; n <= 20; ++n) {
            ASSERT_EQ(chaundy_bullard(m, n), MultiPoly(1)) << m << "," << n;
        }
    }
}

TEST(ChaundyBullard, Symmetry)
{
    for (unsigned m = 0; m <= 10; ++m) {
        for (unsigned n = 0; n <= 10; ++n) {
            ASSERT_EQ(chaundy_bullard(n, m), MultiPoly(1));
            const auto a = chaundy_bullard_parts(m, n).first;
            const auto b = chaundy_bullard_parts(n, m).second;
            ASSERT_EQ(a, b.compose(Var::x, 1 - X)) << m << "," << n;
        }
    }
}

TEST(RawWZEquation, NumericAtTwoSevenths)
{
    const auto f = cb_term();
    const auto r = cb_cert();
    const BigRational x(2, 7);
    auto g = [&](unsigned n, unsigned k) {
        return r.evaluate({x, BigRational(long(n)), BigRational(long(k))}) * eval_numeric(f, {n, k}, x);
    };
    for (unsigned n = 0; n <= 10; ++n) {
        for (unsigned k = 0; k <= 10; ++k) {
            const auto lhs = eval_numeric(f, {n + 1, k}, x) - eval_numeric(f, {n, k}, x);
            ASSERT_EQ(lhs, g(n, k + 1) - g(n, k)) << n << "," << k;
        }
    }
}

TEST(GAt, DefinedAsCertificateTimesTerm)
{
    const auto pair = chaundy_bullard_pair();
    EXPECT_EQ(pair.g_at({2, 3}), RationalFunction(-1) * eval_point(pair.term(), {2, 3}));
    EXPECT_TRUE(pair.g_at({5, 0}).is_zero());
}

TEST(ProofTrace, Examples)
{
    const auto t00 = build_proof_trace(0, 0);
    EXPECT_TRUE(t00.valid());
    ASSERT_TRUE(t00.final_identity.has_value());
    EXPECT_EQ(*t00.final_identity, MultiPoly(1));
    EXPECT_TRUE(build_proof_trace(2, 1).valid());
    const auto t1010 = build_proof_trace(10, 10);
    EXPECT_TRUE(t1010.valid());
    for (const auto& f : t1010.failures) {
        ADD_FAILURE() << f;
    }
}

TEST(ProofTrace, ReportsEveryFailingStep)
{
    const auto t = build_proof_trace(cb_term(), frac(-(K + 1), N + 1), "F", "bad", 2, 2);
    EXPECT_FALSE(t.valid());
    EXPECT_GE(t.failures.size(), 2u);
    EXPECT_FALSE(t.boundary);
    ASSERT_TRUE(t.final_identity.has_value());
    EXPECT_EQ(*t.final_identity, MultiPoly(1));
}
