#include <gtest/gtest.h>

#include "wz/errors.hpp"
#include "wz/properties.hpp"
#include "wz/rational_function.hpp"

using namespace wz;

namespace {

const MultiPoly X = MultiPoly::var(Var::x);
const MultiPoly N = MultiPoly::var(Var::n);
const MultiPoly K = MultiPoly::var(Var::k);

RationalFunction frac(const MultiPoly& a, const MultiPoly& b) { return rf_normalize(a, b); }

} // namespace

TEST(RfNormalize, Examples)
{
    const auto r = rf_normalize(-K * (K + 1), (N + 1) * (K + 1));
    EXPECT_EQ(r.num(), -K);
    EXPECT_EQ(r.den(), N + 1);
    EXPECT_EQ(r.to_string(), "-k/(n + 1)");

    const auto s = rf_normalize(2 * N, MultiPoly(2));
    EXPECT_EQ(s.num(), N);
    EXPECT_EQ(s.den(), MultiPoly(1));

    const auto z = rf_normalize(MultiPoly(), N + 1);
    EXPECT_TRUE(z.is_zero());
    EXPECT_EQ(z.den(), MultiPoly(1));
}

TEST(RfNormalize, MonicDenominator)
{
    const auto r = rf_normalize(MultiPoly(3), 6 * N + 2);
    EXPECT_EQ(r.num(), MultiPoly(BigRational(1, 2)));
    EXPECT_EQ(r.den(), N + BigRational(1, 3));
    EXPECT_EQ(r.den().leading_coef(), BigRational(1));
}

TEST(RfNormalize, ZeroDenominatorThrows)
{
    try {
        rf_normalize(N, MultiPoly());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ZeroDenominator);
    }
}

TEST(RfArith, Examples)
{
    EXPECT_EQ(rf_arith(frac(K, N + 1), frac(1, N + 1), RfOp::add), frac(K + 1, N + 1));
    const RationalFunction a = frac(N * X + K, N * K + 2);
    EXPECT_TRUE(rf_arith(a, a, RfOp::sub).is_zero());

    const RationalFunction rn = frac((N + K + 1) * (1 - X), N + 1);
    EXPECT_EQ(rf_arith(rn, 1, RfOp::sub), frac(K - (N + K + 1) * X, N + 1));
}

TEST(RfArith, DivisionByZeroThrows)
{
    EXPECT_THROW(rf_arith(frac(K, N + 1), RationalFunction(), RfOp::div), Error);
}

TEST(Substitute, Examples)
{
    const RationalFunction r = frac(-K, N + 1);
    EXPECT_EQ(substitute(r, Bindings{{Var::k, RationalFunction(K + 1)}}), frac(-(K + 1), N + 1));
    EXPECT_TRUE(substitute(r, Bindings{{Var::k, RationalFunction(0)}}).is_zero());

    const RationalFunction f = frac((N + K + 1) * X, K + 1);
    const auto v = substitute(f, Bindings{{Var::n, RationalFunction(2)},
                                          {Var::k, RationalFunction(1)},
                                          {Var::x, RationalFunction(BigRational(1, 3))}});
    ASSERT_TRUE(v.is_constant());
    EXPECT_EQ(v.num().constant_value(), BigRational(2, 3));
}

TEST(Substitute, RationalBinding)
{
    // n -> 1/k in 1/(n + 1) gives k/(k + 1).
    const auto r = substitute(frac(1, N + 1), Bindings{{Var::n, frac(1, K)}});
    EXPECT_EQ(r, frac(K, K + 1));
}

TEST(Substitute, PoleThrows)
{
    try {
        substitute(frac(K, N + 1), Bindings{{Var::n, RationalFunction(-1)}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::PoleHit);
    }
}

TEST(Shift, MovesOneVariable)
{
    EXPECT_EQ(shift(frac(-K, N + 1), Var::n, 1), frac(-K, N + 2));
    EXPECT_EQ(shift(frac(-K, N + 1), Var::k, -1), frac(1 - K, N + 1));
}

TEST(RationalFunction, Evaluate)
{
    const RationalFunction r = frac(K, N - 2);
    EXPECT_EQ(r.evaluate({BigRational(0), BigRational(3), BigRational(5)}), BigRational(5));
    EXPECT_FALSE(r.try_evaluate({BigRational(0), BigRational(2), BigRational(5)}).has_value());
    EXPECT_THROW(r.evaluate({BigRational(0), BigRational(2), BigRational(5)}), Error);
}

TEST(RationalFunction, PowAndInverse)
{
    const RationalFunction r = frac(1 - X, N + 1);
    EXPECT_EQ(r.pow(2), frac((1 - X) * (1 - X), (N + 1) * (N + 1)));
    EXPECT_EQ(r.pow(-1), frac(N + 1, 1 - X));
    EXPECT_EQ(r * r.inverse(), RationalFunction(1));
}

TEST(RationalFunction, FieldAxiomsProperty)
{
    const auto r = properties::field_axioms(1000, 201);
    EXPECT_TRUE(r.passed()) << r.first_failure;
}

TEST(RationalFunction, NormalizationUniquenessProperty)
{
    const auto r = properties::normalization_uniqueness(1000, 202);
    EXPECT_TRUE(r.passed()) << r.first_failure;
}

TEST(Substitute, HomomorphismProperty)
{
    const auto r = properties::substitution_homomorphism(1000, 203);
    EXPECT_TRUE(r.passed()) << r.first_failure;
}

TEST(RationalFunction, EvaluationConsistencyProperty)
{
    const auto r = properties::evaluation_consistency(1000, 204);
    EXPECT_TRUE(r.passed()) << r.first_failure;
}
