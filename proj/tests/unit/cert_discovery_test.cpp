#include <gtest/gtest.h>

#include "wz/errors.hpp"
#include "wz/cert_discovery.hpp"
#include "wz/term_dsl.hpp"
#include "wz/wz_core.hpp"

using namespace wz;

namespace {

const MultiPoly N = MultiPoly::var(Var::n);
const MultiPoly K = MultiPoly::var(Var::k);

HyperTerm cb_term() { return dsl::term_from_source(chaundy_bullard_term_source); }

} // namespace

TEST(DefaultAnsatz, Examples)
{
    const auto a = default_ansatz(cb_term(), 2, 0);
    EXPECT_EQ(a.denominator, (N + 1) * (K + 1));
    EXPECT_EQ(a.degree_bound, 2u);
    const std::vector<Monomial> want{Monomial(), Monomial::of(Var::k), Monomial::of(Var::n),
                                     Monomial::of(Var::k, 2), Monomial::of(Var::n) * Monomial::of(Var::k),
                                     Monomial::of(Var::n, 2)};
    EXPECT_EQ(a.monomials, want);

    const auto c = default_ansatz(HyperTerm::one(), 3, 1);
    EXPECT_EQ(c.denominator, MultiPoly(1));

    const auto z = default_ansatz(cb_term(), 0, 0);
    EXPECT_EQ(z.denominator, (N + 1) * (K + 1));
    EXPECT_EQ(z.monomials, std::vector<Monomial>{Monomial()});
}

TEST(DefaultAnsatz, SpanAddsShiftedFactors)
{
    const auto a = default_ansatz(cb_term(), 1, 2);
    EXPECT_EQ(a.denominator, (N + 1) * (K + 1) * (K + 2) * (K + 3));
    EXPECT_EQ(a.degree_bound, 3u);
}

TEST(NkMonomials, CountAndOrder)
{
    for (unsigned d = 0; d <= 6; ++d) {
        const auto ms = nk_monomials(d);
        ASSERT_EQ(ms.size(), (d + 1) * (d + 2) / 2);
        for (std::size_t i = 1; i < ms.size(); ++i) {
            ASSERT_LT(ms[i - 1], ms[i]);
        }
    }
}

TEST(Discover, Rediscovery)
{
    const auto f = cb_term();
    const auto r = discover(f, default_ansatz(f, 2, 0));
    ASSERT_TRUE(r.found()) << r.message;
    EXPECT_EQ(*r.certificate, rf_normalize(-K, N + 1));
    EXPECT_EQ(r.certificate->to_string(), "-k/(n + 1)");
    EXPECT_TRUE(verify_pair(f, *r.certificate).is_zero());
    EXPECT_EQ(r.unknowns, 6u);
}

TEST(Discover, DegreeZeroFails)
{
    const auto f = cb_term();
    const auto r = discover(f, default_ansatz(f, 0, 0));
    EXPECT_FALSE(r.found());
    EXPECT_FALSE(r.message.empty());
}

TEST(Discover, ConstantTermGivesZero)
{
    for (unsigned d = 0; d <= 3; ++d) {
        const auto r = discover(HyperTerm::one(), default_ansatz(HyperTerm::one(), d, d % 2));
        ASSERT_TRUE(r.found());
        EXPECT_TRUE(r.certificate->is_zero());
    }
}

TEST(Discover, OtherTerm)
{
    const auto f = dsl::term_from_source("binom(n,k) * (1/2)^n");
    const auto r = discover(f, default_ansatz(f, 2, 0));
    ASSERT_TRUE(r.found()) << r.message;
    EXPECT_TRUE(verify_pair(f, *r.certificate).is_zero());
    EXPECT_EQ(*r.certificate, dsl::parse_cert("-k/(2*(n-k+1))"));
}

TEST(Discover, Monotonicity)
{
    const std::vector<HyperTerm> terms{cb_term(), dsl::term_from_source("binom(n,k) * (1/2)^n")};
    for (const auto& f : terms) {
        for (unsigned d = 0; d <= 3; ++d) {
            for (unsigned s = 0; s <= 2; ++s) {
                if (!discover(f, default_ansatz(f, d, s)).found()) {
                    continue;
                }
                EXPECT_TRUE(discover(f, default_ansatz(f, d + 1, s)).found()) << d << "," << s;
                EXPECT_TRUE(discover(f, default_ansatz(f, d, s + 1)).found()) << d << "," << s;
            }
        }
    }
}

TEST(Discover, Deterministic)
{
    const auto f = cb_term();
    for (unsigned d = 2; d <= 4; ++d) {
        const auto a = discover(f, default_ansatz(f, d, 1));
        const auto b = discover(f, default_ansatz(f, d, 1));
        ASSERT_TRUE(a.found());
        EXPECT_EQ(a.certificate->to_string(), b.certificate->to_string());
        EXPECT_TRUE(verify_pair(f, *a.certificate).is_zero());
    }
}
