#include "wz/properties.hpp"

#include <functional>

#include "wz/errors.hpp"
#include "wz/linsolve.hpp"

namespace wz::properties {

BigRational RandomAlgebra::rational(long max_num, long max_den)
{
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return BigRational(BigInt(num(m_rng)), BigInt(den(m_rng)));
}

std::size_t RandomAlgebra::index(std::size_t bound)
{
    return std::uniform_int_distribution<std::size_t>(0, bound - 1)(m_rng);
}

MultiPoly RandomAlgebra::poly(std::size_t max_terms, std::uint32_t max_exp)
{
    if (index(10) == 0) {
        return MultiPoly{};
    }
    return nonzero_poly(max_terms, max_exp);
}

MultiPoly RandomAlgebra::nonzero_poly(std::size_t max_terms, std::uint32_t max_exp)
{
    std::uniform_int_distribution<std::uint32_t> exp(0, max_exp);
    while (true) {
        const std::size_t count = 1 + index(max_terms);
        std::vector<PolyTerm> terms;
        for (std::size_t i = 0; i < count; ++i) {
            terms.push_back({Monomial(exp(m_rng), exp(m_rng), exp(m_rng)), rational()});
        }
        MultiPoly p = MultiPoly::from_terms(std::move(terms));
        if (!p.is_zero()) {
            return p;
        }
    }
}

RationalFunction RandomAlgebra::rf()
{
    return RationalFunction::normalize(poly(3, 2), nonzero_poly(2, 1));
}

RationalFunction RandomAlgebra::nonzero_rf()
{
    return RationalFunction::normalize(nonzero_poly(3, 2), nonzero_poly(2, 1));
}

namespace {

// Runs `body` for each case; body returns an empty string on success or a
// failure description.
SuiteResult run_suite(const std::string& name, std::size_t cases, std::uint64_t seed,
                      const std::function<std::string(RandomAlgebra&)>& body)
{
    SuiteResult r{name, seed, 0, 0, {}};
    RandomAlgebra gen(seed);
    for (std::size_t i = 0; i < cases; ++i) {
        std::string failure;
        try {
            failure = body(gen);
        } catch (const std::exception& e) {
            failure = std::string("exception: ") + e.what();
        }
        ++r.cases;
        if (!failure.empty()) {
            if (r.failures == 0) {
                r.first_failure = "case " + std::to_string(i) + ": " + failure;
            }
            ++r.failures;
        }
    }
    return r;
}

template <typename T>
std::string expect_equal(const char* law, const T& lhs, const T& rhs, const std::string& inputs)
{
    if (lhs == rhs) {
        return {};
    }
    return std::string(law) + " fails for " + inputs + ": " + lhs.to_string() + " vs " + rhs.to_string();
}

template <typename T>
std::string triple(const T& a, const T& b, const T& c)
{
    return "a = " + a.to_string() + ", b = " + b.to_string() + ", c = " + c.to_string();
}

} // namespace

SuiteResult ring_axioms(std::size_t cases, std::uint64_t seed)
{
    return run_suite("ring_axioms", cases, seed, [](RandomAlgebra& g) -> std::string {
        const MultiPoly a = g.poly(), b = g.poly(), c = g.poly();
        const std::string in = triple(a, b, c);
        for (auto msg : {expect_equal("add associativity", (a + b) + c, a + (b + c), in),
                         expect_equal("add commutativity", a + b, b + a, in),
                         expect_equal("mul associativity", (a * b) * c, a * (b * c), in),
                         expect_equal("mul commutativity", a * b, b * a, in),
                         expect_equal("distributivity", a * (b + c), a * b + a * c, in),
                         expect_equal("additive identity", a + MultiPoly{}, a, in),
                         expect_equal("multiplicative identity", a * MultiPoly(1), a, in),
                         expect_equal("additive inverse", a - a, MultiPoly{}, in),
                         expect_equal("zero absorbs", a * MultiPoly{}, MultiPoly{}, in)}) {
            if (!msg.empty()) {
                return msg;
            }
        }
        return {};
    });
}

SuiteResult field_axioms(std::size_t cases, std::uint64_t seed)
{
    return run_suite("field_axioms", cases, seed, [](RandomAlgebra& g) -> std::string {
        const RationalFunction a = g.rf(), b = g.nonzero_rf(), c = g.rf();
        const std::string in = triple(a, b, c);
        const RationalFunction one(1);
        for (auto msg : {expect_equal("add associativity", (a + b) + c, a + (b + c), in),
                         expect_equal("add commutativity", a + b, b + a, in),
                         expect_equal("mul associativity", (a * b) * c, a * (b * c), in),
                         expect_equal("mul commutativity", a * b, b * a, in),
                         expect_equal("distributivity", a * (b + c), a * b + a * c, in),
                         expect_equal("additive inverse", a - a, RationalFunction(), in),
                         expect_equal("multiplicative inverse", b / b, one, in),
                         expect_equal("division undoes multiplication", (a * b) / b, a, in)}) {
            if (!msg.empty()) {
                return msg;
            }
        }
        return {};
    });
}

SuiteResult gcd_divides(std::size_t cases, std::uint64_t seed)
{
    return run_suite("gcd_divides", cases, seed, [](RandomAlgebra& g) -> std::string {
        const MultiPoly common = g.nonzero_poly(2, 1);
        const MultiPoly a = g.poly() * common;
        const MultiPoly b = g.nonzero_poly() * common;
        const MultiPoly d = poly_gcd(a, b);
        const std::string in = "a = " + a.to_string() + ", b = " + b.to_string() + ", gcd = " + d.to_string();
        if (d.is_zero() || !d.leading_coef().is_one()) {
            return "gcd not monic: " + in;
        }
        const auto qa = divide_exact(a, d);
        const auto qb = divide_exact(b, d);
        if (!qa || !qb) {
            return "gcd does not divide both: " + in;
        }
        // Check by multiplication, independently of the division routine.
        if (*qa * d != a || *qb * d != b) {
            return "quotient times gcd differs from input: " + in;
        }
        if (!divide_exact(d, common.monic())) {
            return "gcd misses the planted common factor " + common.to_string() + ": " + in;
        }
        return {};
    });
}

SuiteResult normalization_uniqueness(std::size_t cases, std::uint64_t seed)
{
    return run_suite("normalization_uniqueness", cases, seed, [](RandomAlgebra& g) -> std::string {
        const MultiPoly a = g.poly();
        const MultiPoly b = g.nonzero_poly();
        const MultiPoly c = g.nonzero_poly(2, 1);
        const std::string in = triple(a, b, c);
        const RationalFunction plain = rf_normalize(a, MultiPoly(1));
        for (auto msg : {expect_equal("(a*b)/b", rf_normalize(a * b, b), plain, in),
                         expect_equal("(a*c)/(b*c)", rf_normalize(a * c, b * c), rf_normalize(a, b), in),
                         expect_equal("scalar rescaling", rf_normalize(a * BigRational(-3), b * BigRational(-3)),
                                      rf_normalize(a, b), in)}) {
            if (!msg.empty()) {
                return msg;
            }
        }
        const RationalFunction r = rf_normalize(a, b);
        if (!r.den().leading_coef().is_one()) {
            return "denominator not monic: " + r.to_string();
        }
        if (!poly_gcd(r.num(), r.den()).is_constant()) {
            return "not fully cancelled: " + r.to_string();
        }
        return {};
    });
}

SuiteResult substitution_homomorphism(std::size_t cases, std::uint64_t seed)
{
    return run_suite("substitution_homomorphism", cases, seed, [](RandomAlgebra& g) -> std::string {
        const RationalFunction a = g.rf(), b = g.rf();
        // Redraw bindings until none of the substitutions hits a pole.
        for (int attempt = 0; attempt < 50; ++attempt) {
            Bindings bind;
            for (Var v : all_vars) {
                switch (g.index(4)) {
                case 0: break;
                case 1: bind.bind(v, RationalFunction(g.rational())); break;
                case 2: bind.bind(v, RationalFunction(g.nonzero_poly(2, 1))); break;
                default: bind.bind(v, rf_normalize(g.nonzero_poly(2, 1), g.nonzero_poly(2, 1))); break;
                }
            }
            try {
                const RationalFunction sa = substitute(a, bind);
                const RationalFunction sb = substitute(b, bind);
                const std::string in = "a = " + a.to_string() + ", b = " + b.to_string();
                if (auto msg = expect_equal("sum", substitute(a + b, bind), sa + sb, in); !msg.empty()) {
                    return msg;
                }
                return expect_equal("product", substitute(a * b, bind), sa * sb, in);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::PoleHit) {
                    throw;
                }
            }
        }
        return "no pole-free binding found";
    });
}

SuiteResult evaluation_consistency(std::size_t cases, std::uint64_t seed)
{
    return run_suite("evaluation_consistency", cases, seed, [](RandomAlgebra& g) -> std::string {
        const RationalFunction a = g.rf(), b = g.nonzero_rf();
        for (int attempt = 0; attempt < 50; ++attempt) {
            const std::array<BigRational, 3> pt{g.rational(9, 7), g.rational(9, 7), g.rational(9, 7)};
            const auto va = a.try_evaluate(pt);
            const auto vb = b.try_evaluate(pt);
            if (!va || !vb || vb->is_zero()) {
                continue;
            }
            const std::pair<RationalFunction, BigRational> checks[] = {
                {a + b, *va + *vb}, {a - b, *va - *vb}, {a * b, *va * *vb}, {a / b, *va / *vb}};
            for (const auto& [f, expected] : checks) {
                // Cancellation can only remove poles, never add them.
                const auto got = f.try_evaluate(pt);
                if (!got || *got != expected) {
                    return "evaluation does not commute with arithmetic for a = " + a.to_string() +
                           ", b = " + b.to_string();
                }
            }
            return {};
        }
        return {};
    });
}

SuiteResult linsolve_back_substitution(std::size_t cases, std::uint64_t seed)
{
    return run_suite("linsolve_back_substitution", cases, seed, [](RandomAlgebra& g) -> std::string {
        const std::size_t rows = 1 + g.index(5);
        const std::size_t cols = 1 + g.index(5);
        RationalMatrix m(rows, std::vector<BigRational>(cols));
        for (auto& row : m) {
            for (auto& e : row) {
                e = g.index(3) == 0 ? BigRational(0) : g.rational();
            }
        }
        // Duplicate a row now and then to force rank deficiency.
        if (rows > 1 && g.index(2) == 0) {
            m[rows - 1] = m[0];
        }
        std::vector<BigRational> w(cols);
        for (auto& e : w) {
            e = g.rational();
        }
        std::vector<BigRational> rhs(rows);
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j) {
                rhs[i] += m[i][j] * w[j];
            }
        }
        const auto v = linsolve(m, rhs);
        if (!v) {
            return "consistent system reported as unsolvable";
        }
        for (std::size_t i = 0; i < rows; ++i) {
            BigRational s;
            for (std::size_t j = 0; j < cols; ++j) {
                s += m[i][j] * (*v)[j];
            }
            if (s != rhs[i]) {
                return "solution violates equation " + std::to_string(i);
            }
        }
        return {};
    });
}

const std::vector<SuiteFn>& kernel_suite_list()
{
    static const std::vector<SuiteFn> list{ring_axioms,
                                           field_axioms,
                                           gcd_divides,
                                           normalization_uniqueness,
                                           substitution_homomorphism,
                                           evaluation_consistency,
                                           linsolve_back_substitution};
    return list;
}

std::vector<SuiteResult> kernel_suites(std::size_t cases, std::uint64_t seed)
{
    std::vector<SuiteResult> out;
    const auto& list = kernel_suite_list();
    for (std::size_t i = 0; i < list.size(); ++i) {
        out.push_back(list[i](cases, seed + i));
    }
    return out;
}

} // namespace wz::properties
