#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wz/rational_function.hpp"

namespace wz::properties {

// Small random polynomials and rational functions in x, n, k.
class RandomAlgebra {
public:
    explicit RandomAlgebra(std::uint64_t seed) : m_rng(seed) {}

    BigRational rational(long max_num = 5, long max_den = 4);
    // Occasionally zero.
    MultiPoly poly(std::size_t max_terms = 3, std::uint32_t max_exp = 2);
    MultiPoly nonzero_poly(std::size_t max_terms = 3, std::uint32_t max_exp = 2);
    RationalFunction rf();
    RationalFunction nonzero_rf();
    std::size_t index(std::size_t bound);

private:
    std::mt19937_64 m_rng;
};

struct SuiteResult {
    std::string name;
    std::uint64_t seed = 0;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;

    bool passed() const { return failures == 0 && cases > 0; }
};

SuiteResult ring_axioms(std::size_t cases, std::uint64_t seed);
SuiteResult field_axioms(std::size_t cases, std::uint64_t seed);
SuiteResult gcd_divides(std::size_t cases, std::uint64_t seed);
SuiteResult normalization_uniqueness(std::size_t cases, std::uint64_t seed);
SuiteResult substitution_homomorphism(std::size_t cases, std::uint64_t seed);
SuiteResult evaluation_consistency(std::size_t cases, std::uint64_t seed);
SuiteResult linsolve_back_substitution(std::size_t cases, std::uint64_t seed);

using SuiteFn = SuiteResult (*)(std::size_t cases, std::uint64_t seed);

// Every kernel suite above, in a fixed order. Suite i runs with seed + i.
const std::vector<SuiteFn>& kernel_suite_list();
std::vector<SuiteResult> kernel_suites(std::size_t cases, std::uint64_t seed);

} // namespace wz::properties
