#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wz/multi_poly.hpp"

namespace wz {

struct SelftestOptions {
    unsigned max_grid = 12;
    std::uint64_t seed = 20240601;
    std::size_t property_cases = 1000;
    unsigned threads = 0; // 0: hardware concurrency
};

struct SelftestRow {
    std::string name;
    std::size_t checked = 0;
    std::size_t failed = 0;
    double seconds = 0.0;
    std::vector<std::string> failures; // first few only
};

struct SelftestReport {
    std::vector<SelftestRow> rows;
    double total_seconds = 0.0;

    bool passed() const;
    const SelftestRow* find(const std::string& name) const;
};

// Runs the kernel property suites and every (m, n) grid check with
// 0 <= m, n <= max_grid. Grid cells are independent and may run on several
// threads.
SelftestReport run_selftest(const SelftestOptions& options);

// Exact expansion of C(n+k,k) x^k (1-x)^(n+1) from factorial binomials and the
// binomial theorem, without any hypergeometric-term machinery.
MultiPoly chaundy_bullard_term_oracle(unsigned n, unsigned k);

} // namespace wz
