#include "wz/selftest.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <thread>

#include "wz/cert_discovery.hpp"
#include "wz/combinatorics.hpp"
#include "wz/properties.hpp"
#include "wz/wz_core.hpp"

namespace wz {

bool SelftestReport::passed() const
{
    return std::all_of(rows.begin(), rows.end(), [](const SelftestRow& r) { return r.failed == 0 && r.checked > 0; });
}

const SelftestRow* SelftestReport::find(const std::string& name) const
{
    for (const auto& r : rows) {
        if (r.name == name) {
            return &r;
        }
    }
    return nullptr;
}

MultiPoly chaundy_bullard_term_oracle(unsigned n, unsigned k)
{
    const BigInt lead = combinatorics::binomial(n + k, k);
    std::vector<PolyTerm> terms;
    for (unsigned i = 0; i <= n + 1; ++i) {
        BigInt c = lead * combinatorics::binomial(n + 1, i);
        if (i % 2 == 1) {
            c = -c;
        }
        terms.push_back({Monomial::of(Var::x, k + i), BigRational(c)});
    }
    return MultiPoly::from_terms(std::move(terms));
}

namespace {

constexpr std::size_t max_listed_failures = 5;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Runs `check(i)` for i in [0, count) and collects a row. `check` returns an
// empty string on success.
SelftestRow run_cells(const std::string& name, std::size_t count, unsigned threads,
                      const std::function<std::string(std::size_t)>& check)
{
    const auto start = Clock::now();
    SelftestRow row{name, count, 0, 0.0, {}};
    std::vector<std::string> results(count);
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                results[i] = check(i);
            } catch (const std::exception& e) {
                results[i] = std::string("exception: ") + e.what();
            }
        }
    };
    const unsigned used = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(count)));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < used; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto& t : pool) {
        t.join();
    }
    for (auto& r : results) {
        if (!r.empty()) {
            ++row.failed;
            if (row.failures.size() < max_listed_failures) {
                row.failures.push_back(std::move(r));
            }
        }
    }
    row.seconds = seconds_since(start);
    return row;
}

std::string at(unsigned m, unsigned n)
{
    return "(m,n) = (" + std::to_string(m) + "," + std::to_string(n) + ")";
}

} // namespace

SelftestReport run_selftest(const SelftestOptions& options)
{
    const auto start = Clock::now();
    const unsigned threads = options.threads != 0 ? options.threads : std::max(1U, std::thread::hardware_concurrency());
    const unsigned side = options.max_grid + 1;
    const std::size_t cells = std::size_t{side} * side;
    const WZPair pair = chaundy_bullard_pair();
    SelftestReport report;

    const auto& suites = properties::kernel_suite_list();
    for (std::size_t i = 0; i < suites.size(); ++i) {
        const auto suite_start = Clock::now();
        const auto suite = suites[i](options.property_cases, options.seed + i);
        SelftestRow row{"property:" + suite.name, suite.cases, suite.failures, seconds_since(suite_start), {}};
        if (!suite.first_failure.empty()) {
            row.failures.push_back(suite.first_failure + " (seed " + std::to_string(suite.seed) + ")");
        }
        report.rows.push_back(std::move(row));
    }

    report.rows.push_back(run_cells("wz_pair", 1, threads, [&](std::size_t) -> std::string {
        if (!verify_pair(pair.term(), pair.certificate()).is_zero()) {
            return "symbolic residual is not zero";
        }
        const auto numeric = verify_pair_numeric(pair.term(), pair.certificate(), 100, options.seed);
        if (!numeric.pass) {
            return numeric.message;
        }
        return check_boundary(pair) ? std::string{} : "boundary G(j,0) = 0 fails";
    }));

    report.rows.push_back(run_cells("discovery", 1, threads, [&](std::size_t) -> std::string {
        const auto found = discover(pair.term(), default_ansatz(pair.term(), 2, 0));
        if (!found.found() || *found.certificate != pair.certificate()) {
            return "rediscovery failed: " + found.message;
        }
        return {};
    }));

    report.rows.push_back(run_cells("initial_row", side, threads, [&](std::size_t m) -> std::string {
        const RationalFunction expected(MultiPoly(1) - MultiPoly::monomial(Monomial::of(Var::x, m + 1)));
        const auto got = initial_row_sum(pair.term(), static_cast<unsigned>(m));
        return got == expected ? std::string{} : "m = " + std::to_string(m) + ": " + got.to_string();
    }));

    report.rows.push_back(run_cells("oracle_equivalence", cells, threads, [&](std::size_t i) -> std::string {
        const unsigned n = static_cast<unsigned>(i / side), k = static_cast<unsigned>(i % side);
        const auto got = eval_point(pair.term(), {n, k});
        return got == RationalFunction(chaundy_bullard_term_oracle(n, k))
                   ? std::string{}
                   : "F(" + std::to_string(n) + "," + std::to_string(k) + ") = " + got.to_string();
    }));

    const unsigned path_side = std::min(side, 9U);
    report.rows.push_back(
        run_cells("path_independence", std::size_t{path_side} * path_side, threads, [&](std::size_t i) -> std::string {
            const LatticePoint p{static_cast<unsigned>(i / path_side), static_cast<unsigned>(i % path_side)};
            return eval_point(pair.term(), p, EvalPath::n_first) == eval_point(pair.term(), p, EvalPath::k_first)
                       ? std::string{}
                       : "paths disagree at (" + std::to_string(p.n) + "," + std::to_string(p.k) + ")";
        }));

    report.rows.push_back(run_cells("raw_wz_equation", cells, threads, [&](std::size_t i) -> std::string {
        const unsigned n = static_cast<unsigned>(i / side), k = static_cast<unsigned>(i % side);
        const BigRational x(BigInt(2), BigInt(7));
        const auto g = [&](unsigned a, unsigned b) {
            const std::array<BigRational, 3> pt{x, BigRational(static_cast<long>(a)), BigRational(static_cast<long>(b))};
            return pair.certificate().evaluate(pt) * eval_numeric(pair.term(), {a, b}, x);
        };
        const BigRational lhs = eval_numeric(pair.term(), {n + 1, k}, x) - eval_numeric(pair.term(), {n, k}, x);
        const BigRational rhs = g(n, k + 1) - g(n, k);
        return lhs == rhs ? std::string{} : "F/G equation fails at (n,k) = (" + std::to_string(n) + "," +
                                                std::to_string(k) + ")";
    }));

    report.rows.push_back(run_cells("telescope", cells, threads, [&](std::size_t i) -> std::string {
        const unsigned m = static_cast<unsigned>(i / side), n = static_cast<unsigned>(i % side);
        return telescope_check(pair, m, n).holds() ? std::string{} : "lhs != rhs at " + at(m, n);
    }));

    report.rows.push_back(run_cells("partial_sum", cells, threads, [&](std::size_t i) -> std::string {
        const unsigned m = static_cast<unsigned>(i / side), n = static_cast<unsigned>(i % side);
        return partial_sum_closed_form(pair, m, n).holds() ? std::string{} : "sum != closed at " + at(m, n);
    }));

    report.rows.push_back(run_cells("identity", cells, threads, [&](std::size_t i) -> std::string {
        const unsigned m = static_cast<unsigned>(i / side), n = static_cast<unsigned>(i % side);
        const auto p = chaundy_bullard(m, n);
        return p == MultiPoly(1) ? std::string{} : "expansion is " + p.to_string() + " at " + at(m, n);
    }));

    report.total_seconds = seconds_since(start);
    return report;
}

} // namespace wz
