#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wz/hyperterm.hpp"

namespace wz {

// Source text of the built-in pair: F(n,k) = C(n+k,k) x^k (1-x)^(n+1) with
// certificate R(n,k) = -k/(n+1).
inline constexpr std::string_view chaundy_bullard_term_source = "binom(n+k,k) * x^k * (1-x)^(n+1)";
inline constexpr std::string_view chaundy_bullard_cert_source = "-k/(n+1)";

// (rn - 1) - (r(n,k+1) * rk - r(n,k)): zero exactly when G = r*F satisfies
// F(n+1,k) - F(n,k) = G(n,k+1) - G(n,k), after dividing through by F(n,k).
RationalFunction verify_pair(const HyperTerm& f, const RationalFunction& r);

// A term with a certificate for which verify_pair vanishes.
class WZPair {
public:
    // Throws Error(NotAWZPair) if the residual is nonzero. Sources are kept for
    // reporting only; empty sources are replaced by canonical renderings.
    static WZPair make(HyperTerm f, RationalFunction r, std::string term_src = {}, std::string cert_src = {});

    const HyperTerm& term() const { return m_f; }
    const RationalFunction& certificate() const { return m_r; }
    const std::string& term_source() const { return m_term_src; }
    const std::string& cert_source() const { return m_cert_src; }

    // G(n,k) = r(n,k) * F(n,k) at a lattice point, as a function of x.
    RationalFunction g_at(LatticePoint p) const;

private:
    WZPair(HyperTerm f, RationalFunction r, std::string term_src, std::string cert_src)
        : m_f(std::move(f)), m_r(std::move(r)), m_term_src(std::move(term_src)), m_cert_src(std::move(cert_src))
    {
    }

    HyperTerm m_f;
    RationalFunction m_r;
    std::string m_term_src;
    std::string m_cert_src;
};

WZPair chaundy_bullard_pair();

struct NumericCheck {
    bool pass = false;
    std::size_t samples_checked = 0;
    // (x, n, k) of the first nonvanishing residual, with its value.
    std::optional<std::array<BigRational, 3>> witness;
    BigRational witness_value;
    std::string message;
};

// Evaluates the divided residual factor by factor at `samples` random rational
// points. Points where any factor is singular are redrawn, up to a cap.
NumericCheck verify_pair_numeric(const HyperTerm& f, const RationalFunction& r, std::size_t samples,
                                 std::uint64_t seed);

// r(n, 0) == 0, which forces G(j, 0) = 0 for every j. Throws Error(PoleHit).
bool check_boundary(const WZPair& pair);

// sum_{k=0}^{m} F(0, k).
RationalFunction initial_row_sum(const HyperTerm& f, unsigned m);

struct TelescopeResult {
    RationalFunction lhs;
    RationalFunction rhs;
    bool holds() const { return lhs == rhs; }
};

// lhs = sum_{k=0}^{m} F(n,k)
// rhs = sum_{j=0}^{n-1} [G(j,m+1) - G(j,0)] + sum_{k=0}^{m} F(0,k)
TelescopeResult telescope_check(const WZPair& pair, unsigned m, unsigned n);

struct PartialSumResult {
    RationalFunction sum;
    RationalFunction closed;
    bool holds() const { return sum == closed; }
};

// sum = sum_{k=0}^{m} F(n,k);
// closed = 1 - x^(m+1) * sum_{j=0}^{n} C(m+j, j) (1-x)^j.
PartialSumResult partial_sum_closed_form(const WZPair& pair, unsigned m, unsigned n);

struct ChaundyBullardParts {
    MultiPoly first;  // (1-x)^(n+1) sum_{k=0}^{m} C(n+k,k) x^k
    MultiPoly second; // x^(m+1) sum_{k=0}^{n} C(m+k,k) (1-x)^k
};

ChaundyBullardParts chaundy_bullard_parts(unsigned m, unsigned n);

// Expanded left side of the Chaundy-Bullard identity; equals 1.
MultiPoly chaundy_bullard(unsigned m, unsigned n);

struct ProofTrace {
    static constexpr int schema_version = 1;

    unsigned m = 0;
    unsigned n = 0;
    std::string term_src;
    std::string cert_src;
    // A step that raised an error leaves its value empty and records a failure.
    std::optional<RationalFunction> wz_residual;
    bool boundary = false;
    std::optional<RationalFunction> initial_row_got;
    RationalFunction initial_row_expected;
    std::optional<RationalFunction> telescope_lhs;
    std::optional<RationalFunction> telescope_rhs;
    std::optional<RationalFunction> partial_sum;
    std::optional<RationalFunction> partial_closed;
    std::optional<MultiPoly> final_identity;
    std::vector<std::string> failures;

    bool valid() const { return failures.empty(); }
};

// Replays the whole derivation for concrete (m, n). Every step runs even if an
// earlier one failed; each failure is listed.
ProofTrace build_proof_trace(unsigned m, unsigned n);
ProofTrace build_proof_trace(const HyperTerm& f, const RationalFunction& r, std::string term_src,
                             std::string cert_src, unsigned m, unsigned n);

} // namespace wz
