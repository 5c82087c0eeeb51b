#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wz/hyperterm.hpp"

namespace wz {

// Candidate certificate shape R = u(n,k) / denominator, where u ranges over
// rational combinations of `monomials`.
struct Ansatz {
    MultiPoly denominator;
    unsigned degree_bound = 0;
    // Every (n,k)-monomial of total degree <= degree_bound, ascending.
    std::vector<Monomial> monomials;
};

// Denominator: the distinct x-free irreducible factors of the denominators of
// rn and rk, together with their shifts k -> k + 1, ..., k + span. The
// numerator bound is `degree` plus the degree those extra shifted factors add,
// so widening the span never loses a certificate found at a smaller span.
Ansatz default_ansatz(const HyperTerm& f, unsigned degree, unsigned span);

// All (n,k)-monomials of total degree <= d in ascending canonical order.
std::vector<Monomial> nk_monomials(unsigned d);

struct DiscoveryResult {
    std::optional<RationalFunction> certificate;
    std::size_t unknowns = 0;
    std::size_t equations = 0;
    std::string message;

    bool found() const { return certificate.has_value(); }
};

// Solves for the numerator coefficients that make
//   (rn - 1) - (R(n,k+1) rk - R(n,k))
// vanish identically. A returned certificate always passes verify_pair.
DiscoveryResult discover(const HyperTerm& f, const Ansatz& ansatz);

} // namespace wz
