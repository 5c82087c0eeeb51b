#include "wz/cert_discovery.hpp"

#include <map>
#include <stdexcept>

#include "wz/linsolve.hpp"
#include "wz/wz_core.hpp"

namespace wz {

std::vector<Monomial> nk_monomials(unsigned d)
{
    std::vector<Monomial> out;
    for (unsigned total = 0; total <= d; ++total) {
        // Within one degree, ascending order puts smaller powers of n first.
        for (unsigned en = 0; en <= total; ++en) {
            out.emplace_back(0, en, total - en);
        }
    }
    return out;
}

Ansatz default_ansatz(const HyperTerm& f, unsigned degree, unsigned span)
{
    const MultiPoly x_free = poly_lcm(content_in(f.rn().den(), Var::x), content_in(f.rk().den(), Var::x));
    const MultiPoly base = squarefree_part(x_free);
    MultiPoly denominator = base;
    for (unsigned s = 1; s <= span; ++s) {
        denominator = poly_lcm(denominator, base.compose(Var::k, MultiPoly::var(Var::k) + MultiPoly(static_cast<long>(s))));
    }
    Ansatz a;
    a.degree_bound = degree + static_cast<unsigned>(denominator.total_degree() - base.total_degree());
    a.denominator = std::move(denominator);
    a.monomials = nk_monomials(a.degree_bound);
    return a;
}

DiscoveryResult discover(const HyperTerm& f, const Ansatz& ansatz)
{
    const MultiPoly k_plus_1 = MultiPoly::var(Var::k) + MultiPoly(1);
    const MultiPoly& v = ansatz.denominator;
    const MultiPoly v1 = v.compose(Var::k, k_plus_1);
    const MultiPoly& a = f.rn().num();
    const MultiPoly& b = f.rn().den();
    const MultiPoly& c = f.rk().num();
    const MultiPoly& d = f.rk().den();

    // Residual times b*d*v*v1 is p0 + sum_i c_i * p_i.
    const MultiPoly p0 = (a - b) * d * v * v1;
    const MultiPoly cbv = c * b * v;
    const MultiPoly v1bd = v1 * b * d;
    std::vector<MultiPoly> columns;
    columns.reserve(ansatz.monomials.size());
    for (const auto& m : ansatz.monomials) {
        const MultiPoly mono = MultiPoly::monomial(m);
        columns.push_back(mono * v1bd - mono.compose(Var::k, k_plus_1) * cbv);
    }

    std::map<Monomial, std::size_t> row_of;
    const auto index = [&row_of](const MultiPoly& p) {
        for (const auto& t : p.terms()) {
            row_of.try_emplace(t.mono, 0);
        }
    };
    index(p0);
    for (const auto& col : columns) {
        index(col);
    }
    std::size_t next = 0;
    for (auto& [m, i] : row_of) {
        i = next++;
    }

    RationalMatrix matrix(row_of.size(), std::vector<BigRational>(columns.size()));
    std::vector<BigRational> rhs(row_of.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        for (const auto& t : columns[j].terms()) {
            matrix[row_of.at(t.mono)][j] = t.coef;
        }
    }
    for (const auto& t : p0.terms()) {
        rhs[row_of.at(t.mono)] = -t.coef;
    }

    DiscoveryResult out;
    out.unknowns = columns.size();
    out.equations = row_of.size();
    const auto solution = linsolve(matrix, rhs);
    if (!solution) {
        out.message = "no certificate with numerator degree <= " + std::to_string(ansatz.degree_bound) +
                      " over denominator " + v.to_string() + "; try a larger degree or shift span";
        return out;
    }
    std::vector<PolyTerm> terms;
    for (std::size_t j = 0; j < solution->size(); ++j) {
        terms.push_back({ansatz.monomials[j], (*solution)[j]});
    }
    RationalFunction cert = rf_normalize(MultiPoly::from_terms(std::move(terms)), v);
    if (!verify_pair(f, cert).is_zero()) {
        throw std::logic_error("discovered certificate fails verification: " + cert.to_string());
    }
    out.message = "certificate " + cert.to_string();
    out.certificate = std::move(cert);
    return out;
}

} // namespace wz
