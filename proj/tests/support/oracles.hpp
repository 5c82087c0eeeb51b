#pragma once

// Reference implementations that share no code with the kernel beyond GMP.

#include <gmpxx.h>

#include <vector>

#include "wz/multi_poly.hpp"

namespace oracle {

// Dense univariate polynomial in x; coefficient i multiplies x^i.
using Dense = std::vector<mpq_class>;

inline mpz_class pascal_binomial(unsigned n, unsigned k)
{
    if (k > n) {
        return 0;
    }
    std::vector<mpz_class> row{1};
    for (unsigned i = 1; i <= n; ++i) {
        std::vector<mpz_class> next(i + 1);
        next[0] = next[i] = 1;
        for (unsigned j = 1; j < i; ++j) {
            next[j] = row[j - 1] + row[j];
        }
        row.swap(next);
    }
    return row[k];
}

inline void trim(Dense& p)
{
    while (!p.empty() && p.back() == 0) {
        p.pop_back();
    }
}

inline Dense mul(const Dense& a, const Dense& b)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    Dense out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    trim(out);
    return out;
}

inline Dense add(Dense a, const Dense& b, int sign = 1)
{
    if (a.size() < b.size()) {
        a.resize(b.size());
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        a[i] += sign * b[i];
    }
    trim(a);
    return a;
}

inline Dense scale(Dense a, const mpq_class& c)
{
    for (auto& v : a) {
        v *= c;
    }
    trim(a);
    return a;
}

// Repeated multiplication, no squaring.
inline Dense power(const Dense& p, unsigned e)
{
    Dense out{1};
    for (unsigned i = 0; i < e; ++i) {
        out = mul(out, p);
    }
    return out;
}

inline const Dense one_minus_x{1, -1};
inline const Dense x_poly{0, 1};

// C(n+k,k) x^k (1-x)^(n+1)
inline Dense chaundy_bullard_term(unsigned n, unsigned k)
{
    return scale(mul(power(x_poly, k), power(one_minus_x, n + 1)), mpq_class(pascal_binomial(n + k, k)));
}

inline mpq_class eval(const Dense& p, const mpq_class& x)
{
    mpq_class acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

inline wz::MultiPoly to_poly(const Dense& p)
{
    std::vector<wz::PolyTerm> terms;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] != 0) {
            terms.push_back({wz::Monomial::of(wz::Var::x, static_cast<std::uint32_t>(i)),
                             wz::BigRational(wz::BigInt(p[i].get_num()), wz::BigInt(p[i].get_den()))});
        }
    }
    return wz::MultiPoly::from_terms(std::move(terms));
}

} // namespace oracle
