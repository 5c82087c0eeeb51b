#include "wz/multi_poly.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>

#include "wz/errors.hpp"

namespace wz {

Monomial Monomial::operator*(const Monomial& other) const
{
    Monomial r;
    for (std::size_t i = 0; i < 3; ++i) {
        const std::uint64_t e = std::uint64_t{m_exp[i]} + other.m_exp[i];
        if (e > std::numeric_limits<std::uint32_t>::max()) {
            throw std::overflow_error("monomial exponent overflow");
        }
        r.m_exp[i] = static_cast<std::uint32_t>(e);
    }
    return r;
}

std::string Monomial::to_string() const
{
    std::string out;
    for (Var v : vars_by_precedence) {
        const auto e = (*this)[v];
        if (e == 0) {
            continue;
        }
        if (!out.empty()) {
            out += '*';
        }
        out += var_name(v);
        if (e > 1) {
            out += '^';
            out += std::to_string(e);
        }
    }
    return out.empty() ? "1" : out;
}

MultiPoly::MultiPoly(const BigRational& c)
{
    if (!c.is_zero()) {
        m_terms.push_back({Monomial{}, c});
    }
}

MultiPoly MultiPoly::var(Var v)
{
    return monomial(Monomial::of(v));
}

MultiPoly MultiPoly::monomial(const Monomial& m, const BigRational& c)
{
    MultiPoly p;
    if (!c.is_zero()) {
        p.m_terms.push_back({m, c});
    }
    return p;
}

MultiPoly MultiPoly::from_terms(std::vector<PolyTerm> terms)
{
    std::sort(terms.begin(), terms.end(), [](const PolyTerm& a, const PolyTerm& b) { return a.mono > b.mono; });
    MultiPoly p;
    for (auto& t : terms) {
        if (!p.m_terms.empty() && p.m_terms.back().mono == t.mono) {
            p.m_terms.back().coef += t.coef;
        } else {
            if (!p.m_terms.empty() && p.m_terms.back().coef.is_zero()) {
                p.m_terms.pop_back();
            }
            p.m_terms.push_back(std::move(t));
        }
    }
    if (!p.m_terms.empty() && p.m_terms.back().coef.is_zero()) {
        p.m_terms.pop_back();
    }
    return p;
}

BigRational MultiPoly::constant_value() const
{
    if (m_terms.empty()) {
        return BigRational(0);
    }
    return m_terms.back().mono.is_one() ? m_terms.back().coef : BigRational(0);
}

long MultiPoly::total_degree() const
{
    return m_terms.empty() ? -1 : static_cast<long>(m_terms.front().mono.degree());
}

long MultiPoly::degree_in(Var v) const
{
    if (m_terms.empty()) {
        return -1;
    }
    long d = 0;
    for (const auto& t : m_terms) {
        d = std::max<long>(d, t.mono[v]);
    }
    return d;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(Var v) const
{
    std::vector<std::vector<PolyTerm>> buckets(static_cast<std::size_t>(std::max<long>(degree_in(v) + 1, 0)));
    for (const auto& t : m_terms) {
        Monomial rest = t.mono;
        const auto e = rest[v];
        rest[v] = 0;
        // Terms stay in decreasing order within each bucket since removing a
        // fixed power of v preserves the relative order of equal-e monomials.
        buckets[e].push_back({rest, t.coef});
    }
    std::vector<MultiPoly> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) {
        MultiPoly c;
        c.m_terms = std::move(b);
        out.push_back(std::move(c));
    }
    return out;
}

MultiPoly MultiPoly::from_coefficients(Var v, const std::vector<MultiPoly>& coeffs)
{
    std::vector<PolyTerm> terms;
    for (std::size_t e = 0; e < coeffs.size(); ++e) {
        for (const auto& t : coeffs[e].m_terms) {
            Monomial m = t.mono;
            m[v] += static_cast<std::uint32_t>(e);
            terms.push_back({m, t.coef});
        }
    }
    return from_terms(std::move(terms));
}

BigRational MultiPoly::coefficient(const Monomial& m) const
{
    auto it = std::lower_bound(m_terms.begin(), m_terms.end(), m,
                               [](const PolyTerm& t, const Monomial& key) { return t.mono > key; });
    if (it != m_terms.end() && it->mono == m) {
        return it->coef;
    }
    return BigRational(0);
}

MultiPoly MultiPoly::monic() const
{
    if (is_zero()) {
        return *this;
    }
    const BigRational lc = leading_coef();
    if (lc.is_one()) {
        return *this;
    }
    return *this * lc.inverse();
}

MultiPoly MultiPoly::pow(unsigned e) const
{
    MultiPoly result(1);
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1U) {
            result *= base;
        }
        e >>= 1U;
        if (e > 0) {
            base *= base;
        }
    }
    return result;
}

BigRational MultiPoly::evaluate(const std::array<BigRational, 3>& point) const
{
    std::array<std::vector<BigRational>, 3> powers;
    for (Var v : all_vars) {
        auto& table = powers[var_index(v)];
        const long d = degree_in(v);
        table.reserve(static_cast<std::size_t>(std::max<long>(d + 1, 1)));
        table.emplace_back(1);
        for (long i = 1; i <= d; ++i) {
            table.push_back(table.back() * point[var_index(v)]);
        }
    }
    BigRational sum;
    for (const auto& t : m_terms) {
        BigRational term = t.coef;
        for (Var v : all_vars) {
            const auto e = t.mono[v];
            if (e > 0) {
                term *= powers[var_index(v)][e];
            }
        }
        sum += term;
    }
    return sum;
}

MultiPoly MultiPoly::compose(Var v, const MultiPoly& value) const
{
    if (!contains(v)) {
        return *this;
    }
    const auto coeffs = coefficients_in(v);
    MultiPoly result = coeffs.back();
    for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
        result *= value;
        result += coeffs[i];
    }
    return result;
}

namespace {

// Merges two canonical term lists; sign = +1 for addition, -1 for subtraction.
std::vector<PolyTerm> merge_terms(const std::vector<PolyTerm>& a, const std::vector<PolyTerm>& b, int sign)
{
    std::vector<PolyTerm> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].mono > b[j].mono)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].mono > a[i].mono) {
            out.push_back({b[j].mono, sign > 0 ? b[j].coef : -b[j].coef});
            ++j;
        } else {
            BigRational c = sign > 0 ? a[i].coef + b[j].coef : a[i].coef - b[j].coef;
            if (!c.is_zero()) {
                out.push_back({a[i].mono, std::move(c)});
            }
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs)
{
    m_terms = merge_terms(m_terms, rhs.m_terms, +1);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs)
{
    m_terms = merge_terms(m_terms, rhs.m_terms, -1);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs)
{
    *this = *this * rhs;
    return *this;
}

MultiPoly& MultiPoly::operator*=(const BigRational& rhs)
{
    if (rhs.is_zero()) {
        m_terms.clear();
        return *this;
    }
    for (auto& t : m_terms) {
        t.coef *= rhs;
    }
    return *this;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b)
{
    MultiPoly r;
    r.m_terms = merge_terms(a.m_terms, b.m_terms, +1);
    return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b)
{
    MultiPoly r;
    r.m_terms = merge_terms(a.m_terms, b.m_terms, -1);
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
{
    if (a.is_zero() || b.is_zero()) {
        return MultiPoly{};
    }
    if (a.size() == 1 || b.size() == 1) {
        const auto& single = a.size() == 1 ? a : b;
        const auto& other = a.size() == 1 ? b : a;
        const auto& [m, c] = single.m_terms.front();
        MultiPoly r;
        r.m_terms.reserve(other.size());
        // Multiplying by a monomial preserves the order.
        for (const auto& t : other.m_terms) {
            r.m_terms.push_back({t.mono * m, t.coef * c});
        }
        return r;
    }
    std::map<Monomial, BigRational, std::greater<>> acc;
    for (const auto& ta : a.m_terms) {
        for (const auto& tb : b.m_terms) {
            auto [it, inserted] = acc.try_emplace(ta.mono * tb.mono);
            if (inserted) {
                it->second = ta.coef * tb.coef;
            } else {
                it->second += ta.coef * tb.coef;
            }
        }
    }
    MultiPoly r;
    r.m_terms.reserve(acc.size());
    for (auto& [m, c] : acc) {
        if (!c.is_zero()) {
            r.m_terms.push_back({m, std::move(c)});
        }
    }
    return r;
}

MultiPoly MultiPoly::operator-() const
{
    MultiPoly r = *this;
    for (auto& t : r.m_terms) {
        t.coef = -t.coef;
    }
    return r;
}

std::string MultiPoly::to_string() const
{
    if (m_terms.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& t : m_terms) {
        const bool negative = t.coef.sign() < 0;
        if (first) {
            if (negative) {
                out += '-';
            }
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const BigRational mag = t.coef.abs();
        if (t.mono.is_one()) {
            out += mag.to_string();
        } else if (mag.is_one()) {
            out += t.mono.to_string();
        } else {
            out += mag.to_string();
            out += '*';
            out += t.mono.to_string();
        }
    }
    return out;
}

MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, PolyOp op)
{
    switch (op) {
    case PolyOp::add: return a + b;
    case PolyOp::sub: return a - b;
    case PolyOp::mul: return a * b;
    }
    throw std::invalid_argument("unknown polynomial operation");
}

std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b)
{
    if (b.is_zero()) {
        throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    }
    if (a.is_zero()) {
        return MultiPoly{};
    }
    if (b.is_constant()) {
        return a * b.constant_value().inverse();
    }
    const PolyTerm& lead = b.leading();
    const BigRational inv_lc = lead.coef.inverse();
    std::vector<PolyTerm> quotient;
    std::map<Monomial, BigRational, std::greater<>> rem;
    for (const auto& t : a.terms()) {
        rem.emplace(t.mono, t.coef);
    }
    while (!rem.empty()) {
        const auto top = rem.begin();
        if (!lead.mono.divides(top->first)) {
            return std::nullopt;
        }
        PolyTerm q{top->first / lead.mono, top->second * inv_lc};
        rem.erase(top);
        // The leading product cancels exactly; subtract the rest of q * b.
        for (std::size_t i = 1; i < b.size(); ++i) {
            const auto& bt = b.terms()[i];
            auto [it, inserted] = rem.try_emplace(bt.mono * q.mono);
            it->second -= bt.coef * q.coef;
            if (it->second.is_zero()) {
                rem.erase(it);
            }
        }
        quotient.push_back(std::move(q));
    }
    // Quotient terms were produced in strictly decreasing order.
    return MultiPoly::from_terms(std::move(quotient));
}

namespace {

using UPoly = std::vector<MultiPoly>; // coefficient of v^i at index i

void trim(UPoly& p)
{
    while (!p.empty() && p.back().is_zero()) {
        p.pop_back();
    }
}

long udeg(const UPoly& p) { return static_cast<long>(p.size()) - 1; }

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b);

MultiPoly exact(const MultiPoly& a, const MultiPoly& b)
{
    auto q = divide_exact(a, b);
    if (!q) {
        throw std::logic_error("expected exact polynomial division");
    }
    return std::move(*q);
}

MultiPoly content_of(const UPoly& p)
{
    MultiPoly g;
    for (const auto& c : p) {
        if (c.is_zero()) {
            continue;
        }
        g = g.is_zero() ? c.monic() : gcd_rec(g, c);
        if (g.is_constant()) {
            return MultiPoly(1);
        }
    }
    return g;
}

// lc(B)^(deg A - deg B + 1) * A mod B, as polynomials in the main variable.
UPoly pseudo_remainder(UPoly r, const UPoly& b)
{
    const long db = udeg(b);
    const MultiPoly& lcb = b.back();
    long remaining = udeg(r) - db + 1;
    while (!r.empty() && udeg(r) >= db) {
        const MultiPoly lcr = r.back();
        const auto shift = static_cast<std::size_t>(udeg(r) - db);
        for (auto& c : r) {
            c *= lcb;
        }
        for (std::size_t i = 0; i < b.size(); ++i) {
            r[shift + i] -= lcr * b[i];
        }
        trim(r);
        --remaining;
    }
    if (remaining > 0 && !r.empty()) {
        const MultiPoly scale = lcb.pow(static_cast<unsigned>(remaining));
        for (auto& c : r) {
            c *= scale;
        }
    }
    return r;
}

// gcd of univariate polynomials over Q, monic Euclid.
std::vector<BigRational> univariate_gcd(std::vector<BigRational> a, std::vector<BigRational> b)
{
    const auto trim_q = [](std::vector<BigRational>& p) {
        while (!p.empty() && p.back().is_zero()) {
            p.pop_back();
        }
    };
    const auto make_monic = [](std::vector<BigRational>& p) {
        const BigRational inv = p.back().inverse();
        for (auto& c : p) {
            c *= inv;
        }
    };
    trim_q(a);
    trim_q(b);
    if (a.size() < b.size()) {
        std::swap(a, b);
    }
    while (!b.empty()) {
        make_monic(b);
        while (a.size() >= b.size()) {
            const BigRational lc = a.back();
            const std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) {
                a[shift + i] -= lc * b[i];
            }
            a.pop_back();
            trim_q(a);
            if (a.empty()) {
                break;
            }
        }
        std::swap(a, b);
    }
    if (!a.empty()) {
        make_monic(a);
    }
    return a;
}

// Specializes every variable other than v to a fixed integer. If both leading
// coefficients survive and the univariate images are coprime, the inputs are
// coprime too: the true gcd keeps its degree in v under the specialization.
bool coprime_by_image(const UPoly& a, const UPoly& b, Var v)
{
    std::array<BigRational, 3> point{BigRational(17), BigRational(31), BigRational(47)};
    for (int attempt = 0; attempt < 3; ++attempt) {
        point[var_index(v)] = BigRational(0);
        const auto image = [&point](const UPoly& p) {
            std::vector<BigRational> out;
            out.reserve(p.size());
            for (const auto& c : p) {
                out.push_back(c.evaluate(point));
            }
            return out;
        };
        const auto ia = image(a);
        const auto ib = image(b);
        if (!ia.back().is_zero() && !ib.back().is_zero()) {
            return univariate_gcd(ia, ib).size() == 1;
        }
        for (auto& c : point) {
            c += BigRational(attempt + 2);
        }
    }
    return false;
}

// gcd of two polynomials that are primitive with respect to v.
MultiPoly primitive_gcd(const MultiPoly& a, const MultiPoly& b, Var v)
{
    UPoly A = a.coefficients_in(v);
    UPoly B = b.coefficients_in(v);
    const bool field_coeffs = std::all_of(A.begin(), A.end(), [](const MultiPoly& c) { return c.is_constant(); }) &&
                              std::all_of(B.begin(), B.end(), [](const MultiPoly& c) { return c.is_constant(); });
    if (field_coeffs) {
        std::vector<BigRational> qa, qb;
        for (const auto& c : A) {
            qa.push_back(c.constant_value());
        }
        for (const auto& c : B) {
            qb.push_back(c.constant_value());
        }
        const auto g = univariate_gcd(std::move(qa), std::move(qb));
        UPoly G;
        for (const auto& c : g) {
            G.emplace_back(c);
        }
        return MultiPoly::from_coefficients(v, G);
    }

    if (coprime_by_image(A, B, v)) {
        return MultiPoly(1);
    }

    // Subresultant remainder sequence over Q[remaining variables].
    if (udeg(A) < udeg(B)) {
        std::swap(A, B);
    }
    MultiPoly g(1);
    MultiPoly h(1);
    while (true) {
        const long delta = udeg(A) - udeg(B);
        UPoly R = pseudo_remainder(A, B);
        if (R.empty()) {
            break;
        }
        if (udeg(R) == 0) {
            return MultiPoly(1);
        }
        A = std::move(B);
        const MultiPoly divisor = g * h.pow(static_cast<unsigned>(delta));
        for (auto& c : R) {
            c = exact(c, divisor);
        }
        B = std::move(R);
        g = A.back();
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {
            h = exact(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
        }
    }
    const MultiPoly cont = content_of(B);
    for (auto& c : B) {
        c = exact(c, cont);
    }
    return MultiPoly::from_coefficients(v, B).monic();
}

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b)
{
    if (a.is_zero()) {
        return b.monic();
    }
    if (b.is_zero()) {
        return a.monic();
    }
    if (a.is_constant() || b.is_constant()) {
        return MultiPoly(1);
    }
    if (a.monic() == b.monic()) {
        return a.monic();
    }
    const auto& small = a.size() <= b.size() ? a : b;
    const auto& large = a.size() <= b.size() ? b : a;
    if (small.total_degree() <= large.total_degree() && divide_exact(large, small)) {
        return small.monic();
    }

    // A variable present in only one input cannot occur in the gcd.
    for (Var v : vars_by_precedence) {
        if (a.contains(v) && !b.contains(v)) {
            return gcd_rec(content_of(a.coefficients_in(v)), b);
        }
        if (b.contains(v) && !a.contains(v)) {
            return gcd_rec(a, content_of(b.coefficients_in(v)));
        }
    }
    // Shortest remainder sequence: the shared variable of smallest degree.
    Var main = Var::x;
    long best = -1;
    for (Var v : vars_by_precedence) {
        const long d = std::max(a.degree_in(v), b.degree_in(v));
        if (d > 0 && (best < 0 || d < best)) {
            best = d;
            main = v;
        }
    }
    if (best < 0) {
        return MultiPoly(1);
    }
    const MultiPoly ca = content_of(a.coefficients_in(main));
    const MultiPoly cb = content_of(b.coefficients_in(main));
    const MultiPoly pa = exact(a, ca);
    const MultiPoly pb = exact(b, cb);
    const MultiPoly c = gcd_rec(ca, cb);
    return (c * primitive_gcd(pa, pb, main)).monic();
}

} // namespace

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b)
{
    if (a.is_zero() && b.is_zero()) {
        throw Error(ErrorCode::BothZero, "gcd(0, 0) is undefined");
    }
    return gcd_rec(a, b).monic();
}

MultiPoly poly_lcm(const MultiPoly& a, const MultiPoly& b)
{
    if (a.is_zero() || b.is_zero()) {
        throw Error(ErrorCode::BothZero, "lcm of a zero polynomial");
    }
    return (exact(a, poly_gcd(a, b)) * b).monic();
}

MultiPoly derivative(const MultiPoly& p, Var v)
{
    std::vector<PolyTerm> terms;
    for (const auto& t : p.terms()) {
        const auto e = t.mono[v];
        if (e == 0) {
            continue;
        }
        Monomial m = t.mono;
        m[v] = e - 1;
        terms.push_back({m, t.coef * BigRational(static_cast<long>(e))});
    }
    return MultiPoly::from_terms(std::move(terms));
}

MultiPoly squarefree_part(const MultiPoly& p)
{
    if (p.is_constant()) {
        return MultiPoly(1);
    }
    // A repeated factor divides every partial derivative; a simple factor
    // cannot divide the derivative in a variable it depends on.
    MultiPoly g = p;
    for (Var v : all_vars) {
        if (p.contains(v)) {
            g = poly_gcd(g, derivative(p, v));
        }
    }
    return exact(p, g).monic();
}

MultiPoly content_in(const MultiPoly& p, Var v)
{
    if (p.is_zero()) {
        return MultiPoly{};
    }
    return content_of(p.coefficients_in(v));
}

} // namespace wz
