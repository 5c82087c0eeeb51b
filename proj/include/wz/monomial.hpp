#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>

namespace wz {

// The fixed variable set of the whole library.
enum class Var : std::uint8_t { x = 0, n = 1, k = 2 };

inline constexpr std::array<Var, 3> all_vars{Var::x, Var::n, Var::k};

// Variables by decreasing precedence in the canonical order.
inline constexpr std::array<Var, 3> vars_by_precedence{Var::n, Var::k, Var::x};

constexpr char var_name(Var v)
{
    switch (v) {
    case Var::x: return 'x';
    case Var::n: return 'n';
    case Var::k: return 'k';
    }
    return '?';
}

constexpr std::size_t var_index(Var v) { return static_cast<std::size_t>(v); }

// x^e_x * n^e_n * k^e_k. Ordered graded-lexicographically with n > k > x.
class Monomial {
public:
    constexpr Monomial() = default;
    constexpr Monomial(std::uint32_t ex, std::uint32_t en, std::uint32_t ek) : m_exp{ex, en, ek} {}

    static constexpr Monomial of(Var v, std::uint32_t e = 1)
    {
        Monomial m;
        m.m_exp[var_index(v)] = e;
        return m;
    }

    constexpr std::uint32_t operator[](Var v) const { return m_exp[var_index(v)]; }
    constexpr std::uint32_t& operator[](Var v) { return m_exp[var_index(v)]; }

    constexpr std::uint64_t degree() const
    {
        return std::uint64_t{m_exp[0]} + m_exp[1] + m_exp[2];
    }

    constexpr bool is_one() const { return m_exp[0] == 0 && m_exp[1] == 0 && m_exp[2] == 0; }

    constexpr bool divides(const Monomial& other) const
    {
        return m_exp[0] <= other.m_exp[0] && m_exp[1] <= other.m_exp[1] && m_exp[2] <= other.m_exp[2];
    }

    // Throws std::overflow_error when an exponent leaves 32 bits.
    Monomial operator*(const Monomial& other) const;

    // Caller guarantees divides(other) is true for `other / *this`.
    constexpr Monomial operator/(const Monomial& d) const
    {
        return Monomial(m_exp[0] - d.m_exp[0], m_exp[1] - d.m_exp[1], m_exp[2] - d.m_exp[2]);
    }

    friend constexpr bool operator==(const Monomial&, const Monomial&) = default;

    friend constexpr std::strong_ordering operator<=>(const Monomial& a, const Monomial& b)
    {
        if (auto c = a.degree() <=> b.degree(); c != 0) {
            return c;
        }
        if (auto c = a[Var::n] <=> b[Var::n]; c != 0) {
            return c;
        }
        if (auto c = a[Var::k] <=> b[Var::k]; c != 0) {
            return c;
        }
        return a[Var::x] <=> b[Var::x];
    }

    // "n^2*k*x"; "1" for the unit monomial.
    std::string to_string() const;

private:
    std::array<std::uint32_t, 3> m_exp{0, 0, 0};
};

} // namespace wz
