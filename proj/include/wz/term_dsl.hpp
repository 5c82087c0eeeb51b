#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wz/hyperterm.hpp"

// Textual input language for terms and certificates.
//
//   term     := factor { "*" factor }
//   factor   := "-" factor
//             | "binom" "(" affine "," affine ")"
//             | base [ "^" exponent ]
//             | rational
//   base     := "x" | "(" polynomial in x ")" | integer
//   exponent := integer | "n" | "k" | "-" integer | "(" affine ")"
//   affine   := integer-linear form in n and k
//
// A certificate is an ordinary rational expression in n, k, x built from
// + - * / ^ (integer exponents), integer literals and parentheses.
namespace wz::dsl {

// constant + n_coef * n + k_coef * k
struct Affine {
    long long constant = 0;
    long long n_coef = 0;
    long long k_coef = 0;

    bool is_constant() const { return n_coef == 0 && k_coef == 0; }
    MultiPoly to_poly() const;

    friend bool operator==(const Affine&, const Affine&) = default;
};

struct BinomFactor {
    Affine top;
    Affine bottom;
};

// base(x)^exponent
struct PowerFactor {
    MultiPoly base;
    Affine exponent;
};

struct ConstFactor {
    BigRational value;
};

using Factor = std::variant<BinomFactor, PowerFactor, ConstFactor>;

struct TermExpr {
    std::vector<Factor> factors;
};

// Throws ParseError with code SyntaxError, UnsupportedShift,
// NonAffineExponent or ZeroDenominator.
TermExpr parse_term(std::string_view src);

// Throws Error(IncompatibleShifts) or Error(DegenerateBinomial).
HyperTerm compile_factor(const Factor& factor);
HyperTerm compile_term(const TermExpr& expr);

// parse_term followed by compile_term.
HyperTerm term_from_source(std::string_view src);

// Throws ParseError with code SyntaxError or ZeroDenominator.
RationalFunction parse_cert(std::string_view src);

} // namespace wz::dsl
