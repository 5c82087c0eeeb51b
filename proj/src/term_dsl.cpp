#include "wz/term_dsl.hpp"

#include <cctype>
#include <limits>

#include "wz/errors.hpp"

namespace wz::dsl {

namespace {

// Bound on exponents and affine constants; keeps a typo from requesting a
// polynomial of astronomical degree.
constexpr long long max_literal = 10000;

enum class Tok { integer, ident, lparen, rparen, comma, plus, minus, star, slash, caret, end };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

std::string describe(const Token& t)
{
    return t.kind == Tok::end ? "end of input" : "'" + t.text + "'";
}

std::vector<Token> lex(std::string_view src)
{
    std::vector<Token> out;
    std::size_t line = 1, column = 1;
    std::size_t i = 0;
    const auto advance = [&](std::size_t count) {
        for (std::size_t j = 0; j < count; ++j) {
            if (src[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
            ++i;
        }
    };
    while (i < src.size()) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        Token t{Tok::end, std::string(1, c), line, column};
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) {
                ++j;
            }
            t.kind = Tok::integer;
            t.text = std::string(src.substr(i, j - i));
            out.push_back(t);
            advance(j - i);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) {
                ++j;
            }
            t.kind = Tok::ident;
            t.text = std::string(src.substr(i, j - i));
            out.push_back(t);
            advance(j - i);
            continue;
        }
        switch (c) {
        case '(': t.kind = Tok::lparen; break;
        case ')': t.kind = Tok::rparen; break;
        case ',': t.kind = Tok::comma; break;
        case '+': t.kind = Tok::plus; break;
        case '-': t.kind = Tok::minus; break;
        case '*': t.kind = Tok::star; break;
        case '/': t.kind = Tok::slash; break;
        case '^': t.kind = Tok::caret; break;
        default:
            throw ParseError(ErrorCode::SyntaxError, line, column, std::string("unexpected character '") + c + "'");
        }
        out.push_back(t);
        advance(1);
    }
    out.push_back(Token{Tok::end, "", line, column});
    return out;
}

long long checked_int(const Token& t)
{
    long long v = 0;
    for (char c : t.text) {
        if (__builtin_mul_overflow(v, 10LL, &v) || __builtin_add_overflow(v, static_cast<long long>(c - '0'), &v)) {
            throw ParseError(ErrorCode::SyntaxError, t.line, t.column, "integer literal too large");
        }
    }
    return v;
}

class Parser {
public:
    explicit Parser(std::string_view src) : m_tokens(lex(src)) {}

    TermExpr term()
    {
        TermExpr expr;
        factor(expr);
        while (peek().kind == Tok::star) {
            next();
            factor(expr);
        }
        expect_end("'*' or end of input");
        return expr;
    }

    RationalFunction cert()
    {
        RationalFunction r = rf_expr();
        expect_end("an operator or end of input");
        return r;
    }

private:
    const Token& peek() const { return m_tokens[m_pos]; }
    const Token& next() { return m_tokens[m_pos++]; }

    [[noreturn]] void fail(const Token& t, const std::string& expected, ErrorCode code = ErrorCode::SyntaxError)
    {
        throw ParseError(code, t.line, t.column, "expected " + expected + ", found " + describe(t));
    }

    const Token& expect(Tok kind, const std::string& what)
    {
        if (peek().kind != kind) {
            fail(peek(), what);
        }
        return next();
    }

    void expect_end(const std::string& expected)
    {
        if (peek().kind != Tok::end) {
            fail(peek(), expected);
        }
    }

    // ---- certificate / rational expressions ----

    RationalFunction rf_expr()
    {
        RationalFunction acc = rf_product();
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            const bool minus = next().kind == Tok::minus;
            RationalFunction rhs = rf_product();
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    RationalFunction rf_product()
    {
        RationalFunction acc = rf_unary();
        while (peek().kind == Tok::star || peek().kind == Tok::slash) {
            const Token op = next();
            RationalFunction rhs = rf_unary();
            if (op.kind == Tok::star) {
                acc *= rhs;
            } else {
                if (rhs.is_zero()) {
                    throw ParseError(ErrorCode::ZeroDenominator, op.line, op.column, "division by an expression that is identically zero");
                }
                acc /= rhs;
            }
        }
        return acc;
    }

    RationalFunction rf_unary()
    {
        if (peek().kind == Tok::minus) {
            next();
            return -rf_unary();
        }
        if (peek().kind == Tok::plus) {
            next();
            return rf_unary();
        }
        return rf_power();
    }

    RationalFunction rf_power()
    {
        RationalFunction base = rf_primary();
        if (peek().kind != Tok::caret) {
            return base;
        }
        const Token caret = next();
        bool negative = false;
        if (peek().kind == Tok::minus) {
            next();
            negative = true;
        }
        const Token& e = expect(Tok::integer, "an integer exponent");
        const long long value = checked_int(e);
        if (value > max_literal) {
            throw ParseError(ErrorCode::SyntaxError, e.line, e.column, "exponent too large");
        }
        if (negative && base.is_zero()) {
            throw ParseError(ErrorCode::ZeroDenominator, caret.line, caret.column, "negative power of zero");
        }
        return base.pow(negative ? -value : value);
    }

    RationalFunction rf_primary()
    {
        const Token& t = peek();
        switch (t.kind) {
        case Tok::integer:
            next();
            return RationalFunction(BigRational(BigInt(t.text, 10)));
        case Tok::ident:
            if (t.text == "x" || t.text == "n" || t.text == "k") {
                next();
                const Var v = t.text == "x" ? Var::x : (t.text == "n" ? Var::n : Var::k);
                return RationalFunction::var(v);
            }
            fail(t, "a variable (n, k, x), an integer or '('");
        case Tok::lparen: {
            next();
            RationalFunction inner = rf_expr();
            expect(Tok::rparen, "')'");
            return inner;
        }
        default:
            fail(t, "a variable (n, k, x), an integer or '('");
        }
    }

    // ---- affine integer forms ----

    Affine affine()
    {
        Affine acc;
        bool negate = false;
        if (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            negate = next().kind == Tok::minus;
        }
        Affine first = affine_product();
        acc = negate ? scale(first, -1, peek()) : first;
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            const Token op = next();
            Affine rhs = affine_product();
            acc = add(acc, op.kind == Tok::minus ? scale(rhs, -1, op) : rhs, op);
        }
        if (peek().kind == Tok::caret || peek().kind == Tok::slash) {
            fail(peek(), "an integer-linear form in n and k", ErrorCode::NonAffineExponent);
        }
        return acc;
    }

    Affine affine_product()
    {
        Affine acc = affine_primary();
        while (peek().kind == Tok::star) {
            const Token op = next();
            Affine rhs = affine_primary();
            if (!acc.is_constant() && !rhs.is_constant()) {
                throw ParseError(ErrorCode::NonAffineExponent, op.line, op.column,
                                 "product of two non-constant forms is not affine");
            }
            acc = acc.is_constant() ? scale(rhs, acc.constant, op) : scale(acc, rhs.constant, op);
        }
        return acc;
    }

    Affine affine_primary()
    {
        const Token& t = peek();
        if (t.kind == Tok::integer) {
            next();
            return Affine{checked_int(t), 0, 0};
        }
        if (t.kind == Tok::ident && t.text == "n") {
            next();
            return Affine{0, 1, 0};
        }
        if (t.kind == Tok::ident && t.text == "k") {
            next();
            return Affine{0, 0, 1};
        }
        if (t.kind == Tok::ident && t.text == "x") {
            fail(t, "an integer-linear form in n and k", ErrorCode::NonAffineExponent);
        }
        if (t.kind == Tok::lparen) {
            next();
            Affine inner = affine();
            expect(Tok::rparen, "')'");
            return inner;
        }
        fail(t, "an integer, n, k or '('");
    }

    static long long checked(long long v, const Token& at)
    {
        if (v > max_literal * 8 || v < -max_literal * 8) {
            throw ParseError(ErrorCode::SyntaxError, at.line, at.column, "integer coefficient too large");
        }
        return v;
    }

    static Affine scale(const Affine& a, long long s, const Token& at)
    {
        long long c = 0, n = 0, k = 0;
        if (__builtin_mul_overflow(a.constant, s, &c) || __builtin_mul_overflow(a.n_coef, s, &n) ||
            __builtin_mul_overflow(a.k_coef, s, &k)) {
            throw ParseError(ErrorCode::SyntaxError, at.line, at.column, "integer coefficient too large");
        }
        return Affine{checked(c, at), checked(n, at), checked(k, at)};
    }

    static Affine add(const Affine& a, const Affine& b, const Token& at)
    {
        return Affine{checked(a.constant + b.constant, at), checked(a.n_coef + b.n_coef, at),
                      checked(a.k_coef + b.k_coef, at)};
    }

    // ---- term factors ----

    Affine exponent()
    {
        const Token& t = peek();
        Affine e;
        if (t.kind == Tok::lparen) {
            next();
            e = affine();
            expect(Tok::rparen, "')'");
        } else if (t.kind == Tok::minus) {
            next();
            e = Affine{-checked_int(expect(Tok::integer, "an integer exponent")), 0, 0};
        } else if (t.kind == Tok::integer || (t.kind == Tok::ident && (t.text == "n" || t.text == "k"))) {
            e = affine_primary();
        } else if (t.kind == Tok::ident && t.text == "x") {
            fail(t, "an integer-linear exponent in n and k", ErrorCode::NonAffineExponent);
        } else {
            fail(t, "an exponent: integer, n, k or '(' affine ')'");
        }
        if (peek().kind == Tok::caret) {
            fail(peek(), "'*' or end of input", ErrorCode::NonAffineExponent);
        }
        if (e.constant > max_literal || e.constant < -max_literal) {
            throw ParseError(ErrorCode::SyntaxError, t.line, t.column, "exponent too large");
        }
        return e;
    }

    void power_or_constant(TermExpr& expr, const MultiPoly& base, const Token& at)
    {
        if (peek().kind == Tok::caret) {
            next();
            if (base.is_zero()) {
                throw ParseError(ErrorCode::SyntaxError, at.line, at.column, "zero raised to a power");
            }
            expr.factors.push_back(PowerFactor{base, exponent()});
        } else if (base.is_constant()) {
            expr.factors.push_back(ConstFactor{base.constant_value()});
        } else {
            expr.factors.push_back(PowerFactor{base, Affine{1, 0, 0}});
        }
    }

    void factor(TermExpr& expr)
    {
        const Token t = peek();
        if (t.kind == Tok::minus) {
            next();
            expr.factors.push_back(ConstFactor{BigRational(-1)});
            factor(expr);
            return;
        }
        if (t.kind == Tok::ident && t.text == "binom") {
            next();
            expect(Tok::lparen, "'('");
            Affine top = affine();
            expect(Tok::comma, "','");
            Affine bottom = affine();
            expect(Tok::rparen, "')'");
            for (long long inc : {top.n_coef, top.k_coef, bottom.n_coef, bottom.k_coef}) {
                if (inc != 0 && inc != 1) {
                    throw ParseError(ErrorCode::UnsupportedShift, t.line, t.column,
                                     "binomial arguments may only grow by 0 or 1 per unit step of n or k");
                }
            }
            for (long long c : {top.constant, bottom.constant}) {
                if (c > max_literal || c < -max_literal) {
                    throw ParseError(ErrorCode::SyntaxError, t.line, t.column, "binomial constant too large");
                }
            }
            expr.factors.push_back(BinomFactor{top, bottom});
            return;
        }
        if (t.kind == Tok::ident && t.text == "x") {
            next();
            power_or_constant(expr, MultiPoly::var(Var::x), t);
            return;
        }
        if (t.kind == Tok::lparen) {
            next();
            const RationalFunction inner = rf_expr();
            expect(Tok::rparen, "')'");
            if (!inner.is_polynomial() || inner.contains(Var::n) || inner.contains(Var::k)) {
                throw ParseError(ErrorCode::SyntaxError, t.line, t.column,
                                 "parenthesized factor must be a polynomial in x");
            }
            power_or_constant(expr, inner.num(), t);
            return;
        }
        if (t.kind == Tok::integer) {
            next();
            BigRational value(BigInt(t.text, 10));
            if (peek().kind == Tok::slash) {
                const Token slash = next();
                const Token& d = expect(Tok::integer, "an integer denominator");
                const BigInt den(d.text, 10);
                if (den == 0) {
                    throw ParseError(ErrorCode::ZeroDenominator, slash.line, slash.column, "zero denominator");
                }
                value = BigRational(value.num(), den);
            }
            power_or_constant(expr, MultiPoly(value), t);
            return;
        }
        fail(t, "binom(...), x, a parenthesized polynomial in x, or a rational constant");
    }

    std::vector<Token> m_tokens;
    std::size_t m_pos = 0;
};

// Generalized C(a, b) for integer a and b >= 0.
BigRational binomial_value(long long a, long long b)
{
    if (b < 0) {
        return BigRational(0);
    }
    BigRational value(1);
    for (long long i = 0; i < b; ++i) {
        value *= BigRational(BigInt(static_cast<long>(a - i)), BigInt(static_cast<long>(i + 1)));
    }
    return value;
}

// Quotient C(A', B') / C(A, B) for A' - A = da and B' - B = db in {0, 1}.
RationalFunction binomial_step(const MultiPoly& a, const MultiPoly& b, long long da, long long db)
{
    const MultiPoly one(1);
    try {
        if (da == 1 && db == 0) {
            return rf_normalize(a + one, a + one - b);
        }
        if (da == 1 && db == 1) {
            return rf_normalize(a + one, b + one);
        }
        if (da == 0 && db == 1) {
            return rf_normalize(a - b, b + one);
        }
    } catch (const Error& e) {
        if (e.code() != ErrorCode::ZeroDenominator) {
            throw;
        }
        throw Error(ErrorCode::DegenerateBinomial, "binomial factor is identically zero");
    }
    return RationalFunction(1);
}

} // namespace

MultiPoly Affine::to_poly() const
{
    return MultiPoly(BigRational(static_cast<long>(constant))) +
           MultiPoly(BigRational(static_cast<long>(n_coef))) * MultiPoly::var(Var::n) +
           MultiPoly(BigRational(static_cast<long>(k_coef))) * MultiPoly::var(Var::k);
}

TermExpr parse_term(std::string_view src)
{
    return Parser(src).term();
}

HyperTerm compile_factor(const Factor& factor)
{
    if (const auto* b = std::get_if<BinomFactor>(&factor)) {
        const BigRational base = binomial_value(b->top.constant, b->bottom.constant);
        if (base.is_zero()) {
            throw Error(ErrorCode::DegenerateBinomial, "binomial factor vanishes at n = k = 0");
        }
        const MultiPoly a = b->top.to_poly();
        const MultiPoly c = b->bottom.to_poly();
        return make_term(RationalFunction(base), binomial_step(a, c, b->top.n_coef, b->bottom.n_coef),
                         binomial_step(a, c, b->top.k_coef, b->bottom.k_coef));
    }
    if (const auto* p = std::get_if<PowerFactor>(&factor)) {
        const RationalFunction base(p->base);
        return make_term(base.pow(p->exponent.constant), base.pow(p->exponent.n_coef), base.pow(p->exponent.k_coef));
    }
    const auto& c = std::get<ConstFactor>(factor);
    return make_term(RationalFunction(c.value), RationalFunction(1), RationalFunction(1));
}

HyperTerm compile_term(const TermExpr& expr)
{
    HyperTerm t = HyperTerm::one();
    for (const auto& f : expr.factors) {
        t = term_mul(t, compile_factor(f));
    }
    return t;
}

HyperTerm term_from_source(std::string_view src)
{
    return compile_term(parse_term(src));
}

RationalFunction parse_cert(std::string_view src)
{
    return Parser(src).cert();
}

} // namespace wz::dsl
