#include "polyexp/parse.hpp"

#include <cctype>
#include <string>

namespace polyexp {

namespace {

enum class Tok {
    Int,
    Ident,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Prime,
    Equals,
    Comma,
    End,
};

struct Token {
    Tok kind;
    std::size_t offset;
    std::string text;  // digits or identifier
};

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i])))
                ++i;
            out.push_back({Tok::Int, start, std::string(src.substr(start, i - start))});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (i < src.size() && std::isalpha(static_cast<unsigned char>(src[i])))
                ++i;
            out.push_back({Tok::Ident, start, std::string(src.substr(start, i - start))});
            continue;
        }
        Tok kind;
        switch (c) {
            case '+': kind = Tok::Plus; break;
            case '-': kind = Tok::Minus; break;
            case '*': kind = Tok::Star; break;
            case '^': kind = Tok::Caret; break;
            case '/': kind = Tok::Slash; break;
            case '(': kind = Tok::LParen; break;
            case ')': kind = Tok::RParen; break;
            case '[': kind = Tok::LBracket; break;
            case ']': kind = Tok::RBracket; break;
            case '\'': kind = Tok::Prime; break;
            case '=': kind = Tok::Equals; break;
            case ',': kind = Tok::Comma; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", start,
                                 "allowed: digits, identifiers, + - * / ^ ( ) [ ] ' = ,");
        }
        out.push_back({kind, start, std::string(1, c)});
        ++i;
    }
    out.push_back({Tok::End, src.size(), ""});
    return out;
}

// Partial parse result: a polynomial-exponential part plus a linear-operator
// part applied to the unknown y. At most one of the mixing rules below may
// combine them multiplicatively.
struct Value {
    PolyExp pe;
    Poly yop;

    bool has_unknown() const { return !yop.is_zero(); }
};

class Parser {
  public:
    Parser(std::string_view src, OperatorBase base, bool allow_unknown, bool scalar_only,
           bool allow_power = true)
        : tokens_(tokenize(src)),
          base_(base),
          allow_unknown_(allow_unknown),
          scalar_only_(scalar_only),
          allow_power_(allow_power) {}

    const Token& peek() const { return tokens_[pos_]; }
    Token next() { return tokens_[pos_++]; }

    void expect(Tok kind, const char* what, const char* hint = "") {
        if (peek().kind != kind)
            throw ParseError(std::string("expected ") + what, peek().offset, hint);
        ++pos_;
    }

    void expect_end() {
        if (peek().kind != Tok::End)
            throw ParseError("trailing input after expression", peek().offset,
                             "remove the extra text or separate arguments");
    }

    Value parse_expr() {
        bool negate = false;
        if (peek().kind == Tok::Plus) {
            next();
        } else if (peek().kind == Tok::Minus) {
            next();
            negate = true;
        }
        Value v = parse_term();
        if (negate)
            v = negated(v);
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            bool minus = next().kind == Tok::Minus;
            Value r = parse_term();
            v.pe = minus ? v.pe - r.pe : v.pe + r.pe;
            v.yop = minus ? v.yop - r.yop : v.yop + r.yop;
        }
        return v;
    }

    GaussianRational as_scalar(const Value& v, std::size_t offset) {
        if (v.has_unknown())
            throw ParseError("expected a scalar, found the unknown y", offset, "");
        if (v.pe.is_zero())
            return GaussianRational(0);
        const GaussianRational plain = plain_lambda();
        if (v.pe.terms().size() == 1 && v.pe.terms()[0].first == plain &&
            v.pe.terms()[0].second.is_constant())
            return v.pe.terms()[0].second.constant_term();
        throw ParseError("expected a constant scalar expression", offset, "");
    }

  private:
    GaussianRational plain_lambda() const {
        return base_ == OperatorBase::Shift ? GaussianRational(1) : GaussianRational(0);
    }

    Value constant(GaussianRational c) {
        return {PolyExp::term(plain_lambda(), Poly(std::move(c))), Poly{}};
    }

    static Value negated(Value v) {
        return {-v.pe, -v.yop};
    }

    Value parse_term() {
        Value v = parse_factor();
        while (peek().kind == Tok::Star) {
            std::size_t offset = next().offset;
            Value r = parse_factor();
            v = multiplied(v, r, offset);
        }
        return v;
    }

    Value multiplied(const Value& a, const Value& b, std::size_t offset) {
        if (a.has_unknown() && b.has_unknown())
            throw ParseError("the equation is not linear in y", offset,
                             "only scalar coefficients may multiply y terms");
        if (a.has_unknown() || b.has_unknown()) {
            const Value& unknown = a.has_unknown() ? a : b;
            const Value& other = a.has_unknown() ? b : a;
            GaussianRational c = as_scalar(other, offset);
            return {PolyExp{}, c * unknown.yop};
        }
        return {mul(a.pe, b.pe, base_), Poly{}};
    }

    long small_int(const Token& t, const char* what) {
        if (t.text.size() > 4)
            throw ParseError(std::string(what) + " too large", t.offset, "");
        return std::stol(t.text);
    }

    long parse_exponent() {
        if (peek().kind != Tok::Int)
            throw ParseError("expected a nonnegative integer exponent", peek().offset,
                             "powers must use literal integer exponents, e.g. n^2");
        Token t = next();
        return small_int(t, "exponent");
    }

    Value parse_factor() {
        Value v = parse_primary();
        if (allow_power_ && peek().kind == Tok::Caret) {
            std::size_t offset = peek().offset;
            ++pos_;
            if (peek().kind == Tok::Ident && peek().text == base_variable(base_)) {
                if (base_ != OperatorBase::Shift)
                    throw ParseError("power-of-t syntax is not valid in derivative mode",
                                     peek().offset, "use exp(lambda*t) for exponentials");
                next();
                GaussianRational lambda = as_scalar(v, offset);
                return {PolyExp::term(std::move(lambda), Poly(GaussianRational(1))), Poly{}};
            }
            if (peek().kind == Tok::Ident)
                throw ParseError("unexpected identifier in exponent", peek().offset,
                                 base_ == OperatorBase::Shift
                                     ? "sequence exponentials are written lambda^n"
                                     : "function exponentials are written exp(lambda*t)");
            if (v.has_unknown())
                throw ParseError("the unknown y cannot be raised to a power", offset,
                                 "write derivative orders as y'' or y^(k) inside an equation");
            long e = parse_exponent();
            Value out = constant(GaussianRational(1));
            for (long k = 0; k < e; ++k)
                out.pe = mul(out.pe, v.pe, base_);
            return out;
        }
        return v;
    }

    Value parse_primary() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Int: {
                Token num = next();
                Rational r(mpz_class(num.text), mpz_class(1));
                if (peek().kind == Tok::Slash) {
                    next();
                    if (peek().kind != Tok::Int)
                        throw ParseError("expected a denominator after '/'", peek().offset,
                                         "rationals are written a/b");
                    Token den = next();
                    if (mpz_class(den.text) == 0)
                        throw ParseError("zero denominator", den.offset, "");
                    r = Rational(mpz_class(num.text), mpz_class(den.text));
                }
                return constant(GaussianRational(std::move(r)));
            }
            case Tok::Ident:
                return parse_identifier();
            case Tok::LParen: {
                next();
                Value v = parse_expr();
                expect(Tok::RParen, "')'", "unbalanced parenthesis");
                return v;
            }
            default:
                throw ParseError("expected a value", t.offset,
                                 "values are scalars, variables, exponentials, or parenthesized sums");
        }
    }

    Value parse_identifier() {
        Token t = next();
        if (t.text == "i")
            return constant(GaussianRational::i());

        if (scalar_only_)
            throw ParseError("variables are not allowed in a scalar context", t.offset,
                             "write an exact scalar such as 2, -1/2 or 1+2*i");

        if (t.text == "n" || t.text == "t") {
            if (t.text != base_variable(base_))
                throw ParseError("variable '" + t.text + "' does not match the mode", t.offset,
                                 base_ == OperatorBase::Shift ? "sequence mode uses the variable n"
                                                              : "function mode uses the variable t");
            return {PolyExp::term(base_ == OperatorBase::Shift ? GaussianRational(1)
                                                               : GaussianRational(0),
                                  Poly::variable()),
                    Poly{}};
        }
        if (t.text == "exp") {
            if (base_ != OperatorBase::Derivative)
                throw ParseError("exp(...) is function-mode syntax", t.offset,
                                 "sequence exponentials are written lambda^n");
            expect(Tok::LParen, "'(' after exp", "");
            Value inner = parse_expr();
            expect(Tok::RParen, "')'", "unbalanced parenthesis");
            if (inner.has_unknown())
                throw ParseError("exp argument cannot contain y", t.offset, "");
            return {PolyExp::term(exp_argument(inner.pe, t.offset), Poly(GaussianRational(1))),
                    Poly{}};
        }
        if (t.text == "y") {
            if (!allow_unknown_)
                throw ParseError("the unknown y is only allowed in equations", t.offset,
                                 "expressions must be explicit polynomial-exponential sums");
            return parse_unknown();
        }
        throw ParseError("unknown identifier '" + t.text + "'", t.offset,
                         "known names: i, exp, y and the mode variable");
    }

    // The argument of exp(...) must reduce to lambda * t.
    GaussianRational exp_argument(const PolyExp& arg, std::size_t offset) {
        if (arg.is_zero())
            return GaussianRational(0);
        if (arg.terms().size() == 1 && arg.terms()[0].first.is_zero()) {
            const Poly& p = arg.terms()[0].second;
            if (p.degree() == 1 && p.coeff(0).is_zero())
                return p.coeff(1);
        }
        throw ParseError("exp argument must be a scalar multiple of t", offset,
                         "write exp(lambda*t), e.g. exp(2*t) or exp((1+i)*t)");
    }

    Value parse_unknown() {
        if (base_ == OperatorBase::Shift) {
            expect(Tok::LBracket, "'[' after y", "sequence unknowns are written y[n+k]");
            if (!(peek().kind == Tok::Ident && peek().text == "n"))
                throw ParseError("expected the index n", peek().offset,
                                 "sequence unknowns are written y[n+k]");
            next();
            long shift = 0;
            if (peek().kind == Tok::Plus) {
                next();
                if (peek().kind != Tok::Int)
                    throw ParseError("expected an integer shift", peek().offset,
                                     "sequence unknowns are written y[n+k] with k >= 0");
                shift = small_int(next(), "shift");
            } else if (peek().kind == Tok::Minus) {
                throw ParseError("negative shifts are not supported", peek().offset,
                                 "rewrite the recurrence using y[n+k] with k >= 0");
            }
            expect(Tok::RBracket, "']'", "unbalanced bracket");
            return {PolyExp{}, Poly::monomial(GaussianRational(1), static_cast<int>(shift))};
        }

        long order = 0;
        while (peek().kind == Tok::Prime) {
            next();
            ++order;
        }
        if (order == 0 && peek().kind == Tok::Caret && tokens_[pos_ + 1].kind == Tok::LParen) {
            next();  // ^
            next();  // (
            if (peek().kind != Tok::Int)
                throw ParseError("expected a derivative order", peek().offset,
                                 "higher derivatives are written y^(k)");
            order = small_int(next(), "derivative order");
            expect(Tok::RParen, "')'", "higher derivatives are written y^(k)");
        }
        return {PolyExp{}, Poly::monomial(GaussianRational(1), static_cast<int>(order))};
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    OperatorBase base_;
    bool allow_unknown_;
    bool scalar_only_;
    bool allow_power_;
};

}  // namespace

PolyExp parse_expression(std::string_view src, OperatorBase base) {
    Parser p(src, base, /*allow_unknown=*/false, /*scalar_only=*/false);
    Value v = p.parse_expr();
    p.expect_end();
    return v.pe;
}

ParsedEquation parse_equation(std::string_view src, OperatorBase base) {
    Parser p(src, base, /*allow_unknown=*/true, /*scalar_only=*/false);
    Value lhs = p.parse_expr();
    std::size_t eq_offset = p.peek().offset;
    p.expect(Tok::Equals, "'='", "an equation needs a right-hand side");
    Value rhs = p.parse_expr();
    p.expect_end();

    Poly op_poly = lhs.yop - rhs.yop;
    if (op_poly.is_zero())
        throw ParseError("equation contains no unknown term", eq_offset,
                         "write the unknown as y[n+k] (sequences) or y, y', y^(k) (functions)");
    return {OperatorSpec::from_expanded(base, std::move(op_poly)), rhs.pe - lhs.pe};
}

GaussianRational parse_scalar(std::string_view src) {
    Parser p(src, OperatorBase::Shift, /*allow_unknown=*/false, /*scalar_only=*/true);
    Value v = p.parse_expr();
    p.expect_end();
    return p.as_scalar(v, 0);
}

std::vector<GaussianRational> parse_scalar_list(std::string_view src) {
    Parser p(src, OperatorBase::Shift, /*allow_unknown=*/false, /*scalar_only=*/true);
    std::vector<GaussianRational> out;
    while (true) {
        Value v = p.parse_expr();
        out.push_back(p.as_scalar(v, p.peek().offset));
        if (p.peek().kind == Tok::Comma) {
            p.next();
            continue;
        }
        p.expect_end();
        break;
    }
    return out;
}

std::vector<OperatorFactor> parse_roots(std::string_view src) {
    Parser p(src, OperatorBase::Shift, /*allow_unknown=*/false, /*scalar_only=*/true,
             /*allow_power=*/false);
    std::vector<OperatorFactor> out;
    while (true) {
        std::size_t offset = p.peek().offset;
        Value v = p.parse_expr();
        GaussianRational root = p.as_scalar(v, offset);
        int mult = 1;
        if (p.peek().kind == Tok::Caret) {
            p.next();
            if (p.peek().kind != Tok::Int)
                throw ParseError("expected a multiplicity", p.peek().offset,
                                 "roots are written lambda^mult, e.g. 2^1,3^2");
            Token m = p.next();
            if (m.text.size() > 2)
                throw ParseError("multiplicity too large", m.offset, "");
            mult = static_cast<int>(std::stol(m.text));
            if (mult < 1)
                throw ParseError("multiplicity must be >= 1", offset, "");
        }
        out.push_back({std::move(root), mult});
        if (p.peek().kind == Tok::Comma) {
            p.next();
            continue;
        }
        p.expect_end();
        break;
    }
    return out;
}

}  // namespace polyexp
