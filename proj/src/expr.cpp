#include "darboux/expr.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace darboux {

namespace {

enum class Tok { Integer, VarX, VarY, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::size_t pos;
    std::string text;  // raw source characters, kept for diagnostics
};

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
            out.push_back({Tok::Integer, start, std::string(src.substr(start, i - start))});
            continue;
        }
        Tok kind;
        switch (c) {
            case 'x': kind = Tok::VarX; break;
            case 'y': kind = Tok::VarY; break;
            case '+': kind = Tok::Plus; break;
            case '-': kind = Tok::Minus; break;
            case '*': kind = Tok::Star; break;
            case '/': kind = Tok::Slash; break;
            case '^': kind = Tok::Caret; break;
            case '(': kind = Tok::LParen; break;
            case ')': kind = Tok::RParen; break;
            default:
                throw parse_error(i, "a term ('x', 'y', a number, '(' or an operator)",
                                  "'" + std::string(1, c) + "'");
        }
        out.push_back({kind, i, std::string(1, c)});
        ++i;
    }
    out.push_back({Tok::End, src.size(), ""});
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view src) : toks_(tokenize(src)) {}

    Poly run() {
        Poly p = expr();
        expect(Tok::End, "end of input");
        return p;
    }

private:
    const Token& peek() const { return toks_[i_]; }

    Token advance() { return toks_[i_++]; }

    bool accept(Tok kind) {
        if (peek().kind != kind) return false;
        ++i_;
        return true;
    }

    Token expect(Tok kind, const std::string& what) {
        if (peek().kind != kind) fail(what);
        return advance();
    }

    [[noreturn]] void fail(const std::string& expected) const {
        const Token& t = peek();
        throw parse_error(t.pos, expected,
                          t.kind == Tok::End ? "end of input" : "'" + t.text + "'");
    }

    Poly expr() {
        Poly p = term();
        while (true) {
            if (accept(Tok::Plus))
                p += term();
            else if (accept(Tok::Minus))
                p -= term();
            else
                return p;
        }
    }

    // A '-' never starts an implicitly multiplied factor, so "3 - 2" is a
    // difference and never the product 3 * (-2).
    bool starts_factor() const {
        switch (peek().kind) {
            case Tok::Integer:
            case Tok::VarX:
            case Tok::VarY:
            case Tok::LParen: return true;
            default: return false;
        }
    }

    Poly term() {
        Poly p = factor();
        while (true) {
            if (accept(Tok::Star))
                p *= factor();
            else if (starts_factor())
                p *= factor();
            else
                return p;
        }
    }

    Poly factor() {
        Poly b = base();
        if (accept(Tok::Caret)) return b.pow(parse_uint("an exponent"));
        return b;
    }

    Poly base() {
        if (accept(Tok::Minus)) return -factor();
        if (accept(Tok::VarX)) return Poly::x();
        if (accept(Tok::VarY)) return Poly::y();
        if (accept(Tok::LParen)) {
            Poly p = expr();
            expect(Tok::RParen, "')'");
            return p;
        }
        if (peek().kind == Tok::Integer) return Poly(rational());
        fail("'x', 'y', a number, '(' or '-'");
    }

    Rat rational() {
        Int num(advance().text);
        if (!accept(Tok::Slash)) return Rat(num);
        const Token den_tok = peek();
        Int den(expect(Tok::Integer, "a denominator").text);
        if (den == 0)
            throw parse_error(den_tok.pos, "a nonzero denominator", "'" + den_tok.text + "'");
        return make_rat(num, den);
    }

    unsigned parse_uint(const std::string& what) {
        const Token t = expect(Tok::Integer, what);
        Int value(t.text);
        if (!value.fits_uint_p())
            throw parse_error(t.pos, "an exponent that fits a machine word", "'" + t.text + "'");
        return static_cast<unsigned>(value.get_ui());
    }

    std::vector<Token> toks_;
    std::size_t i_ = 0;
};

void append_monomial(std::ostringstream& out, const Monomial& m, const Rat& coeff) {
    const Rat mag = coeff < 0 ? Rat(-coeff) : coeff;
    const bool unit_coeff = mag == 1 && m.total() > 0;
    if (!unit_coeff) out << rat_to_string(mag);
    bool need_star = !unit_coeff;
    for (Var v : {Var::x, Var::y}) {
        const unsigned e = m.exponent(v);
        if (e == 0) continue;
        if (need_star) out << '*';
        out << (v == Var::x ? 'x' : 'y');
        if (e > 1) out << '^' << e;
        need_star = true;
    }
}

}  // namespace

Poly parse_poly(std::string_view src) { return Parser(src).run(); }

std::string format_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    // terms() ascends in graded lex; render the largest term first
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        append_monomial(out, m, c);
        first = false;
    }
    return out.str();
}

}  // namespace darboux
