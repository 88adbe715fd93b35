#include <cctype>
#include <map>

#include "bsa/formula.hpp"

namespace bsa {

namespace {

enum class Tok { Ident, Int, Plus, Minus, Star, Caret, Slash, LParen, RParen,
                 Comma, Semi, Eq, Neq, Gt, Lt, Geq, Leq, End };

struct Lexer {
    const std::string& s;
    size_t i = 0;
    int line = 1, col = 1;
    Tok tok = Tok::End;
    std::string text;
    int tline = 1, tcol = 1;

    explicit Lexer(const std::string& src) : s(src) { next(); }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, tline, tcol); }

    void advance() {
        if (i < s.size() && s[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++i;
    }

    void next() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) advance();
        tline = line;
        tcol = col;
        if (i >= s.size()) {
            tok = Tok::End;
            return;
        }
        char c = s[i];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            text.clear();
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) ||
                                    s[i] == '_' || s[i] == '\'')) {
                text += s[i];
                advance();
            }
            tok = Tok::Ident;
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            text.clear();
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                text += s[i];
                advance();
            }
            if (i < s.size() && s[i] == '.')
                throw ParseError("non-rational literal (decimal point)", line, col);
            tok = Tok::Int;
            return;
        }
        advance();
        switch (c) {
            case '+': tok = Tok::Plus; return;
            case '-': tok = Tok::Minus; return;
            case '*': tok = Tok::Star; return;
            case '^': tok = Tok::Caret; return;
            case '/': tok = Tok::Slash; return;
            case '(': tok = Tok::LParen; return;
            case ')': tok = Tok::RParen; return;
            case ',': tok = Tok::Comma; return;
            case ';': tok = Tok::Semi; return;
            case '=': tok = Tok::Eq; return;
            case '!':
                if (i < s.size() && s[i] == '=') {
                    advance();
                    tok = Tok::Neq;
                    return;
                }
                throw ParseError("expected '=' after '!'", line, col);
            case '>':
                if (i < s.size() && s[i] == '=') {
                    advance();
                    tok = Tok::Geq;
                    return;
                }
                tok = Tok::Gt;
                return;
            case '<':
                if (i < s.size() && s[i] == '=') {
                    advance();
                    tok = Tok::Leq;
                    return;
                }
                tok = Tok::Lt;
                return;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", tline, tcol);
        }
    }
};

struct PolyParser {
    Lexer& lx;
    const std::map<std::string, VarId>& vars;

    Poly parse() { return sum(); }

    Poly sum() {
        Poly p;
        if (lx.tok == Tok::Minus) {
            lx.next();
            p = -term();
        } else {
            p = term();
        }
        while (lx.tok == Tok::Plus || lx.tok == Tok::Minus) {
            bool plus = lx.tok == Tok::Plus;
            lx.next();
            Poly t = term();
            p = plus ? p + t : p - t;
        }
        return p;
    }

    Poly term() {
        Poly p = factor();
        while (lx.tok == Tok::Star) {
            lx.next();
            p *= factor();
        }
        return p;
    }

    Poly factor() {
        Poly b = base();
        if (lx.tok == Tok::Caret) {
            lx.next();
            if (lx.tok != Tok::Int) lx.fail("expected integer exponent");
            long e = std::stol(lx.text);
            lx.next();
            return b.pow(static_cast<int>(e));
        }
        return b;
    }

    Poly base() {
        if (lx.tok == Tok::Minus) {
            lx.next();
            return -factor();
        }
        if (lx.tok == Tok::LParen) {
            lx.next();
            Poly p = sum();
            if (lx.tok != Tok::RParen) lx.fail("expected ')'");
            lx.next();
            return p;
        }
        if (lx.tok == Tok::Int) {
            Integer num(lx.text);
            lx.next();
            if (lx.tok == Tok::Slash) {
                lx.next();
                if (lx.tok != Tok::Int) lx.fail("expected denominator");
                Integer den(lx.text);
                lx.next();
                if (den == 0) lx.fail("zero denominator");
                Rational q(num, den);
                q.canonicalize();
                return Poly(q);
            }
            return Poly(Rational(num));
        }
        if (lx.tok == Tok::Ident) {
            auto it = vars.find(lx.text);
            if (it == vars.end()) lx.fail("unknown variable '" + lx.text + "'");
            lx.next();
            return Poly::var(it->second);
        }
        lx.fail("expected polynomial");
    }
};

}  // namespace

BasicFormula parse_formula(const std::string& text) {
    Lexer lx(text);
    if (lx.tok != Tok::Ident || lx.text != "vars") lx.fail("expected 'vars'");
    lx.next();
    BasicFormula f;
    std::map<std::string, VarId> scope;
    while (lx.tok == Tok::Ident) {
        VarId v = intern_var(lx.text);
        if (scope.count(lx.text)) lx.fail("duplicate variable '" + lx.text + "'");
        scope.emplace(lx.text, v);
        f.vars.push_back(v);
        lx.next();
        if (lx.tok == Tok::Comma) {
            lx.next();
            if (lx.tok != Tok::Ident) lx.fail("expected variable name");
        } else {
            break;
        }
    }
    if (lx.tok != Tok::Semi) lx.fail("expected ';'");
    lx.next();
    PolyParser pp{lx, scope};
    while (lx.tok != Tok::End) {
        Poly lhs = pp.parse();
        Tok rel = lx.tok;
        if (rel != Tok::Eq && rel != Tok::Neq && rel != Tok::Gt && rel != Tok::Lt &&
            rel != Tok::Geq && rel != Tok::Leq)
            lx.fail("expected relation (= != > < >= <=)");
        lx.next();
        Poly rhs = pp.parse();
        switch (rel) {
            case Tok::Eq: f.eqs.push_back(lhs - rhs); break;
            case Tok::Neq: f.neqs.push_back(lhs - rhs); break;
            case Tok::Gt: f.pos.push_back(lhs - rhs); break;
            case Tok::Lt: f.pos.push_back(rhs - lhs); break;
            case Tok::Geq: f.geq.push_back(lhs - rhs); break;
            case Tok::Leq: f.geq.push_back(rhs - lhs); break;
            default: break;
        }
        if (lx.tok == Tok::Comma) {
            lx.next();
            continue;
        }
        break;
    }
    if (lx.tok != Tok::End) lx.fail("trailing input");
    f.canonicalize();
    return f;
}

Poly parse_poly_expr(const std::string& text, const std::vector<VarId>& vars) {
    Lexer lx(text);
    std::map<std::string, VarId> scope;
    for (VarId v : vars) scope.emplace(var_name(v), v);
    PolyParser pp{lx, scope};
    Poly p = pp.parse();
    if (lx.tok != Tok::End) lx.fail("trailing input");
    return p;
}

}  // namespace bsa
