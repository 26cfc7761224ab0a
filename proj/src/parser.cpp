#include "hardy/parser.hpp"

#include <cctype>
#include <set>

#include "hardy/error.hpp"

namespace hardy {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, LBrace, RBrace, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t j = i;
            bool dot = false;
            while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || (s[j] == '.' && !dot))) {
                if (s[j] == '.') dot = true;
                ++j;
            }
            if (j - i == 1 && c == '.') throw ParseError("stray '.'", i);
            out.push_back({Tok::Number, s.substr(i, j - i), i});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            out.push_back({Tok::Ident, s.substr(i, j - i), i});
            i = j;
            continue;
        }
        Tok k;
        switch (c) {
            case '+': k = Tok::Plus; break;
            case '-': k = Tok::Minus; break;
            case '*': k = Tok::Star; break;
            case '/': k = Tok::Slash; break;
            case '^': k = Tok::Caret; break;
            case '(': k = Tok::LParen; break;
            case ')': k = Tok::RParen; break;
            case ',': k = Tok::Comma; break;
            case '{': k = Tok::LBrace; break;
            case '}': k = Tok::RBrace; break;
            default: throw ParseError(std::string("unexpected character '") + c + "'", i);
        }
        out.push_back({k, std::string(1, c), i});
        ++i;
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

const std::set<std::string> kKnownUnsupported = {"exp", "sin", "cos", "tan", "sinh", "cosh", "tanh", "arctan",
                                                 "atan", "asin", "acos", "li", "Li", "pi", "e", "gamma", "abs",
                                                 "floor", "ceil", "loglog"};

bool is_variable(const std::string& id) { return id == "t" || id == "n"; }

class Parser {
public:
    explicit Parser(const std::string& text) : tokens_(tokenize(text)) {}

    HardyNormalForm whole() {
        HardyNormalForm r = expr();
        expect(Tok::End, "end of input");
        return r;
    }

    std::vector<HardyNormalForm> family() {
        std::vector<HardyNormalForm> out;
        const bool braced = accept(Tok::LBrace);
        if (braced && accept(Tok::RBrace)) {
            expect(Tok::End, "end of input");
            return out;
        }
        out.push_back(expr());
        while (accept(Tok::Comma)) out.push_back(expr());
        if (braced) expect(Tok::RBrace, "'}'");
        expect(Tok::End, "end of input");
        return out;
    }

private:
    const Token& peek() const { return tokens_[at_]; }
    const Token& next() { return tokens_[at_++]; }

    bool accept(Tok k) {
        if (peek().kind != k) return false;
        ++at_;
        return true;
    }

    const Token& expect(Tok k, const std::string& what) {
        if (peek().kind != k) {
            const std::string got = peek().kind == Tok::End ? "end of input" : "'" + peek().text + "'";
            throw ParseError("expected " + what + ", found " + got, peek().pos);
        }
        return next();
    }

    HardyNormalForm expr() {
        HardyNormalForm acc = term();
        for (;;) {
            if (accept(Tok::Plus)) {
                acc = acc + term();
            } else if (accept(Tok::Minus)) {
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    HardyNormalForm term() {
        HardyNormalForm acc = unary();
        for (;;) {
            const Tok k = peek().kind;
            if (k == Tok::Star) {
                next();
                acc = acc * unary();
            } else if (k == Tok::Slash) {
                const std::size_t pos = next().pos;
                acc = divide(acc, unary(), pos);
            } else if (k == Tok::Ident || k == Tok::LParen) {
                acc = acc * unary();
            } else {
                return acc;
            }
        }
    }

    HardyNormalForm unary() {
        if (accept(Tok::Minus)) return -unary();
        if (accept(Tok::Plus)) return unary();
        return power();
    }

    HardyNormalForm power() {
        const std::size_t pos = peek().pos;
        HardyNormalForm base = primary();
        if (!accept(Tok::Caret)) return base;
        return raise(base, exponent(), pos);
    }

    HardyNormalForm primary() {
        const Token& tok = peek();
        switch (tok.kind) {
            case Tok::Number: {
                next();
                return HardyNormalForm::constant(Surd::from_literal(tok.text));
            }
            case Tok::LParen: {
                next();
                HardyNormalForm inner = expr();
                expect(Tok::RParen, "')'");
                return inner;
            }
            case Tok::Ident:
                return identifier();
            default: {
                const std::string got = tok.kind == Tok::End ? "end of input" : "'" + tok.text + "'";
                throw ParseError("expected a number, t, log(t), sqrt(...) or '(', found " + got, tok.pos);
            }
        }
    }

    HardyNormalForm identifier() {
        const Token tok = next();
        if (is_variable(tok.text)) return HardyNormalForm::monomial(Surd(1), Surd(1));
        if (tok.text == "log") {
            expect(Tok::LParen, "'(' after log");
            const std::size_t pos = peek().pos;
            HardyNormalForm arg = expr();
            expect(Tok::RParen, "')'");
            return log_of(arg, pos);
        }
        if (tok.text == "sqrt") {
            expect(Tok::LParen, "'(' after sqrt");
            const std::size_t pos = peek().pos;
            HardyNormalForm arg = expr();
            expect(Tok::RParen, "')'");
            return HardyNormalForm::constant(sqrt_of(arg, pos));
        }
        if (kKnownUnsupported.count(tok.text)) {
            throw UnsupportedForm("'" + tok.text + "' is outside the sums of c*t^a*(log t)^b");
        }
        throw ParseError("unknown identifier '" + tok.text + "'", tok.pos);
    }

    // Exponent after '^'. "t^1/3" reads the fraction as one literal.
    Surd exponent() {
        if (accept(Tok::Minus)) return -exponent();
        const Token& tok = peek();
        if (tok.kind == Tok::Number) {
            next();
            std::string literal = tok.text;
            if (peek().kind == Tok::Slash && tokens_[at_ + 1].kind == Tok::Number) {
                next();
                literal += "/" + next().text;
            }
            try {
                return Surd::from_literal(literal);
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what(), tok.pos);
            }
        }
        if (tok.kind == Tok::LParen) {
            next();
            const std::size_t pos = peek().pos;
            HardyNormalForm inner = expr();
            expect(Tok::RParen, "')'");
            return constant_of(inner, pos);
        }
        if (tok.kind == Tok::Ident && tok.text == "sqrt") {
            const std::size_t pos = tok.pos;
            return constant_of(identifier(), pos);
        }
        if (tok.kind == Tok::Ident && (is_variable(tok.text) || tok.text == "log")) {
            throw UnsupportedForm("variable exponent is outside the sums of c*t^a*(log t)^b");
        }
        throw ParseError("expected an exponent", tok.pos);
    }

    static Surd constant_of(const HardyNormalForm& f, std::size_t pos) {
        if (f.is_zero()) return Surd();
        if (f.terms().size() != 1 || !f.terms()[0].alpha.is_zero() || f.terms()[0].beta != 0) {
            throw ParseError("expected a constant", pos);
        }
        return f.terms()[0].coeff;
    }

    static Surd sqrt_of(const HardyNormalForm& arg, std::size_t pos) {
        const Surd c = constant_of(arg, pos);
        if (!c.is_rational()) throw UnsupportedForm("sqrt of an irrational constant");
        if (c.sign() < 0) throw ParseError("sqrt of a negative number", pos);
        try {
            return Surd::sqrt(c.rational());
        } catch (const std::domain_error& e) {
            throw UnsupportedForm(e.what());
        }
    }

    // log(t^a) = a*log(t); anything else leaves the class.
    static HardyNormalForm log_of(const HardyNormalForm& arg, std::size_t pos) {
        if (arg.terms().size() == 1) {
            const Term& t = arg.terms()[0];
            if (t.coeff == Surd(1) && t.beta == 0 && !t.alpha.is_zero()) {
                return HardyNormalForm::monomial(t.alpha, Surd(), 1);
            }
        }
        (void)pos;
        throw UnsupportedForm("log(" + arg.render() + ") is outside the sums of c*t^a*(log t)^b");
    }

    static HardyNormalForm divide(const HardyNormalForm& num, const HardyNormalForm& den, std::size_t pos) {
        if (den.is_zero()) throw ParseError("division by zero", pos);
        if (den.terms().size() != 1) throw UnsupportedForm("division by a sum (" + den.render() + ")");
        const Term& d = den.terms()[0];
        auto inv = d.coeff.inverse();
        if (!inv) throw UnsupportedForm("division by " + d.coeff.to_string());
        return num * HardyNormalForm::monomial(*inv, -d.alpha, -d.beta);
    }

    static HardyNormalForm raise(const HardyNormalForm& base, const Surd& e, std::size_t pos) {
        if (e.is_integer() && e.sign() >= 0) {
            const mpq_class q = e.rational();
            if (q > 64) throw UnsupportedForm("integer power above 64");
            HardyNormalForm r = HardyNormalForm::constant(Surd(1));
            for (long i = 0; i < q.get_num().get_si(); ++i) r = r * base;
            return r;
        }
        if (base.terms().size() != 1) {
            if (base.is_zero()) throw ParseError("power of zero with a non-natural exponent", pos);
            throw UnsupportedForm("non-integer power of a sum");
        }
        const Term& b = base.terms()[0];
        Surd coeff(1);
        if (e.is_rational() && e.rational().get_den() == 1) {
            // negative integer power
            auto inv = b.coeff.inverse();
            if (!inv) throw UnsupportedForm("negative power of " + b.coeff.to_string());
            for (long i = 0; i < -e.rational().get_num().get_si(); ++i) coeff *= *inv;
        } else if (b.coeff != Surd(1)) {
            throw UnsupportedForm("fractional power of the constant " + b.coeff.to_string());
        }
        int beta = 0;
        if (b.beta != 0) {
            const Surd be = e * Surd(static_cast<long>(b.beta));
            if (!be.is_rational() || be.rational().get_den() != 1) {
                throw UnsupportedForm("non-integer power of log(t)");
            }
            beta = static_cast<int>(be.rational().get_num().get_si());
        }
        return HardyNormalForm::monomial(coeff, b.alpha * e, beta);
    }

    std::vector<Token> tokens_;
    std::size_t at_ = 0;
};

}  // namespace

HardyNormalForm parse(const std::string& text) { return Parser(text).whole(); }

std::vector<HardyNormalForm> parse_family(const std::string& text) { return Parser(text).family(); }

}  // namespace hardy
