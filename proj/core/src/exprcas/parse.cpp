#include "twistlab/errors.hpp"
#include "twistlab/exprcas/scalar.hpp"

#include <cctype>

namespace twistlab::exprcas {

namespace {

// expr   := term (('+'|'-') term)*
// term   := unary (('*'|'/') unary)*
// unary  := ('+'|'-') unary | power
// power  := atom ('^' ['-'] integer | '^' '(' ['-'] integer ')')?
// atom   := integer | identifier | 'exp' '(' expr ')' | '(' expr ')'
class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    Scalar run() {
        Scalar v = expr();
        skip();
        if (i_ != s_.size()) fail("unexpected character '" + std::string(1, s_[i_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, i_); }

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    bool eat(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    Scalar expr() {
        Scalar v = term();
        while (true) {
            if (eat('+')) {
                v += term();
            } else if (eat('-')) {
                v -= term();
            } else {
                return v;
            }
        }
    }

    Scalar term() {
        Scalar v = unary();
        while (true) {
            if (eat('*')) {
                v *= unary();
            } else if (eat('/')) {
                std::size_t at = i_;
                Scalar d = unary();
                if (d.is_zero()) throw ParseError("division by zero", at);
                v /= d;
            } else {
                return v;
            }
        }
    }

    Scalar unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    long integer() {
        skip();
        std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (start == i_) fail("expected integer");
        std::string digits(s_.substr(start, i_ - start));
        if (digits.size() > 9) fail("exponent too large");
        return std::stol(digits);
    }

    Scalar power() {
        Scalar base = atom();
        if (!eat('^')) return base;
        bool paren = eat('(');
        bool neg = eat('-');
        long k = integer();
        if (paren && !eat(')')) fail("expected ')'");
        return base.pow(static_cast<int>(neg ? -k : k));
    }

    Scalar atom() {
        skip();
        if (i_ >= s_.size()) fail("unexpected end of input");
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            return Scalar(mpq_class(mpz_class(std::string(s_.substr(start, i_ - start)))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = i_;
            while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
            std::string name(s_.substr(start, i_ - start));
            if (name == "exp") {
                if (!eat('(')) fail("expected '(' after exp");
                std::size_t at = i_;
                Scalar arg = expr();
                if (!eat(')')) fail("expected ')'");
                try {
                    return Scalar::exp(arg);
                } catch (const NotInClass& e) {
                    throw ParseError(e.what(), at);
                }
            }
            return Scalar::coord(name);
        }
        if (eat('(')) {
            Scalar v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    std::size_t i_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text) { return Parser(text).run(); }

}  // namespace twistlab::exprcas
