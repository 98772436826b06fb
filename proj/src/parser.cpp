#include "rsys/parser.hpp"

#include <cctype>

namespace rsys {

namespace {

class Parser {
public:
    Parser(std::string_view text, SymbolTable& tab) : s_(text), tab_(tab) {}

    RationalFunction run() {
        RationalFunction f = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return f;
    }

private:
    std::string_view s_;
    SymbolTable& tab_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (c == '#') {
                while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool accept(char c) {
        if (peek(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    RationalFunction expr() {
        RationalFunction acc = term();
        while (true) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    RationalFunction term() {
        RationalFunction acc = factor();
        while (true) {
            if (accept('*')) {
                acc *= factor();
            } else if (accept('/')) {
                RationalFunction d = factor();
                if (d.is_zero()) fail("division by zero");
                acc /= d;
            } else {
                return acc;
            }
        }
    }

    RationalFunction factor() {
        RationalFunction b = base();
        if (accept('^')) {
            int e = signed_integer();
            if (e < 0 && b.is_zero()) fail("zero to a negative power");
            b = b.pow(e);
        }
        return b;
    }

    int signed_integer() {
        skip_ws();
        size_t start = pos_;
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            pos_ = start;
            fail("expected integer");
        }
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 1000000000L) fail("exponent too large");
            ++pos_;
        }
        return static_cast<int>(neg ? -v : v);
    }

    Integer digits() {
        std::string ds;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ds.push_back(s_[pos_++]);
        return Integer(ds);
    }

    RationalFunction base() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            RationalFunction f = expr();
            if (!accept(')')) fail("expected ')'");
            return f;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
            bool neg = c == '-';
            if (neg) {
                ++pos_;
                skip_ws();
                if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    fail("expected digits after '-'");
            }
            Integer num = digits();
            Integer den(1);
            // greedy rational literal: integer '/' positive-integer
            size_t save = pos_;
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '/') {
                size_t slash = pos_++;
                skip_ws();
                if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                    den = digits();
                    if (den == 0) {
                        pos_ = slash;
                        fail("zero denominator in literal");
                    }
                } else {
                    pos_ = save; // '/' starts a division, not a literal
                }
            } else {
                pos_ = save;
            }
            Rational q(num, den);
            q.canonicalize();
            if (neg) q = -q;
            return RationalFunction::constant(&tab_, q);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            SymbolId id = tab_.intern(s_.substr(start, pos_ - start));
            return RationalFunction::variable(&tab_, id);
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

} // namespace

RationalFunction parse_expr(std::string_view text, SymbolTable& tab) {
    return Parser(text, tab).run();
}

} // namespace rsys
