#include "tresse/parse.hpp"

#include "tresse/errors.hpp"

#include <cctype>

namespace tresse {

namespace {

class ExprParser {
public:
    ExprParser(std::string_view text, const std::vector<std::string>& vars)
      : text_(text), vars_(vars) {}

    RationalFunction parse() {
        RationalFunction r = expr();
        skip_ws();
        if (pos_ != text_.size()) throw parse_error("unexpected trailing input", pos_);
        return r;
    }

private:
    std::string_view text_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    RationalFunction expr() {
        bool neg = consume('-');
        RationalFunction r = term();
        if (neg) r = -r;
        for (;;) {
            if (consume('+')) {
                r = r + term();
            } else if (consume('-')) {
                r = r - term();
            } else {
                return r;
            }
        }
    }

    RationalFunction term() {
        RationalFunction r = factor();
        for (;;) {
            if (consume('*')) {
                r = r * factor();
            } else if (peek() == '/') {
                std::size_t at = pos_;
                ++pos_;
                RationalFunction d = factor();
                if (d.is_zero()) throw parse_error("division by zero", at);
                r = r / d;
            } else {
                return r;
            }
        }
    }

    RationalFunction factor() {
        RationalFunction b = base();
        if (peek() == '^') {
            std::size_t at = pos_;
            ++pos_;
            skip_ws();
            unsigned long e = parse_uint(at);
            if (e > 64) throw parse_error("exponent too large", at);
            b = b.pow(static_cast<long>(e));
        }
        return b;
    }

    unsigned long parse_uint(std::size_t op_at) {
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw parse_error("expected unsigned integer exponent", op_at + 1 > text_.size() ? op_at : pos_);
        unsigned long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<unsigned long>(text_[pos_] - '0');
            if (v > 1000000) throw parse_error("exponent too large", pos_);
            ++pos_;
        }
        return v;
    }

    RationalFunction base() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            RationalFunction r = expr();
            if (!consume(')')) throw parse_error("expected ')'", pos_);
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
        throw parse_error("expected number, variable or '('", pos_);
    }

    RationalFunction number() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::string digits(text_.substr(start, pos_ - start));
        // absorb '/' only when a digit follows immediately after optional ws:
        // "3/4" is a literal, "3/x" is a division
        std::size_t save = pos_;
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '/') {
            std::size_t slash = pos_;
            ++pos_;
            skip_ws();
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                std::size_t dstart = pos_;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
                std::string den(text_.substr(dstart, pos_ - dstart));
                Rat q;
                try {
                    q = rat_from_string(digits + "/" + den);
                } catch (const error&) {
                    throw parse_error("zero denominator in literal", slash);
                }
                return RationalFunction::constant(vars_, q);
            }
            pos_ = save; // plain division, handled by term()
        } else {
            pos_ = save;
        }
        return RationalFunction::constant(vars_, rat_from_string(digits));
    }

    RationalFunction identifier() {
        std::size_t start = pos_;
        ++pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return RationalFunction::variable(vars_, static_cast<int>(i));
        throw parse_error("unknown variable '" + name + "'", start);
    }
};

} // namespace

RationalFunction parse_expr(std::string_view text, const std::vector<std::string>& variables) {
    return ExprParser(text, variables).parse();
}

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables) {
    RationalFunction f = parse_expr(text, variables);
    if (!f.is_polynomial()) throw parse_error("expression is not a polynomial", 0);
    return f.as_polynomial();
}

} // namespace tresse
