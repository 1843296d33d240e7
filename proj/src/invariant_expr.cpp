#include "tresse/invariant_expr.hpp"

#include "tresse/errors.hpp"

#include <algorithm>
#include <cctype>

namespace tresse {

namespace {

ExprPtr make(InvariantExpr e) {
    return std::make_shared<const InvariantExpr>(std::move(e));
}

} // namespace

ExprPtr InvariantExpr::catalog(std::string token) {
    InvariantExpr e{Kind::Catalog, std::move(token), Rat(0), 0, 0, {}};
    return make(std::move(e));
}

ExprPtr InvariantExpr::free_term() {
    return make({Kind::Free, "", Rat(0), 0, 0, {}});
}

ExprPtr InvariantExpr::coord(std::string var) {
    return make({Kind::Coord, std::move(var), Rat(0), 0, 0, {}});
}

ExprPtr InvariantExpr::constant(Rat v) {
    return make({Kind::Const, "", std::move(v), 0, 0, {}});
}

ExprPtr InvariantExpr::neg(ExprPtr a) {
    return make({Kind::Neg, "", Rat(0), 0, 0, {std::move(a)}});
}

ExprPtr InvariantExpr::add(ExprPtr a, ExprPtr b) {
    return make({Kind::Add, "", Rat(0), 0, 0, {std::move(a), std::move(b)}});
}

ExprPtr InvariantExpr::sub(ExprPtr a, ExprPtr b) {
    return make({Kind::Sub, "", Rat(0), 0, 0, {std::move(a), std::move(b)}});
}

ExprPtr InvariantExpr::mul(ExprPtr a, ExprPtr b) {
    return make({Kind::Mul, "", Rat(0), 0, 0, {std::move(a), std::move(b)}});
}

ExprPtr InvariantExpr::div(ExprPtr a, ExprPtr b) {
    return make({Kind::Div, "", Rat(0), 0, 0, {std::move(a), std::move(b)}});
}

ExprPtr InvariantExpr::pow(ExprPtr a, long e) {
    return make({Kind::Pow, "", Rat(0), e, 0, {std::move(a)}});
}

ExprPtr InvariantExpr::box(ExprPtr a) {
    return make({Kind::Box, "", Rat(0), 0, 0, {std::move(a)}});
}

ExprPtr InvariantExpr::tresse(ExprPtr a, int slot) {
    return make({Kind::Tresse, "", Rat(0), 0, slot, {std::move(a)}});
}

std::string InvariantExpr::str() const {
    switch (kind) {
        case Kind::Catalog: return name;
        case Kind::Free: return "free";
        case Kind::Coord: return name;
        case Kind::Const: return rat_to_string(value);
        case Kind::Neg: return "-(" + children[0]->str() + ")";
        case Kind::Add: return "(" + children[0]->str() + " + " + children[1]->str() + ")";
        case Kind::Sub: return "(" + children[0]->str() + " - " + children[1]->str() + ")";
        case Kind::Mul: return "(" + children[0]->str() + "*" + children[1]->str() + ")";
        case Kind::Div: return "(" + children[0]->str() + "/" + children[1]->str() + ")";
        case Kind::Pow: return "(" + children[0]->str() + ")^" + std::to_string(exponent);
        case Kind::Box: return "box(" + children[0]->str() + ")";
        case Kind::Tresse:
            return "tresse(" + children[0]->str() + ", " + std::to_string(slot) + ")";
    }
    return "?";
}

const std::map<std::string, CatalogTokenInfo>& catalog_tokens() {
    static const std::map<std::string, CatalogTokenInfo> table = {
        {"J2q", {2, 4}},       {"J3q", {2, 4}},       {"Jq", {2, 4}},
        {"I1quintic", {2, 5}}, {"I2quintic", {2, 5}}, {"J1c", {3, 3}},
        {"J2c", {3, 3}},       {"Jc", {3, 3}},
    };
    return table;
}

namespace {

class FrameParser {
public:
    FrameParser(std::string_view text, const std::vector<std::string>& coord_vars)
      : text_(text), coord_vars_(coord_vars) {}

    std::vector<ExprPtr> parse_list() {
        std::vector<ExprPtr> out;
        out.push_back(expr());
        while (consume(',')) out.push_back(expr());
        skip_ws();
        if (pos_ != text_.size()) throw parse_error("unexpected trailing input in frame", pos_);
        return out;
    }

    ExprPtr parse_single() {
        ExprPtr e = expr();
        skip_ws();
        if (pos_ != text_.size()) throw parse_error("unexpected trailing input", pos_);
        return e;
    }

private:
    std::string_view text_;
    const std::vector<std::string>& coord_vars_;
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

    ExprPtr expr() {
        bool neg = consume('-');
        ExprPtr r = term();
        if (neg) r = InvariantExpr::neg(r);
        for (;;) {
            if (consume('+')) {
                r = InvariantExpr::add(r, term());
            } else if (consume('-')) {
                r = InvariantExpr::sub(r, term());
            } else {
                return r;
            }
        }
    }

    ExprPtr term() {
        ExprPtr r = factor();
        for (;;) {
            if (consume('*')) {
                r = InvariantExpr::mul(r, factor());
            } else if (consume('/')) {
                r = InvariantExpr::div(r, factor());
            } else {
                return r;
            }
        }
    }

    ExprPtr factor() {
        ExprPtr b = atom();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            b = InvariantExpr::pow(b, parse_int());
        }
        return b;
    }

    long parse_int() {
        bool neg = consume('-');
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw parse_error("expected integer", pos_);
        long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 64) throw parse_error("exponent too large", pos_);
            ++pos_;
        }
        return neg ? -v : v;
    }

    ExprPtr atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            ExprPtr e = expr();
            if (!consume(')')) throw parse_error("expected ')'", pos_);
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        throw parse_error("expected number, token or '('", pos_);
    }

    ExprPtr number() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::string digits(text_.substr(start, pos_ - start));
        std::size_t save = pos_;
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            skip_ws();
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                std::size_t ds = pos_;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
                std::string den(text_.substr(ds, pos_ - ds));
                Rat q;
                try {
                    q = rat_from_string(digits + "/" + den);
                } catch (const error&) {
                    throw parse_error("zero denominator in literal", save);
                }
                return InvariantExpr::constant(q);
            }
            pos_ = save;
        } else {
            pos_ = save;
        }
        return InvariantExpr::constant(rat_from_string(digits));
    }

    ExprPtr identifier() {
        std::size_t start = pos_;
        ++pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        if (name == "free") return InvariantExpr::free_term();
        if (name == "box") {
            if (!consume('(')) throw parse_error("box requires '('", pos_);
            ExprPtr e = expr();
            if (!consume(')')) throw parse_error("expected ')' after box argument", pos_);
            return InvariantExpr::box(e);
        }
        if (name == "tresse") {
            if (!consume('(')) throw parse_error("tresse requires '('", pos_);
            ExprPtr e = expr();
            if (!consume(',')) throw parse_error("tresse requires a slot argument", pos_);
            skip_ws();
            long slot = parse_int();
            if (slot < 1) throw parse_error("tresse slot must be >= 1", pos_);
            if (!consume(')')) throw parse_error("expected ')' after tresse slot", pos_);
            return InvariantExpr::tresse(e, static_cast<int>(slot));
        }
        if (catalog_tokens().count(name)) {
            // optional "(sym)" suffix
            std::size_t save = pos_;
            if (consume('(')) {
                skip_ws();
                std::size_t as = pos_;
                while (pos_ < text_.size() &&
                       (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                    ++pos_;
                std::string arg(text_.substr(as, pos_ - as));
                if (arg == "sym" && consume(')')) return InvariantExpr::catalog(name);
                pos_ = save;
            }
            return InvariantExpr::catalog(name);
        }
        if (std::find(coord_vars_.begin(), coord_vars_.end(), name) != coord_vars_.end())
            return InvariantExpr::coord(name);
        throw parse_error("unknown token '" + name + "' in frame expression", start);
    }
};

} // namespace

std::vector<ExprPtr> parse_frame(const std::string& text,
                                 const std::vector<std::string>& coord_vars) {
    return FrameParser(text, coord_vars).parse_list();
}

ExprPtr parse_invariant_expr(const std::string& text,
                             const std::vector<std::string>& coord_vars) {
    return FrameParser(text, coord_vars).parse_single();
}

} // namespace tresse
