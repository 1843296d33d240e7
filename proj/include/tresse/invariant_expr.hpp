#ifndef TRESSE_INVARIANT_EXPR_HPP
#define TRESSE_INVARIANT_EXPR_HPP

#include "tresse/rational.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace tresse {

struct InvariantExpr;
using ExprPtr = std::shared_ptr<const InvariantExpr>;

// AST of natural-invariant expressions: catalog invariants of the symbol,
// the free term (box applied to 1), box applications, Tresse derivatives and
// rational combinations. Coordinate atoms are admitted as a testing aid.
struct InvariantExpr {
    enum class Kind {
        Catalog, // catalog invariant of the operator's symbol, by token name
        Free,    // box(1): the operator's free coefficient
        Coord,   // a coordinate function, by variable name
        Const,
        Neg,
        Add,
        Sub,
        Mul,
        Div,
        Pow,    // integer exponent, possibly negative
        Box,    // box(e): apply the operator to the value of e
        Tresse, // tresse(e, i): Tresse derivative d e / d I_i (1-based slot)
    };

    Kind kind;
    std::string name; // Catalog token or Coord variable
    Rat value;        // Const
    long exponent = 0;
    int slot = 0; // Tresse, 1-based
    std::vector<ExprPtr> children;

    static ExprPtr catalog(std::string token);
    static ExprPtr free_term();
    static ExprPtr coord(std::string var);
    static ExprPtr constant(Rat v);
    static ExprPtr neg(ExprPtr a);
    static ExprPtr add(ExprPtr a, ExprPtr b);
    static ExprPtr sub(ExprPtr a, ExprPtr b);
    static ExprPtr mul(ExprPtr a, ExprPtr b);
    static ExprPtr div(ExprPtr a, ExprPtr b);
    static ExprPtr pow(ExprPtr a, long e);
    static ExprPtr box(ExprPtr a);
    static ExprPtr tresse(ExprPtr a, int slot);

    std::string str() const;
};

// Catalog tokens with the (dimension, symbol degree) they apply to.
struct CatalogTokenInfo {
    int n;
    int k;
};
const std::map<std::string, CatalogTokenInfo>& catalog_tokens();

// Frame DSL: comma-separated expressions over the catalog tokens, `free`,
// `box(<expr>)`, `tresse(<expr>, <i>)`, coordinate names, rational constants,
// arithmetic and integer powers. A catalog token may be written `Jq(sym)`.
std::vector<ExprPtr> parse_frame(const std::string& text,
                                 const std::vector<std::string>& coord_vars);
ExprPtr parse_invariant_expr(const std::string& text,
                             const std::vector<std::string>& coord_vars);

} // namespace tresse

#endif
