#pragma once

#include "chroma/graph.hpp"

#include <string>
#include <vector>

namespace chroma {

// Constructor expression language:
//   expr   := term { "+" term }                      join
//   term   := factor { ("*"|"&"|"x"|"u") factor }    Sabidussi | Shannon | Cartesian | union
//   factor := atom | func "(" args ")" | "(" expr ")"
//   func   := "bary" | "susp" | "comp" | "refine"
//   atom   := C<int> | K<int> | P<int> | Path<int> | OCT | ICO | CELL600 | file:<path>
// Operators are left-associative; the four term operators share one
// precedence level. P<int> is <int> isolated points. refine takes an
// explicit vertex pair: refine(expr, u, v).
struct Expr {
    enum class Kind {
        Atom, File,
        Join, Sabidussi, Shannon, Cartesian, Union,
        Bary, Susp, Comp, Refine,
    };
    Kind kind = Kind::Atom;
    std::string text;       // atom name or file path
    std::vector<Expr> args;
    int u = -1, v = -1;     // refine vertex pair

    friend bool operator==(const Expr& a, const Expr& b);
};

Expr parse_expr(const std::string& text); // throws ParseError with position
std::string to_string(const Expr& e);     // reparses to an identical AST

Graph eval(const Expr& e);
Graph eval_expr(const std::string& text);

} // namespace chroma
