#include "chroma/expr.hpp"

#include "chroma/builders.hpp"
#include "chroma/graph_io.hpp"

#include <cctype>

namespace chroma {

bool operator==(const Expr& a, const Expr& b) {
    return a.kind == b.kind && a.text == b.text && a.u == b.u && a.v == b.v && a.args == b.args;
}

namespace {

struct Token {
    enum class Type { Ident, Number, File, Plus, Star, Amp, LParen, RParen, Comma, End };
    Type type;
    std::string text;
    std::size_t pos;
};

struct Lexer {
    const std::string& src;
    std::size_t i = 0;

    explicit Lexer(const std::string& s) : src(s) {}

    Token next() {
        while (i < src.size() && std::isspace(static_cast<unsigned char>(src[i]))) ++i;
        std::size_t start = i;
        if (i >= src.size()) return {Token::Type::End, "", start};
        char c = src[i];
        switch (c) {
            case '+': ++i; return {Token::Type::Plus, "+", start};
            case '*': ++i; return {Token::Type::Star, "*", start};
            case '&': ++i; return {Token::Type::Amp, "&", start};
            case '(': ++i; return {Token::Type::LParen, "(", start};
            case ')': ++i; return {Token::Type::RParen, ")", start};
            case ',': ++i; return {Token::Type::Comma, ",", start};
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
            return {Token::Type::Number, src.substr(start, i - start), start};
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (i < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_'))
                ++i;
            std::string word = src.substr(start, i - start);
            if (word == "file" && i < src.size() && src[i] == ':') {
                ++i;
                std::size_t p = i;
                while (i < src.size() && !std::isspace(static_cast<unsigned char>(src[i])) &&
                       src[i] != ')' && src[i] != ',')
                    ++i;
                return {Token::Type::File, src.substr(p, i - p), start};
            }
            return {Token::Type::Ident, word, start};
        }
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
};

struct Parser {
    Lexer lex;
    Token cur;

    explicit Parser(const std::string& s) : lex(s) { cur = lex.next(); }

    void advance() { cur = lex.next(); }

    void expect(Token::Type t, const char* what) {
        if (cur.type != t) throw ParseError(std::string("expected ") + what, cur.pos);
        advance();
    }

    Expr parse() {
        Expr e = expr();
        if (cur.type != Token::Type::End) throw ParseError("trailing input", cur.pos);
        return e;
    }

    Expr expr() {
        Expr left = term();
        while (cur.type == Token::Type::Plus) {
            advance();
            Expr node;
            node.kind = Expr::Kind::Join;
            node.args = {std::move(left), term()};
            left = std::move(node);
        }
        return left;
    }

    Expr term() {
        Expr left = factor();
        for (;;) {
            Expr::Kind kind;
            if (cur.type == Token::Type::Star)
                kind = Expr::Kind::Sabidussi;
            else if (cur.type == Token::Type::Amp)
                kind = Expr::Kind::Shannon;
            else if (cur.type == Token::Type::Ident && cur.text == "x")
                kind = Expr::Kind::Cartesian;
            else if (cur.type == Token::Type::Ident && cur.text == "u")
                kind = Expr::Kind::Union;
            else
                break;
            advance();
            Expr node;
            node.kind = kind;
            node.args = {std::move(left), factor()};
            left = std::move(node);
        }
        return left;
    }

    Expr factor() {
        if (cur.type == Token::Type::LParen) {
            advance();
            Expr e = expr();
            expect(Token::Type::RParen, "')'");
            return e;
        }
        if (cur.type == Token::Type::File) {
            Expr e;
            e.kind = Expr::Kind::File;
            e.text = cur.text;
            advance();
            return e;
        }
        if (cur.type != Token::Type::Ident)
            throw ParseError("expected a generator, function or '('", cur.pos);

        std::string word = cur.text;
        std::size_t pos = cur.pos;
        if (word == "bary" || word == "susp" || word == "comp" || word == "refine") {
            advance();
            expect(Token::Type::LParen, "'('");
            Expr node;
            node.args.push_back(expr());
            if (word == "refine") {
                node.kind = Expr::Kind::Refine;
                expect(Token::Type::Comma, "','");
                node.u = number("refine: first vertex");
                expect(Token::Type::Comma, "','");
                node.v = number("refine: second vertex");
            } else {
                node.kind = word == "bary"   ? Expr::Kind::Bary
                            : word == "susp" ? Expr::Kind::Susp
                                             : Expr::Kind::Comp;
            }
            expect(Token::Type::RParen, "')'");
            return node;
        }
        advance();
        Expr e;
        e.kind = Expr::Kind::Atom;
        e.text = word;
        validate_atom(e.text, pos);
        return e;
    }

    int number(const char* what) {
        if (cur.type != Token::Type::Number)
            throw ParseError(std::string(what) + ": expected a number", cur.pos);
        int value;
        try {
            value = std::stoi(cur.text);
        } catch (const std::exception&) {
            throw ParseError(std::string(what) + ": number out of range", cur.pos);
        }
        advance();
        return value;
    }

    static void validate_atom(const std::string& name, std::size_t pos) {
        if (name == "OCT" || name == "ICO" || name == "CELL600") return;
        for (const char* prefix : {"Path", "C", "K", "P"}) {
            std::string p(prefix);
            if (name.size() > p.size() && name.compare(0, p.size(), p) == 0) {
                bool digits = true;
                for (std::size_t i = p.size(); i < name.size(); ++i)
                    if (!std::isdigit(static_cast<unsigned char>(name[i]))) digits = false;
                if (digits) return;
            }
        }
        throw ParseError("unknown generator '" + name + "'", pos);
    }
};

int precedence(Expr::Kind k) {
    switch (k) {
        case Expr::Kind::Join: return 1;
        case Expr::Kind::Sabidussi:
        case Expr::Kind::Shannon:
        case Expr::Kind::Cartesian:
        case Expr::Kind::Union: return 2;
        default: return 3;
    }
}

const char* op_symbol(Expr::Kind k) {
    switch (k) {
        case Expr::Kind::Join: return " + ";
        case Expr::Kind::Sabidussi: return " * ";
        case Expr::Kind::Shannon: return " & ";
        case Expr::Kind::Cartesian: return " x ";
        case Expr::Kind::Union: return " u ";
        default: return "";
    }
}

void print(const Expr& e, std::string& out) {
    switch (e.kind) {
        case Expr::Kind::Atom:
            out += e.text;
            return;
        case Expr::Kind::File:
            out += "file:" + e.text;
            return;
        case Expr::Kind::Bary:
        case Expr::Kind::Susp:
        case Expr::Kind::Comp: {
            out += e.kind == Expr::Kind::Bary ? "bary(" : e.kind == Expr::Kind::Susp ? "susp(" : "comp(";
            print(e.args[0], out);
            out += ")";
            return;
        }
        case Expr::Kind::Refine:
            out += "refine(";
            print(e.args[0], out);
            out += ", " + std::to_string(e.u) + ", " + std::to_string(e.v) + ")";
            return;
        default: {
            const int prec = precedence(e.kind);
            bool lparen = precedence(e.args[0].kind) < prec;
            bool rparen = precedence(e.args[1].kind) <= prec; // keep left association
            if (lparen) out += "(";
            print(e.args[0], out);
            if (lparen) out += ")";
            out += op_symbol(e.kind);
            if (rparen) out += "(";
            print(e.args[1], out);
            if (rparen) out += ")";
            return;
        }
    }
}

Graph eval_atom(const std::string& name) {
    if (name == "OCT") return octahedron();
    if (name == "ICO") return icosahedron();
    if (name == "CELL600") return cell600();
    auto tail = [&](std::size_t k) {
        try {
            return std::stoi(name.substr(k));
        } catch (const std::exception&) {
            throw ParseError("generator size out of range in '" + name + "'");
        }
    };
    if (name.rfind("Path", 0) == 0) return path(tail(4));
    if (name[0] == 'C') return cycle(tail(1));
    if (name[0] == 'K') return complete(tail(1));
    if (name[0] == 'P') return points(tail(1));
    throw ParseError("unknown generator '" + name + "'");
}

} // namespace

Expr parse_expr(const std::string& text) { return Parser(text).parse(); }

std::string to_string(const Expr& e) {
    std::string out;
    print(e, out);
    return out;
}

Graph eval(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Atom: return eval_atom(e.text);
        case Expr::Kind::File: return load_graph(e.text);
        case Expr::Kind::Join: return join(eval(e.args[0]), eval(e.args[1]));
        case Expr::Kind::Sabidussi: return sabidussi(eval(e.args[0]), eval(e.args[1]));
        case Expr::Kind::Shannon: return shannon(eval(e.args[0]), eval(e.args[1]));
        case Expr::Kind::Cartesian: return cartesian(eval(e.args[0]), eval(e.args[1])).graph;
        case Expr::Kind::Union: return disjoint_union(eval(e.args[0]), eval(e.args[1]));
        case Expr::Kind::Bary: return barycentric(eval(e.args[0])).graph;
        case Expr::Kind::Susp: return suspension(eval(e.args[0]));
        case Expr::Kind::Comp: return complement(eval(e.args[0]));
        case Expr::Kind::Refine: return edge_refine(eval(e.args[0]), e.u, e.v);
    }
    throw ParseError("corrupt expression");
}

Graph eval_expr(const std::string& text) { return eval(parse_expr(text)); }

} // namespace chroma
