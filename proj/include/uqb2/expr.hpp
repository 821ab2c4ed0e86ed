#pragma once

// Expression syntax for algebra elements.
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/' | <juxtaposition>) unary)*
//   unary  := ('-' | '+') unary | power
//   power  := atom ('^' exponent)?
//   atom   := integer | identifier | '(' expr ')'
//   exponent := ['-'] integer | '(' ['-'] integer ')'
//
// Identifiers: e1 e2 e3 z zt z1 zp q.  Division and negative exponents are
// only allowed on scalars, so rationals and q^-k are expressible.

#include "cyclotomic.hpp"
#include "pbw.hpp"
#include "structure.hpp"

#include <cctype>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace uqb2::expr {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const noexcept { return pos_; }

private:
    std::size_t pos_;
};

/// Raised while evaluating a well-formed expression (e.g. division by a
/// non-scalar).
class EvalError : public std::runtime_error {
public:
    EvalError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const noexcept { return pos_; }

private:
    std::size_t pos_;
};

struct Node {
    enum class Kind { integer, ident, neg, add, sub, mul, div, pow };
    Kind kind;
    std::size_t pos = 0;
    std::string text;          // integer digits or identifier name
    long long exponent = 0;    // for pow
    std::unique_ptr<Node> lhs, rhs;
};

using NodePtr = std::unique_ptr<Node>;

namespace detail {

inline NodePtr make(Node::Kind k, std::size_t pos) {
    auto n = std::make_unique<Node>();
    n->kind = k;
    n->pos = pos;
    return n;
}

inline NodePtr binary(Node::Kind k, std::size_t pos, NodePtr a, NodePtr b) {
    auto n = make(k, pos);
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    return n;
}

class Parser {
public:
    explicit Parser(std::string src) : s_(std::move(src)) {}

    NodePtr parse() {
        skip();
        if (at_end()) throw ParseError("empty expression", pos_);
        NodePtr e = expr();
        skip();
        if (!at_end()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
        return e;
    }

private:
    bool at_end() const { return pos_ >= s_.size(); }
    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip();
        return at_end() ? '\0' : s_[pos_];
    }
    bool starts_atom() {
        const char c = peek();
        return c == '(' || std::isalnum(static_cast<unsigned char>(c));
    }

    NodePtr expr() {
        NodePtr lhs = term();
        for (;;) {
            const char c = peek();
            if (c != '+' && c != '-') return lhs;
            const std::size_t at = pos_++;
            lhs = binary(c == '+' ? Node::Kind::add : Node::Kind::sub, at, std::move(lhs), term());
        }
    }

    NodePtr term() {
        NodePtr lhs = unary();
        for (;;) {
            const char c = peek();
            if (c == '*' || c == '/') {
                const std::size_t at = pos_++;
                lhs = binary(c == '*' ? Node::Kind::mul : Node::Kind::div, at, std::move(lhs), unary());
            } else if (starts_atom()) {
                const std::size_t at = pos_;
                lhs = binary(Node::Kind::mul, at, std::move(lhs), unary());
            } else {
                return lhs;
            }
        }
    }

    NodePtr unary() {
        const char c = peek();
        if (c == '-' || c == '+') {
            const std::size_t at = pos_++;
            NodePtr inner = unary();
            if (c == '+') return inner;
            auto n = make(Node::Kind::neg, at);
            n->lhs = std::move(inner);
            return n;
        }
        return power();
    }

    NodePtr power() {
        NodePtr base = atom();
        if (peek() != '^') return base;
        const std::size_t at = pos_++;
        auto n = make(Node::Kind::pow, at);
        n->lhs = std::move(base);
        n->exponent = exponent();
        return n;
    }

    long long exponent() {
        bool paren = false;
        if (peek() == '(') {
            paren = true;
            ++pos_;
        }
        bool negative = false;
        if (peek() == '-' || peek() == '+') negative = s_[pos_++] == '-';
        skip();
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected an integer exponent", start);
        if (pos_ - start > 9) throw ParseError("exponent too large", start);
        long long e = std::stoll(s_.substr(start, pos_ - start));
        if (paren) {
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
        }
        return negative ? -e : e;
    }

    NodePtr atom() {
        const char c = peek();
        const std::size_t at = pos_;
        if (c == '(') {
            ++pos_;
            NodePtr e = expr();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            auto n = make(Node::Kind::integer, at);
            n->text = s_.substr(at, pos_ - at);
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (!at_end() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            auto n = make(Node::Kind::ident, at);
            n->text = s_.substr(at, pos_ - at);
            return n;
        }
        if (at_end()) throw ParseError("unexpected end of input", at);
        throw ParseError(std::string("unexpected '") + c + "'", at);
    }

    std::string s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline NodePtr parse(const std::string& src) { return detail::Parser(src).parse(); }

inline const std::vector<std::string>& identifiers() {
    static const std::vector<std::string> ids{"e1", "e2", "e3", "z", "zt", "z1", "zp", "q"};
    return ids;
}

inline PbwElement identifier_value(const FieldContext& f, const std::string& name, std::size_t pos) {
    using structure::Named;
    if (name == "e1") return pbw::gen(f, Gen::e1);
    if (name == "e2") return pbw::gen(f, Gen::e2);
    if (name == "e3") return pbw::gen(f, Gen::e3);
    if (name == "z") return pbw::gen(f, Gen::z);
    if (name == "zt") return structure::named(f, Named::z_tilde);
    if (name == "z1") return structure::named(f, Named::z_one);
    if (name == "zp") return structure::named(f, Named::z_prime);
    if (name == "q") return PbwElement::scalar(CycNum::q_pow(f, 1));
    throw EvalError("unknown identifier '" + name + "'", pos);
}

inline PbwElement eval(const FieldContext& f, const Node& n) {
    using K = Node::Kind;
    switch (n.kind) {
    case K::integer: return PbwElement::scalar(CycNum(f, mpq_class(mpz_class(n.text))));
    case K::ident: return identifier_value(f, n.text, n.pos);
    case K::neg: return -eval(f, *n.lhs);
    case K::add: return eval(f, *n.lhs) + eval(f, *n.rhs);
    case K::sub: return eval(f, *n.lhs) - eval(f, *n.rhs);
    case K::mul: return eval(f, *n.lhs) * eval(f, *n.rhs);
    case K::div: {
        const PbwElement d = eval(f, *n.rhs);
        if (!d.is_scalar()) throw EvalError("division by a non-scalar", n.pos);
        if (d.is_zero()) throw EvalError("division by zero", n.pos);
        return eval(f, *n.lhs) * d.scalar_value().inverse();
    }
    case K::pow: {
        const PbwElement base = eval(f, *n.lhs);
        if (n.exponent >= 0) {
            if (base.is_scalar()) return PbwElement::scalar(base.scalar_value().pow(n.exponent));
            return pbw::power(base, static_cast<int>(n.exponent));
        }
        if (!base.is_scalar()) throw EvalError("negative exponent on a non-scalar", n.pos);
        if (base.is_zero()) throw EvalError("zero raised to a negative power", n.pos);
        return PbwElement::scalar(base.scalar_value().pow(n.exponent));
    }
    }
    throw EvalError("bad expression node", n.pos);
}

inline PbwElement eval(const FieldContext& f, const std::string& src) { return eval(f, *parse(src)); }

/// A scalar-valued expression, e.g. a module parameter like "q^-2" or "1/3".
inline CycNum eval_scalar(const FieldContext& f, const std::string& src) {
    const PbwElement v = eval(f, src);
    if (!v.is_scalar()) throw EvalError("expected a scalar, got an algebra element", 0);
    return v.scalar_value();
}

/// A basis monomial in the input syntax, e.g. "z*e3^2*e2"; "1" for the unit.
inline std::string monomial_to_expr(const Monomial& mono) {
    std::string out;
    auto factor = [&](const char* g, int e) {
        if (e == 0) return;
        if (!out.empty()) out += "*";
        out += g;
        if (e > 1) out += "^" + std::to_string(e);
    };
    factor("z", mono.i);
    factor("e3", mono.j);
    factor("e1", mono.k);
    factor("e2", mono.n);
    return out.empty() ? "1" : out;
}

/// Prints in the input syntax: "(coeff)*z^i*e3^j*e1^k*e2^n" summed in
/// lexicographic term order.  Parsing the output gives back the element.
inline std::string to_expr(const PbwElement& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (const auto& [mono, c] : a.terms()) {
        if (!out.empty()) out += " + ";
        out += "(" + c.to_string() + ")";
        if (!mono.is_unit()) out += "*" + monomial_to_expr(mono);
    }
    return out;
}

}  // namespace uqb2::expr
