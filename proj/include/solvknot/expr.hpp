#pragma once

// Text syntax for group elements and automorphisms.
//
//   product := factor ( '*'? factor )*
//   factor  := primary ( '^' integer | "'" )*
//   primary := identifier | '(' product ')'
//
// In the G6 context the identifiers are x, y, z (elements) and a b c d e f i j
// (automorphisms). In a Gamma context they are u, v, z (elements) and b, r,
// cu, cv, cz, k[m,n] (automorphisms). An element g standing among automorphisms
// means conjugation by g. Products are evaluated left to right; the empty
// string is the identity.

#include "solvknot/g6_aut.hpp"
#include "solvknot/gamma_aut.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace solvknot::expr {

enum class Context { G6, Gamma };

struct ParseError : std::invalid_argument {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : std::invalid_argument(what + " at position " + std::to_string(pos)), position(pos) {}
};

struct Factor {
    std::string name;               // identifier; empty for a parenthesized group
    std::vector<long long> args;    // k[m,n] parameters
    std::vector<Factor> group;      // contents of ( ... )
    long long exponent = 1;
    std::size_t position = 0;       // offset of the factor in the source text

    bool operator==(const Factor& o) const {
        return name == o.name && args == o.args && group == o.group && exponent == o.exponent;
    }
};

struct Expression {
    std::vector<Factor> factors;
    bool operator==(const Expression& o) const { return factors == o.factors; }
};

namespace detail {

inline bool is_element_name(Context c, const std::string& n) {
    return c == Context::G6 ? (n == "x" || n == "y" || n == "z") : (n == "u" || n == "v" || n == "z");
}

class Parser {
public:
    Parser(const std::string& text, Context c) : s_(text), c_(c) {}

    Expression parse() {
        Expression e{product()};
        skip();
        if (p_ != s_.size()) {
            if (s_[p_] == ')') throw ParseError("unbalanced ')'", p_);
            throw ParseError(std::string("unexpected '") + s_[p_] + "'", p_);
        }
        return e;
    }

private:
    void skip() {
        while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
    }
    bool at_factor_start() {
        skip();
        return p_ < s_.size() && (s_[p_] == '(' || std::isalpha(static_cast<unsigned char>(s_[p_])));
    }

    std::vector<Factor> product() {
        std::vector<Factor> out;
        bool needFactor = false;
        for (;;) {
            skip();
            if (p_ < s_.size() && s_[p_] == '*') {
                if (out.empty() || needFactor) throw ParseError("'*' without a left operand", p_);
                ++p_;
                needFactor = true;
                continue;
            }
            if (!at_factor_start()) break;
            out.push_back(factor());
            needFactor = false;
        }
        if (needFactor) throw ParseError("'*' without a right operand", p_);
        return out;
    }

    long long integer() {
        skip();
        std::size_t start = p_;
        if (p_ < s_.size() && (s_[p_] == '-' || s_[p_] == '+')) ++p_;
        std::size_t digits = p_;
        while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
        if (p_ == digits) throw ParseError("expected an integer", start);
        try {
            return std::stoll(s_.substr(start, p_ - start));
        } catch (const std::out_of_range&) {
            throw ParseError("integer out of range", start);
        }
    }

    void expect(char ch) {
        skip();
        if (p_ >= s_.size() || s_[p_] != ch) throw ParseError(std::string("expected '") + ch + "'", p_);
        ++p_;
    }

    Factor factor() {
        skip();
        Factor f;
        f.position = p_;
        if (s_[p_] == '(') {
            ++p_;
            f.group = product();
            skip();
            if (p_ >= s_.size() || s_[p_] != ')') throw ParseError("missing ')'", f.position);
            ++p_;
        } else {
            f.name = identifier();
            if (f.name == "k") {
                expect('[');
                f.args.push_back(integer());
                expect(',');
                f.args.push_back(integer());
                expect(']');
            }
        }
        for (;;) {
            skip();
            if (p_ < s_.size() && s_[p_] == '^') {
                ++p_;
                f.exponent *= integer();
            } else if (p_ < s_.size() && s_[p_] == '\'') {
                ++p_;
                f.exponent = -f.exponent;
            } else {
                break;
            }
        }
        return f;
    }

    std::string identifier() {
        const std::size_t start = p_;
        const char ch = s_[p_];
        if (c_ == Context::G6) {
            static const std::string alphabet = "xyzabcdefij";
            if (alphabet.find(ch) == std::string::npos)
                throw ParseError(std::string("unknown identifier '") + ch + "'", start);
            ++p_;
            return std::string(1, ch);
        }
        if (ch == 'c') {
            if (p_ + 1 < s_.size() && (s_[p_ + 1] == 'u' || s_[p_ + 1] == 'v' || s_[p_ + 1] == 'z')) {
                p_ += 2;
                return s_.substr(start, 2);
            }
            throw ParseError("unknown identifier 'c' (expected cu, cv or cz)", start);
        }
        static const std::string alphabet = "uvzbrk";
        if (alphabet.find(ch) == std::string::npos)
            throw ParseError(std::string("unknown identifier '") + ch + "'", start);
        ++p_;
        return std::string(1, ch);
    }

    const std::string& s_;
    Context c_;
    std::size_t p_ = 0;
};

inline bool all_elements(Context c, const std::vector<Factor>& fs) {
    for (const auto& f : fs) {
        if (f.name.empty()) {
            if (!all_elements(c, f.group)) return false;
        } else if (!is_element_name(c, f.name)) {
            return false;
        }
    }
    return true;
}

template <class T, class Atom>
T evaluate(const std::vector<Factor>& fs, const T& identity, Atom&& atom) {
    T acc = identity;
    for (const auto& f : fs) {
        T base = f.name.empty() ? evaluate(f.group, identity, atom) : atom(f);
        acc = acc * base.pow(f.exponent);
    }
    return acc;
}

inline void print(const std::vector<Factor>& fs, std::string& out) {
    for (std::size_t i = 0; i < fs.size(); ++i) {
        const Factor& f = fs[i];
        if (i) out += '*';
        if (f.name.empty()) {
            out += '(';
            print(f.group, out);
            out += ')';
        } else {
            out += f.name;
            if (!f.args.empty()) out += "[" + std::to_string(f.args[0]) + "," + std::to_string(f.args[1]) + "]";
        }
        if (f.exponent != 1) out += "^" + std::to_string(f.exponent);
    }
}

}  // namespace detail

inline Expression parse_expression(const std::string& text, Context c) { return detail::Parser(text, c).parse(); }

// Canonical text; parse_expression(print(x), c) == x.
inline std::string print(const Expression& e) {
    std::string out;
    detail::print(e.factors, out);
    return out;
}

inline bool is_element_expression(const Expression& e, Context c) { return detail::all_elements(c, e.factors); }

// ---- G6 ---------------------------------------------------------------------

struct G6Value {
    AffineIso value;  // the element, or the affine representative of the automorphism
    bool isElement = false;
};

inline G6Value eval_g6(const Expression& e) {
    AffineIso v = detail::evaluate(e.factors, AffineIso::identity(3), [](const Factor& f) {
        if (f.name.size() == 1 && detail::is_element_name(Context::G6, f.name)) return g6::generator(f.name[0]);
        return g6::named_rep(f.name[0]);
    });
    return {v, is_element_expression(e, Context::G6)};
}
inline G6Value eval_g6(const std::string& text) { return eval_g6(parse_expression(text, Context::G6)); }

// ---- Gamma(e, eta) ----------------------------------------------------------

using GammaValue = std::variant<nil::AffNil, nil::GammaAutomorphism>;

inline GammaValue eval_gamma(const Expression& e, const nil::GammaGroup& G) {
    auto element = [&](const Factor& f) { return G.generator(f.name[0]); };
    if (is_element_expression(e, Context::Gamma)) return detail::evaluate(e.factors, nil::AffNil(), element);
    const auto named = nil::named_auts(G);
    auto atom = [&](const Factor& f) -> nil::GammaAutomorphism {
        if (detail::is_element_name(Context::Gamma, f.name)) return nil::inner(G, element(f));
        if (f.name == "b") return named.b;
        if (f.name == "r") return named.r;
        if (f.name == "cu") return named.cu;
        if (f.name == "cv") return named.cv;
        if (f.name == "cz") return named.cz;
        auto k = nil::k_make(G, f.args[0], f.args[1]);
        if (!k.aut)
            throw ParseError("k[" + std::to_string(f.args[0]) + "," + std::to_string(f.args[1]) + "] is not defined on " +
                                 G.tag() + ": " + k.reason,
                             f.position);
        return *k.aut;
    };
    return detail::evaluate(e.factors, nil::GammaAutomorphism::identity(G), atom);
}
inline GammaValue eval_gamma(const std::string& text, const nil::GammaGroup& G) {
    return eval_gamma(parse_expression(text, Context::Gamma), G);
}

}  // namespace solvknot::expr
