#pragma once

// Univariate polynomials with rational coefficients. Used to check identities
// that hold for every value of a real parameter (points moving along a line or
// a curve) by a single exact computation instead of sampling.

#include "solvknot/rational.hpp"

#include <string>
#include <vector>

namespace solvknot {

class Poly {
public:
    Poly() = default;
    Poly(const Rational& c) { if (c != 0) c_.push_back(c); }
    Poly(int c) : Poly(Rational(c)) {}
    static Poly var() { Poly p; p.c_ = {Rational(0), Rational(1)}; return p; }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

    Rational operator()(const Rational& s) const {
        Rational v = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * s + *it;
        return v;
    }
    // Substitution p(q(s)).
    Poly compose(const Poly& q) const {
        Poly v;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * q + Poly(*it);
        return v;
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) { return *this += -o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) {
        Poly r = a;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.c_.empty() || b.c_.empty()) return Poly();
        Poly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        r.trim();
        return r;
    }
    friend Poly operator/(const Poly& a, const Rational& k) {
        Poly r = a;
        for (auto& x : r.c_) x /= k;
        return r;
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    // Only zero tests are meaningful for symbolic entries.
    friend bool operator==(const Poly& a, int k) { return a == Poly(k); }
    friend bool operator!=(const Poly& a, int k) { return !(a == k); }

    std::string str(const std::string& name = "s") const {
        if (c_.empty()) return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == 0) continue;
            std::string coef = to_string(c_[i]);
            std::string term = i == 0 ? coef
                             : (c_[i] == 1 ? "" : c_[i] == -1 ? "-" : coef + "*") + name +
                                   (i > 1 ? "^" + std::to_string(i) : "");
            if (!out.empty()) out += term[0] == '-' ? "" : "+";
            out += term;
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

inline std::string to_string(const Poly& p) { return p.str(); }

}  // namespace solvknot
