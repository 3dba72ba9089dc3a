#pragma once

// Exact scalars. Every quantity in the library is an arbitrary-precision
// integer or rational; nothing is ever rounded.

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace solvknot {

// GMP backends without expression templates, so `auto` always holds a value.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

inline Integer num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer den(const Rational& r) { return boost::multiprecision::denominator(r); }

// n/d with the sign moved to the numerator first, so callers never depend
// on how a backend treats a negative denominator.
inline Rational ratio(Integer n, Integer d) {
    if (d == 0) throw std::domain_error("zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    return Rational(n, d);
}

inline bool is_integral(const Rational& r) { return den(r) == 1; }

inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
    return q;
}

inline Integer floor(const Rational& r) { return floor_div(num(r), den(r)); }

// Least nonnegative residue of a modulo m (m > 0).
inline Integer mod(const Integer& a, const Integer& m) {
    Integer r = a % m;
    if (r < 0) r += m;
    return r;
}

inline Integer gcd(Integer a, Integer b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Integer t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline Integer lcm(const Integer& a, const Integer& b) {
    if (a == 0 || b == 0) return 0;
    Integer g = gcd(a, b);
    Integer l = a / g * b;
    return l < 0 ? Integer(-l) : l;
}

inline Integer to_integer(const Rational& r) {
    if (!is_integral(r)) throw std::domain_error("rational is not an integer");
    return num(r);
}

inline long long to_ll(const Integer& z) { return z.convert_to<long long>(); }

// Canonical text form: "p/q", with "/q" omitted when q = 1.
inline std::string to_string(const Rational& r) {
    if (is_integral(r)) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

inline std::string to_string(const Integer& z) { return z.str(); }

inline Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        Integer p(text.substr(0, slash));
        Integer q(text.substr(slash + 1));
        if (q == 0) throw std::invalid_argument("zero denominator");
        return ratio(p, q);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational: " + text);
    }
}

}  // namespace solvknot
