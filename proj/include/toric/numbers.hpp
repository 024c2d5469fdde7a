#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

using Integer  = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Thrown for malformed user-facing input (CLI exit code 1).
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when the geometry degenerates (unbounded/empty feasible set,
// uncertifiable chamber, ...).  CLI exit code 2.
struct degenerate_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Integer num(const Rational& q) { return Integer(numerator(q)); }
inline Integer den(const Rational& q) { return Integer(denominator(q)); }

inline int sign(const Rational& q) { return q.sign(); }
inline int sign(const Integer& z) { return z.sign(); }

inline Integer abs_int(const Integer& z) { return z < 0 ? Integer(-z) : z; }

inline Rational abs_rat(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline Integer gcd_int(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.backend().data(), a.backend().data(), b.backend().data());
    return g;
}

// floor(p/q) for exact rationals
inline Integer floor_rat(const Rational& q) {
    Integer f;
    mpz_fdiv_q(f.backend().data(), numerator(q).backend().data(),
               denominator(q).backend().data());
    return f;
}

inline Integer ceil_rat(const Rational& q) {
    Integer c;
    mpz_cdiv_q(c.backend().data(), numerator(q).backend().data(),
               denominator(q).backend().data());
    return c;
}

std::string to_string(const Integer& z);

// Canonical "p/q" (q omitted when 1).  parse_rational accepts the same shape.
std::string to_string(const Rational& q);

Rational parse_rational(const std::string& text);

// Decimal expansion of an exact rational to `digits` places after the point,
// rounding half away from zero.  Presentation only -- verdicts never touch this.
std::string decimal_string(const Rational& q, int digits);

}  // namespace toric
