#pragma once

#include "toric/numbers.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace toric {

// Univariate polynomial over Q, coefficients lowest-degree first.
// Zero polynomial <=> empty coefficient vector.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }
    static Poly constant(const Rational& a) { return Poly({a}); }
    static Poly x() { return Poly({Rational(0), Rational(1)}); }

    const std::vector<Rational>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Rational coeff(std::size_t k) const {
        return k < c_.size() ? c_[k] : Rational(0);
    }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    Rational operator()(const Rational& x) const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& s) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    Poly derivative() const;

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

// quotient/remainder with deg(rem) < deg(divisor)
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

// monic gcd (or zero if both zero)
Poly poly_gcd(Poly a, Poly b);

// p with repeated roots stripped: p / gcd(p, p')
Poly square_free_part(const Poly& p);

// p(a + b*x)
Poly compose_affine(const Poly& p, const Rational& a, const Rational& b);

// unique interpolant of degree < #points (abscissae must be distinct)
Poly interpolate(const std::vector<std::pair<Rational, Rational>>& points);

// Integer coefficient form after clearing denominators and removing content,
// sign-normalized to positive leading coefficient; empty for the zero polynomial.
struct PrimitiveForm {
    std::vector<Integer> coeffs;  // lowest first, coprime, leading > 0
    Rational scale;               // p = scale * primitive
};
PrimitiveForm primitive_integer_form(const Poly& p);

Poly poly_from_integers(const std::vector<Integer>& coeffs);

// One real root of `poly` in (lo, hi]; degenerate (lo == hi, exact set) when the
// root is known rational.  `poly` is square-free.
struct IsolatingInterval {
    Rational lo;
    Rational hi;
    Poly poly;
    std::optional<Rational> exact;
};

// Sturm chain of a square-free polynomial.
std::vector<Poly> sturm_chain(const Poly& p);

// number of distinct real roots in (a, b]
int count_roots(const std::vector<Poly>& chain, const Rational& a, const Rational& b);

// Distinct real roots of p in the OPEN interval (lo, hi), each wrapped in a
// pairwise-disjoint isolating interval, sorted increasingly.  Exact rational
// roots come back degenerate.
std::vector<IsolatingInterval> isolate_real_roots(const Poly& p, const Rational& lo,
                                                  const Rational& hi);

// Bisect until hi - lo <= width (no-op on degenerate intervals; may collapse
// to a degenerate interval if a bisection point hits the root).
IsolatingInterval refine_root(IsolatingInterval r, const Rational& width);

// Decimal presentation of the unique root, correctly rounded to `digits` places.
std::string decimal_string(const IsolatingInterval& r, int digits);

}  // namespace toric
