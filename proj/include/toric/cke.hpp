#pragma once

#include "toric/parametric.hpp"
#include "toric/polynomial.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace toric {

// Largest window symmetric under c <-> 1-c inside the chamber; nullopt when
// the reflection leaves the chamber entirely.
std::optional<std::pair<Rational, Rational>> symmetric_window(const Chamber& ch);

// Index of the single coordinate whose moment polynomial is nonzero.
// nullopt when none or several are nonzero.
std::optional<std::size_t> moment_axis(const FamilyPolynomials& fp);

// Coordinates other than `axis` whose moment polynomial fails to vanish.
std::vector<std::size_t> verify_reduction(const FamilyPolynomials& fp, std::size_t axis);

// N(c) = m(c) V(1-c) + m(1-c) V(c), cleared to coprime integer coefficients
// with positive leading coefficient. Zero polynomial iff the combination
// cancels identically.
Poly coupled_equation(const FamilyPolynomials& fp, std::size_t axis);

enum class KahlerVerdict { Valid, Invalid, Undecided };

// Valid: every inequality is facet-defining on the chamber and the root lies
// strictly inside (lo, hi). Undecided: still straddling an endpoint at
// interval width 1e-12.
KahlerVerdict kahler_check(const Chamber& ch, const Rational& lo, const Rational& hi,
                           IsolatingInterval root);

struct RootFinding {
    IsolatingInterval interval;
    std::string decimal;  // 6 places
    KahlerVerdict verdict = KahlerVerdict::Invalid;
};

struct OrbitSolve {
    bool window_empty = false;        // symmetric window degenerated
    Rational win_lo, win_hi;          // meaningful unless window_empty
    bool moment_zero = false;         // axis moment vanishes identically
    bool numerator_zero = false;      // nonzero moment but N cancels: all c solve
    Poly numerator;
    std::vector<RootFinding> roots;   // all real roots of N
    bool any_valid = false;
    bool decisive = true;             // no Undecided verdicts
};

// Full treatment of one parametrized family along its moment axis. Throws
// degenerate_error when the off-axis moments do not vanish.
OrbitSolve solve_orbit(const FamilyPolynomials& fp, std::size_t axis);

}  // namespace toric
