#include "toric/cke.hpp"

#include <algorithm>

namespace toric {

std::optional<std::pair<Rational, Rational>> symmetric_window(const Chamber& ch) {
    const Rational a = std::max(ch.lo, Rational(1) - ch.hi);
    const Rational b = std::min(ch.hi, Rational(1) - ch.lo);
    if (!(a < b)) return std::nullopt;
    return std::make_pair(a, b);
}

std::optional<std::size_t> moment_axis(const FamilyPolynomials& fp) {
    std::optional<std::size_t> axis;
    for (std::size_t j = 0; j < fp.moment_polys.size(); ++j) {
        if (fp.moment_polys[j].is_zero()) continue;
        if (axis) return std::nullopt;
        axis = j;
    }
    return axis;
}

std::vector<std::size_t> verify_reduction(const FamilyPolynomials& fp, std::size_t axis) {
    std::vector<std::size_t> bad;
    for (std::size_t j = 0; j < fp.moment_polys.size(); ++j)
        if (j != axis && !fp.moment_polys[j].is_zero()) bad.push_back(j);
    return bad;
}

Poly coupled_equation(const FamilyPolynomials& fp, std::size_t axis) {
    const Poly& m = fp.moment_polys.at(axis);
    const Poly& v = fp.volume_poly;
    const Poly mr = compose_affine(m, Rational(1), Rational(-1));
    const Poly vr = compose_affine(v, Rational(1), Rational(-1));
    const Poly n = m * vr + mr * v;
    if (n.is_zero()) return n;
    return poly_from_integers(primitive_integer_form(n).coeffs);
}

KahlerVerdict kahler_check(const Chamber& ch, const Rational& lo, const Rational& hi,
                           IsolatingInterval root) {
    for (bool active : ch.signature.facet_active)
        if (!active) return KahlerVerdict::Invalid;
    if (!(lo < hi)) return KahlerVerdict::Invalid;
    const Rational min_width(1, 1000000000000LL);
    while (true) {
        if (root.exact)
            return (lo < *root.exact && *root.exact < hi) ? KahlerVerdict::Valid
                                                          : KahlerVerdict::Invalid;
        // non-exact isolation brackets the root strictly: lo < root < hi
        if (root.lo >= lo && root.hi <= hi) return KahlerVerdict::Valid;
        if (root.hi <= lo || root.lo >= hi) return KahlerVerdict::Invalid;
        const Rational width = root.hi - root.lo;
        if (width < min_width) return KahlerVerdict::Undecided;
        root = refine_root(root, width / 4);
    }
}

OrbitSolve solve_orbit(const FamilyPolynomials& fp, std::size_t axis) {
    if (axis >= fp.moment_polys.size()) throw input_error("moment axis out of range");
    const auto bad = verify_reduction(fp, axis);
    if (!bad.empty())
        throw degenerate_error("moment polynomials are not supported on a single axis");

    OrbitSolve os;
    const auto sw = symmetric_window(fp.chamber);
    if (sw) {
        os.win_lo = sw->first;
        os.win_hi = sw->second;
    } else {
        os.window_empty = true;
    }

    const Poly& m = fp.moment_polys[axis];
    if (m.is_zero()) {
        os.moment_zero = true;
        return os;
    }

    os.numerator = coupled_equation(fp, axis);
    if (os.numerator.is_zero()) {
        // every admissible parameter solves the moment condition
        os.numerator_zero = true;
        if (!os.window_empty) {
            IsolatingInterval r;
            r.exact = (os.win_lo + os.win_hi) / 2;
            r.lo = *r.exact;
            r.hi = *r.exact;
            RootFinding f;
            f.interval = r;
            f.decimal = decimal_string(r, 6);
            f.verdict = kahler_check(fp.chamber, os.win_lo, os.win_hi, r);
            os.any_valid = f.verdict == KahlerVerdict::Valid;
            os.decisive = f.verdict != KahlerVerdict::Undecided;
            os.roots.push_back(std::move(f));
        }
        return os;
    }

    // isolate every real root (Cauchy bound), then test each one
    const auto& c = os.numerator.coeffs();
    Rational bound(1);
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        const Rational q = abs_rat(c[i] / c.back());
        if (q > bound) bound = q;
    }
    bound += 1;
    for (auto& r : isolate_real_roots(os.numerator, -bound - 1, bound + 1)) {
        RootFinding f;
        f.interval = r;
        f.decimal = decimal_string(r, 6);
        f.verdict = os.window_empty ? KahlerVerdict::Invalid
                                    : kahler_check(fp.chamber, os.win_lo, os.win_hi, r);
        if (f.verdict == KahlerVerdict::Valid) os.any_valid = true;
        if (f.verdict == KahlerVerdict::Undecided) os.decisive = false;
        os.roots.push_back(std::move(f));
    }
    return os;
}

}  // namespace toric
