#include "toric/polynomial.hpp"

#include <algorithm>
#include <cassert>

namespace toric {

Rational Poly::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::operator-() const {
    std::vector<Rational> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return Poly(std::move(r));
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (c_.empty() || o.c_.empty()) return Poly();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(r));
}

Poly Poly::operator*(const Rational& s) const {
    std::vector<Rational> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
    return Poly(std::move(r));
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(Integer(i));
    return Poly(std::move(r));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::invalid_argument("divmod: zero divisor");
    std::vector<Rational> rem = a.coeffs();
    int db = b.degree();
    if (a.degree() < db) return {Poly(), a};
    std::vector<Rational> quot(a.degree() - db + 1, Rational(0));
    Rational lead = b.leading();
    for (int k = a.degree() - db; k >= 0; --k) {
        Rational f = rem[k + db] / lead;
        quot[k] = f;
        if (f == 0) continue;
        for (int j = 0; j <= db; ++j) rem[k + j] -= f * b.coeff(j);
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * (Rational(1) / a.leading());  // monic
}

Poly square_free_part(const Poly& p) {
    if (p.degree() <= 1) return p;
    Poly g = poly_gcd(p, p.derivative());
    if (g.degree() <= 0) return p;
    return divmod(p, g).first;
}

Poly compose_affine(const Poly& p, const Rational& a, const Rational& b) {
    Poly lin({a, b});
    Poly acc;
    for (int k = p.degree(); k >= 0; --k)
        acc = acc * lin + Poly::constant(p.coeff(k));
    return acc;
}

Poly interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw std::invalid_argument("interpolate: duplicate abscissa");
    Poly result;
    for (std::size_t i = 0; i < points.size(); ++i) {
        Poly basis = Poly::constant(Rational(1));
        Rational denom(1);
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            basis = basis * Poly({-points[j].first, Rational(1)});
            denom *= points[i].first - points[j].first;
        }
        result = result + basis * (points[i].second / denom);
    }
    return result;
}

PrimitiveForm primitive_integer_form(const Poly& p) {
    PrimitiveForm f;
    if (p.is_zero()) {
        f.scale = 0;
        return f;
    }
    Integer lcm_den(1);
    for (const auto& c : p.coeffs()) {
        Integer d = den(c);
        lcm_den = lcm_den / gcd_int(lcm_den, d) * d;
    }
    std::vector<Integer> ints;
    ints.reserve(p.coeffs().size());
    Integer content(0);
    for (const auto& c : p.coeffs()) {
        Rational scaled = c * Rational(lcm_den);
        ints.push_back(num(scaled));
        content = gcd_int(content, ints.back());
    }
    int lead_sign = sign(ints.back());
    if (lead_sign < 0) content = -content;
    for (auto& z : ints) z = z / content;
    f.coeffs = std::move(ints);
    f.scale = Rational(content, lcm_den);
    return f;
}

Poly poly_from_integers(const std::vector<Integer>& coeffs) {
    std::vector<Rational> c(coeffs.begin(), coeffs.end());
    return Poly(std::move(c));
}

std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain;
    if (p.is_zero()) return chain;
    chain.push_back(p);
    Poly d = p.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(d);
    while (true) {
        const Poly& a = chain[chain.size() - 2];
        const Poly& b = chain.back();
        Poly r = divmod(a, b).second;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

namespace {

int sign_variations(const std::vector<Poly>& chain, const Rational& x) {
    int count = 0, prev = 0;
    for (const auto& s : chain) {
        int sg = sign(s(x));
        if (sg == 0) continue;
        if (prev != 0 && sg != prev) ++count;
        prev = sg;
    }
    return count;
}

}  // namespace

int count_roots(const std::vector<Poly>& chain, const Rational& a, const Rational& b) {
    if (chain.empty()) return 0;
    return sign_variations(chain, a) - sign_variations(chain, b);
}

namespace {

// all positive divisors, or nullopt if n cannot be factored within the budget
std::optional<std::vector<Integer>> divisors_bounded(Integer n, long budget) {
    if (n < 0) n = -n;
    if (n == 0) return std::nullopt;
    std::vector<std::pair<Integer, int>> factors;
    Integer d(2);
    long steps = 0;
    while (n > 1) {
        if (++steps > budget) return std::nullopt;
        if (d * d > n) {
            factors.emplace_back(n, 1);
            break;
        }
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            factors.emplace_back(d, e);
        }
        d += (d == 2) ? 1 : 2;
    }
    std::vector<Integer> divs{Integer(1)};
    for (const auto& [prime, exp] : factors) {
        std::size_t base = divs.size();
        if (base * (exp + 1) > 4096) return std::nullopt;
        Integer pk(1);
        for (int e = 1; e <= exp; ++e) {
            pk *= prime;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

// rational roots of a square-free polynomial (complete when factoring succeeds)
std::vector<Rational> rational_roots(const Poly& squarefree) {
    std::vector<Rational> roots;
    Poly q = squarefree;
    if (q.is_zero() || q.degree() == 0) return roots;
    if (q.coeff(0) == 0) {
        roots.emplace_back(0);
        q = divmod(q, Poly::x()).first;  // square-free: x divides exactly once
        if (q.degree() == 0) return roots;
    }
    if (q.degree() == 1) {
        roots.push_back(-q.coeff(0) / q.coeff(1));
        return roots;
    }
    PrimitiveForm f = primitive_integer_form(q);
    auto nums = divisors_bounded(f.coeffs.front(), 100000);
    auto dens = divisors_bounded(f.coeffs.back(), 100000);
    if (!nums || !dens) return roots;  // incomplete: callers tolerate this
    if (nums->size() * dens->size() > 20000) return roots;
    for (const auto& p : *nums)
        for (const auto& s : *dens) {
            Rational cand(p, s);
            if (q(cand) == 0) roots.push_back(cand);
            if (q(-cand) == 0) roots.push_back(-cand);
        }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace

std::vector<IsolatingInterval> isolate_real_roots(const Poly& p, const Rational& lo,
                                                  const Rational& hi) {
    if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
    if (!(lo < hi)) throw std::invalid_argument("isolate_real_roots: empty window");
    Poly q = square_free_part(p);
    if (q.degree() == 0) return {};
    std::vector<Poly> chain = sturm_chain(q);

    // count over (lo, b] with b < hi chosen so that hi itself is excluded
    Rational b = hi;
    if (q(hi) == 0) {
        b = (lo + hi) / 2;
        while (count_roots(chain, b, hi) > 1) b = (b + hi) / 2;
        // exactly one root in (b, hi]: it is hi itself, which the open window drops
    }

    std::vector<IsolatingInterval> found;
    std::vector<Rational> exact_roots = rational_roots(q);

    // recursive half-open bisection: every produced interval holds one root
    std::vector<std::pair<Rational, Rational>> stack;
    if (count_roots(chain, lo, b) > 0) stack.emplace_back(lo, b);
    while (!stack.empty()) {
        auto [a, c] = stack.back();
        stack.pop_back();
        int n = count_roots(chain, a, c);
        if (n == 0) continue;
        if (n == 1) {
            IsolatingInterval iv{a, c, q, std::nullopt};
            if (q(c) == 0) {
                iv.lo = iv.hi = c;
                iv.exact = c;
            } else {
                for (const auto& r : exact_roots)
                    if (a < r && r <= c) {
                        iv.lo = iv.hi = r;
                        iv.exact = r;
                        break;
                    }
            }
            if (!iv.exact) {
                // make endpoint signs usable for bisection refinement
                while (q(iv.lo) == 0) {
                    Rational m = (iv.lo + iv.hi) / 2;
                    if (q(m) == 0) {
                        iv.lo = iv.hi = m;
                        iv.exact = m;
                        break;
                    }
                    if (count_roots(chain, m, iv.hi) == 1)
                        iv.lo = m;
                    else
                        iv.hi = m;
                }
            }
            found.push_back(std::move(iv));
            continue;
        }
        Rational m = (a + c) / 2;
        stack.emplace_back(a, m);
        stack.emplace_back(m, c);
    }
    std::sort(found.begin(), found.end(),
              [](const IsolatingInterval& x, const IsolatingInterval& y) {
                  return x.hi < y.hi;
              });
    return found;
}

IsolatingInterval refine_root(IsolatingInterval r, const Rational& width) {
    if (r.exact) return r;
    while (r.hi - r.lo > width) {
        Rational m = (r.lo + r.hi) / 2;
        Rational vm = r.poly(m);
        if (vm == 0) {
            r.lo = r.hi = m;
            r.exact = m;
            return r;
        }
        if (sign(vm) == sign(r.poly(r.lo)))
            r.lo = m;
        else
            r.hi = m;
    }
    return r;
}

std::string decimal_string(const IsolatingInterval& r, int digits) {
    if (r.exact) return decimal_string(*r.exact, digits);
    IsolatingInterval w = r;
    Integer grid(1);
    for (int i = 0; i < digits; ++i) grid *= 10;
    grid *= 2;  // rounding can only flip at odd multiples of 1/(2*10^digits)
    while (true) {
        std::string a = decimal_string(w.lo, digits);
        std::string b = decimal_string(w.hi, digits);
        if (a == b) return a;
        if (w.exact) return decimal_string(*w.exact, digits);
        if (w.hi - w.lo < Rational(1, grid)) {
            // the root might sit exactly on the grid point separating a from b
            Rational cand(floor_rat(w.lo * Rational(grid)) + 1, grid);
            if (w.lo < cand && cand < w.hi && w.poly(cand) == 0)
                return decimal_string(cand, digits);
        }
        w = refine_root(std::move(w), (w.hi - w.lo) / 16);
    }
}

}  // namespace toric
