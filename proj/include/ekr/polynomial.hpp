#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ekr/matrix.hpp"
#include "ekr/numeric.hpp"

namespace ekr {

/// Polynomial over Q, coeffs[k] multiplying x^k.
struct Poly {
    std::vector<Rat> c;

    static Poly zero() { return {}; }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const Rat& lead() const { return c.back(); }

    Rat eval(const Rat& x) const {
        Rat acc = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Poly derivative() const {
        Poly d;
        for (std::size_t k = 1; k < c.size(); ++k) d.c.push_back(c[k] * Rat(static_cast<long>(k)));
        d.trim();
        return d;
    }

    /// Scales by a positive rational so the coefficients become coprime
    /// integers. Never flips signs (the Sturm chain depends on them).
    void scale_primitive() {
        if (c.empty()) return;
        Int g = 0, l = 1;
        using boost::multiprecision::gcd;
        using boost::multiprecision::lcm;
        for (const auto& v : c) {
            g = gcd(g, boost::multiprecision::numerator(v));
            l = lcm(l, boost::multiprecision::denominator(v));
        }
        if (g == 0) return;
        if (g < 0) g = -g;
        const Rat f(l, g);
        for (auto& v : c) v *= f;
    }

    bool is_monic_integer() const {
        if (c.empty() || lead() != 1) return false;
        for (const auto& v : c)
            if (boost::multiprecision::denominator(v) != 1) return false;
        return true;
    }
};

/// Remainder of a by b.
inline Poly poly_rem(Poly a, const Poly& b) {
    if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
    while (!a.is_zero() && a.degree() >= b.degree()) {
        const Rat f = a.lead() / b.lead();
        const int shift = a.degree() - b.degree();
        for (int k = 0; k <= b.degree(); ++k)
            a.c[static_cast<std::size_t>(k + shift)] -= f * b.c[static_cast<std::size_t>(k)];
        a.trim();
    }
    return a;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly::zero();
    Poly p;
    p.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) p.c[i + j] += a.c[i] * b.c[j];
    return p;
}

/// Exact synthetic division by (x - r); remainder must be zero.
inline Poly poly_deflate(const Poly& p, const Rat& r) {
    Poly q;
    q.c.assign(p.c.size() - 1, Rat(0));
    Rat carry = 0;
    for (int k = p.degree(); k >= 1; --k) {
        carry = carry * r + p.c[static_cast<std::size_t>(k)];
        q.c[static_cast<std::size_t>(k - 1)] = carry;
    }
    if (carry * r + p.c[0] != 0) throw std::invalid_argument("poly_deflate: not a root");
    return q;
}

/// Characteristic polynomial det(xI - A) by the Faddeev-LeVerrier recurrence;
/// exact over the rationals.
inline Poly charpoly(const RatMatrix& a) {
    const int n = a.rows();
    if (a.cols() != n) throw std::invalid_argument("charpoly of non-square matrix");
    Poly p;
    p.c.assign(static_cast<std::size_t>(n) + 1, Rat(0));
    p.c[static_cast<std::size_t>(n)] = 1;
    RatMatrix m = RatMatrix::identity(n);
    for (int k = 1; k <= n; ++k) {
        m = a * m;
        Rat tr = 0;
        for (int i = 0; i < n; ++i) tr += m(i, i);
        const Rat ck = -tr / Rat(k);
        p.c[static_cast<std::size_t>(n - k)] = ck;
        for (int i = 0; i < n; ++i) m(i, i) += ck;
    }
    return p;
}

/// Standard Sturm chain: p, p', then negated remainders (positive scaling
/// only; sign flips would invalidate the variation counts).
inline std::vector<Poly> sturm_chain(Poly p) {
    std::vector<Poly> chain;
    p.trim();
    if (p.is_zero()) return chain;
    p.scale_primitive();
    chain.push_back(p);
    Poly d = chain.back().derivative();
    d.scale_primitive();
    if (!d.is_zero()) chain.push_back(d);
    while (chain.size() >= 2 && chain.back().degree() >= 0) {
        Poly r = poly_rem(chain[chain.size() - 2], chain.back());
        if (r.is_zero()) break;
        for (auto& v : r.c) v = -v;
        r.scale_primitive();
        chain.push_back(std::move(r));
        if (chain.back().degree() == 0) break;
    }
    return chain;
}

namespace detail {

inline int sign_of(const Rat& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

inline int sturm_variations_at(const std::vector<Poly>& chain, const Rat& x) {
    int var = 0, prev = 0;
    for (const auto& q : chain) {
        const int s = sign_of(q.eval(x));
        if (s != 0) {
            if (prev != 0 && s != prev) ++var;
            prev = s;
        }
    }
    return var;
}

inline int sturm_variations_neg_inf(const std::vector<Poly>& chain) {
    int var = 0, prev = 0;
    for (const auto& q : chain) {
        int s = sign_of(q.lead());
        if (q.degree() % 2 == 1) s = -s;
        if (s != 0) {
            if (prev != 0 && s != prev) ++var;
            prev = s;
        }
    }
    return var;
}

}  // namespace detail

/// Number of distinct real roots of p in (-inf, x]; x must not be a root.
inline int distinct_roots_at_most(const Poly& p, const Rat& x) {
    if (p.eval(x) == 0) throw std::invalid_argument("distinct_roots_at_most: endpoint is a root");
    const auto chain = sturm_chain(p);
    if (chain.empty()) return 0;
    return detail::sturm_variations_neg_inf(chain) - detail::sturm_variations_at(chain, x);
}

/// Distinct real roots strictly below b, valid even when b is a root:
/// factors of (x - b) are deflated away first, after which Sturm on
/// (-inf, b] counts exactly the roots < b.
inline int distinct_roots_below(Poly p, const Rat& b) {
    p.trim();
    if (p.is_zero()) return 0;
    while (p.degree() >= 1 && p.eval(b) == 0) p = poly_deflate(p, b);
    if (p.degree() < 1) return 0;
    return distinct_roots_at_most(p, b);
}

/// Cauchy bound: all real roots lie in [-B, B].
inline Rat root_bound(const Poly& p) {
    Rat maxq = 0;
    for (int k = 0; k < p.degree(); ++k) {
        Rat q = p.c[static_cast<std::size_t>(k)] / p.lead();
        if (q < 0) q = -q;
        if (q > maxq) maxq = q;
    }
    return maxq + 1;
}

struct LeastRoot {
    bool exists = false;
    std::optional<Rat> exact;  // set when the least root is rational
    Rat lo, hi;                // isolating interval otherwise (lo < root <= hi)
};

/// Least real root by Sturm bisection. When the bisection lands on a
/// rational root it is either confirmed as the least root (exact result) or
/// deflated away and the search continues below it. Terminates with either
/// an exact rational value or an isolating interval of width <= 2^-64.
inline LeastRoot least_real_root(Poly p) {
    LeastRoot out;
    p.trim();
    if (p.is_zero() || p.degree() == 0) return out;
    p.scale_primitive();

    auto chain = sturm_chain(p);
    // Cauchy bound is strict, so the endpoints are never roots.
    Rat lo = -root_bound(p), hi = root_bound(p);
    int v_lo = detail::sturm_variations_at(chain, lo);
    int v_hi = detail::sturm_variations_at(chain, hi);
    if (v_lo - v_hi <= 0) return out;
    out.exists = true;

    const Rat eps = Rat(1, Int(1) << 64);
    while (hi - lo > eps) {
        const Rat mid = (lo + hi) / 2;
        if (p.eval(mid) == 0) {
            if (distinct_roots_below(p, mid) == 0) {
                out.exact = mid;
                out.lo = out.hi = mid;
                return out;
            }
            // Roots exist below mid: strip the factor and keep looking.
            while (p.eval(mid) == 0) p = poly_deflate(p, mid);
            p.scale_primitive();
            chain = sturm_chain(p);
            hi = mid;
            v_lo = detail::sturm_variations_at(chain, lo);
            v_hi = detail::sturm_variations_at(chain, hi);
            continue;
        }
        const int v_mid = detail::sturm_variations_at(chain, mid);
        if (v_lo - v_mid >= 1) { hi = mid; v_hi = v_mid; }
        else { lo = mid; v_lo = v_mid; }
    }
    // The interval may still pin an integer root (bisection rarely lands
    // exactly on one); try the single integer candidate it can contain.
    Int zi = boost::multiprecision::numerator(hi) / boost::multiprecision::denominator(hi);
    for (Int z = zi - 1; z <= zi + 1; ++z) {
        const Rat zr(z);
        if (zr > lo && zr <= hi && p.eval(zr) == 0 && distinct_roots_below(p, zr) == 0) {
            out.exact = zr;
            out.lo = out.hi = zr;
            return out;
        }
    }
    out.lo = lo;
    out.hi = hi;
    return out;
}

}  // namespace ekr
