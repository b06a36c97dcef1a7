// Copyright 2026 hyperscope contributors
// SPDX-License-Identifier: Apache-2.0
//
// Multivariate gcd (recursive contents + subresultant PRS in a chosen main
// variable), resultants via fraction-free Sylvester determinants, and exact
// integer root extraction for dispersion sets.

#ifndef HYPERSCOPE_POLY_GCD_HPP
#define HYPERSCOPE_POLY_GCD_HPP

#include <algorithm>
#include <set>
#include <vector>

#include "poly.hpp"

namespace hyperscope {

inline Rational rational_gcd(const Rational& a, const Rational& b) {
    if (a == 0) return abs(b);
    if (b == 0) return abs(a);
    Integer num, den;
    mpz_gcd(num.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
    mpz_lcm(den.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
    Rational r(num, den);
    r.canonicalize();
    return abs(r);
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

namespace detail {

inline int deg(const Polynomial& p, Symbol main) { return p.degree_id(main.id()); }

inline Polynomial lc(const Polynomial& p, Symbol main) {
    return p.coefficient_of(main, deg(p, main));
}

/// gcd of the univariate-view coefficients (the content w.r.t. `main`).
inline Polynomial content_wrt(const Polynomial& p, Symbol main) {
    Polynomial g;
    for (const Polynomial& c : p.univariate(main)) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c.primitive() * c.content() : poly_gcd(g, c);
        if (g.is_constant() && g.constant_value() == 1) break;
    }
    return g.is_zero() ? Polynomial(Rational(1)) : g;
}

/// Pseudo-remainder of a by b in `main`: lc(b)^(deg a - deg b + 1) * a mod b.
inline Polynomial prem(const Polynomial& a, const Polynomial& b, Symbol main) {
    int db = deg(b, main);
    Polynomial r = a;
    Polynomial lb = lc(b, main);
    int e = deg(a, main) - db + 1;
    while (!r.is_zero() && deg(r, main) >= db) {
        Polynomial lr = lc(r, main);
        Polynomial shift = Polynomial::term(Monomial::var(main, deg(r, main) - db), Rational(1));
        r = r * lb - b * (lr * shift);
        --e;
    }
    for (; e > 0; --e) r = r * lb;
    return r;
}

/// Subresultant PRS; returns the last nonzero remainder (gcd in `main` up to
/// content) or a constant when the inputs are coprime in `main`.
inline Polynomial prs_gcd_main(Polynomial a, Polynomial b, Symbol main) {
    if (deg(a, main) < deg(b, main)) std::swap(a, b);
    Polynomial g(Rational(1)), h(Rational(1));
    for (;;) {
        int delta = deg(a, main) - deg(b, main);
        Polynomial r = prem(a, b, main);
        if (r.is_zero()) return b;
        if (deg(r, main) == 0) return Polynomial(Rational(1));
        Polynomial divisor = g * h.pow(delta);
        a = b;
        b = Polynomial::divide_exact(r, divisor);
        g = lc(a, main);
        if (delta == 1)
            h = g;
        else if (delta > 1)
            h = Polynomial::divide_exact(g.pow(delta), h.pow(delta - 1));
    }
}

inline std::vector<Rational> univariate_coeffs_at(const Polynomial& p, Symbol main,
                                                  const std::map<int, Rational>& point) {
    std::vector<Rational> cs;
    for (const Polynomial& c : p.univariate(main)) cs.push_back(c.evaluate(point));
    while (!cs.empty() && cs.back() == 0) cs.pop_back();
    return cs;
}

inline int univariate_gcd_degree(std::vector<Rational> a, std::vector<Rational> b) {
    if (a.empty() || b.empty()) return -1;
    while (!b.empty()) {
        if (a.size() < b.size()) std::swap(a, b);
        // make b monic and reduce a
        Rational lead = b.back();
        for (auto& c : b) c /= lead;
        while (a.size() >= b.size()) {
            Rational f = a.back();
            size_t off = a.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
            while (!a.empty() && a.back() == 0) a.pop_back();
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return static_cast<int>(a.size()) - 1;
}

/// Probabilistic degree of gcd in `main` after evaluating the other symbols;
/// an evaluated gcd degree is always >= the true one, so a result of 0 proves
/// main-coprimality. Returns -1 when no usable evaluation point was found.
inline int eval_gcd_degree(const Polynomial& a, const Polynomial& b, Symbol main) {
    std::set<int> vars;
    for (int v : a.variables()) vars.insert(v);
    for (int v : b.variables()) vars.insert(v);
    vars.erase(main.id());
    int da = deg(a, main), db = deg(b, main);
    for (int attempt = 0; attempt < 4; ++attempt) {
        std::map<int, Rational> point;
        long seed = 3 + attempt * 17;
        for (int v : vars) {
            point[v] = Rational(seed % 97 + 2);
            seed = seed * 37 + 11;
        }
        auto ca = univariate_coeffs_at(a, main, point);
        auto cb = univariate_coeffs_at(b, main, point);
        // degree must be preserved or the point says nothing
        if (static_cast<int>(ca.size()) - 1 != da || static_cast<int>(cb.size()) - 1 != db)
            continue;
        return univariate_gcd_degree(std::move(ca), std::move(cb));
    }
    return -1;
}

inline void split_imaginary(const Polynomial& p, Polynomial& re, Polynomial& im) {
    re = Polynomial();
    im = Polynomial();
    for (auto& [m, c] : p.terms()) {
        int iexp = 0;
        std::vector<Monomial::Pair> rest;
        for (auto& q : m.pairs()) {
            if (Symbol::is_imaginary_id(q.first))
                iexp = q.second;
            else
                rest.push_back(q);
        }
        if (iexp == 0)
            re.add_term(m, c);
        else
            im.add_term(Monomial(std::move(rest)), c);
    }
}

}  // namespace detail

/// gcd over Q[vars], including the rational content: poly_gcd(2k+2, 4) = 2.
/// Result has positive leading coefficient. Inputs containing an imaginary
/// symbol fall back to a conservative common divisor (sound, may under-cancel).
inline Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b.is_zero() ? b : b * (b.leading_coefficient() < 0 ? -1 : 1);
    if (b.is_zero()) return a * (a.leading_coefficient() < 0 ? -1 : 1);
    if (a.is_constant() || b.is_constant())
        return Polynomial(rational_gcd(a.content(), b.content()));
    if (a.has_imaginary() || b.has_imaginary()) {
        Polynomial are, aim, bre, bim;
        detail::split_imaginary(a, are, aim);
        detail::split_imaginary(b, bre, bim);
        return poly_gcd(poly_gcd(are, aim), poly_gcd(bre, bim));
    }

    auto va = a.variables();
    auto vb = b.variables();
    std::vector<int> common;
    std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(common));
    if (common.empty()) return Polynomial(rational_gcd(a.content(), b.content()));

    // main variable: cheapest minimum degree
    Symbol main;
    int best = INT32_MAX;
    for (int v : common) {
        int d = std::min(a.degree_id(v), b.degree_id(v));
        if (d < best) {
            best = d;
            main = Symbol::intern(Symbol::name_of(v));
        }
    }

    Polynomial cont_a = detail::content_wrt(a, main);
    Polynomial cont_b = detail::content_wrt(b, main);
    Polynomial pa = Polynomial::divide_exact(a, cont_a);
    Polynomial pb = Polynomial::divide_exact(b, cont_b);
    Polynomial cont_gcd = poly_gcd(cont_a, cont_b);

    int gdeg = detail::eval_gcd_degree(pa, pb, main);
    if (gdeg == 0) return cont_gcd;
    Polynomial small = detail::deg(pa, main) <= detail::deg(pb, main) ? pa : pb;
    Polynomial large = detail::deg(pa, main) <= detail::deg(pb, main) ? pb : pa;
    if (gdeg == detail::deg(small, main)) {
        if (Polynomial::try_divide(large, small)) return cont_gcd * small.primitive();
    }

    Polynomial r = detail::prs_gcd_main(pa, pb, main);
    if (detail::deg(r, main) == 0) return cont_gcd;
    Polynomial main_part =
        Polynomial::divide_exact(r, detail::content_wrt(r, main)).primitive();
    return cont_gcd * main_part;
}

inline Polynomial poly_lcm(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    return Polynomial::divide_exact(a * b, poly_gcd(a, b)).primitive();
}

/// gcd viewed univariately in `main` over the fraction field of the remaining
/// symbols; parameter-only content is stripped, result primitive in `main`.
inline Polynomial gcd_main(const Polynomial& p, const Polynomial& q, Symbol main) {
    if (p.is_zero()) return q.is_zero() ? q : Polynomial::divide_exact(q, detail::content_wrt(q, main)).primitive();
    if (q.is_zero()) return Polynomial::divide_exact(p, detail::content_wrt(p, main)).primitive();
    Polynomial g = poly_gcd(p, q);
    return Polynomial::divide_exact(g, detail::content_wrt(g, main)).primitive();
}

/// Resultant w.r.t. `main` via a fraction-free determinant of the Sylvester
/// matrix. Exact value (no content stripping), standard sign conventions.
inline Polynomial resultant(const Polynomial& p, const Polynomial& q, Symbol main) {
    if (p.is_zero() || q.is_zero()) return Polynomial();
    int m = detail::deg(p, main), n = detail::deg(q, main);
    if (m == 0) return p.pow(n);
    if (n == 0) return q.pow(m);

    auto pc = p.univariate(main);
    auto qc = q.univariate(main);
    int size = m + n;
    std::vector<std::vector<Polynomial>> M(static_cast<size_t>(size),
                                           std::vector<Polynomial>(static_cast<size_t>(size)));
    for (int row = 0; row < n; ++row)
        for (int j = 0; j <= m; ++j) M[row][row + j] = pc[static_cast<size_t>(m - j)];
    for (int row = 0; row < m; ++row)
        for (int j = 0; j <= n; ++j) M[n + row][row + j] = qc[static_cast<size_t>(n - j)];

    // Bareiss determinant
    int sign = 1;
    Polynomial prev(Rational(1));
    for (int k = 0; k < size; ++k) {
        int piv = -1;
        for (int r = k; r < size; ++r)
            if (!M[r][k].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) return Polynomial();
        if (piv != k) {
            std::swap(M[piv], M[k]);
            sign = -sign;
        }
        if (k == size - 1) break;
        for (int i = k + 1; i < size; ++i) {
            for (int j = k + 1; j < size; ++j)
                M[i][j] = Polynomial::divide_exact(M[k][k] * M[i][j] - M[i][k] * M[k][j], prev);
            M[i][k] = Polynomial();
        }
        prev = M[k][k];
    }
    Polynomial det = M[size - 1][size - 1];
    return sign < 0 ? -det : det;
}

namespace detail {

inline std::vector<Integer> divisors_of(Integer n) {
    n = abs(n);
    std::vector<std::pair<Integer, int>> factors;
    Integer d(2);
    while (d * d <= n && d < 10000000) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            factors.push_back({d, e});
        }
        d += (d == 2 ? 1 : 2);
    }
    if (n > 1) factors.push_back({n, 1});  // cofactor treated as prime
    std::vector<Integer> divs{Integer(1)};
    for (auto& [pf, e] : factors) {
        size_t base = divs.size();
        Integer pk(1);
        for (int t = 1; t <= e; ++t) {
            pk *= pf;
            for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

}  // namespace detail

/// Integer roots of a univariate rational-coefficient polynomial.
inline std::vector<Integer> integer_roots_univariate(const Polynomial& u, Symbol var) {
    std::vector<Integer> roots;
    if (u.is_zero()) throw std::invalid_argument("integer roots of the zero polynomial");
    auto cs = u.univariate(var);
    Integer den_lcm(1);
    for (auto& c : cs) {
        if (!c.is_constant()) throw std::invalid_argument("polynomial is not univariate");
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                c.constant_value().get_den().get_mpz_t());
    }
    std::vector<Integer> zc;
    for (auto& c : cs) {
        Rational scaled = c.constant_value() * Rational(den_lcm);
        zc.push_back(scaled.get_num());
    }
    size_t t = 0;
    while (t < zc.size() && zc[t] == 0) ++t;
    if (t > 0) roots.push_back(Integer(0));
    if (t >= zc.size()) return roots;  // pure power of var

    auto eval_at = [&](const Integer& x) {
        Integer acc(0);
        for (size_t e = zc.size(); e-- > t;) acc = acc * x + zc[e];
        return acc;
    };
    for (const Integer& d : detail::divisors_of(zc[t])) {
        if (eval_at(d) == 0) roots.push_back(d);
        if (eval_at(-d) == 0) roots.push_back(-d);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

/// All h >= 0 with p identically zero (in the remaining symbols) at var = h.
/// Parameter-dependent roots are excluded by construction.
inline std::set<long> nonneg_integer_roots(const Polynomial& p, Symbol var) {
    std::set<long> result;
    if (p.is_zero()) throw std::invalid_argument("nonneg_integer_roots of zero polynomial");

    // pick the univariate slice attached to one parameter monomial
    Monomial pick;
    bool have = false;
    for (auto& [m, c] : p.terms()) {
        std::vector<Monomial::Pair> rest;
        for (auto& pr : m.pairs())
            if (pr.first != var.id()) rest.push_back(pr);
        Monomial key(std::move(rest));
        if (!have || Monomial::compare(key, pick) < 0) {
            pick = key;
            have = true;
        }
    }
    Polynomial slice;
    for (auto& [m, c] : p.terms()) {
        std::vector<Monomial::Pair> rest;
        int e = m.exponent(var.id());
        for (auto& pr : m.pairs())
            if (pr.first != var.id()) rest.push_back(pr);
        if (Monomial(std::move(rest)) == pick) slice.add_term(Monomial::var(var, e), c);
    }

    for (const Integer& r : integer_roots_univariate(slice, var)) {
        if (r < 0 || !r.fits_slong_p()) continue;
        Rational rv(r);
        if (p.subst(var, Polynomial(rv)).is_zero()) result.insert(r.get_si());
    }
    return result;
}

}  // namespace hyperscope

#endif  // HYPERSCOPE_POLY_GCD_HPP
