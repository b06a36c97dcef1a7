// Copyright 2026 hyperscope contributors
// SPDX-License-Identifier: Apache-2.0
//
// Deterministic random generators and small independent oracles shared by the
// test suites. Everything here is test-only and intentionally naive.

#ifndef HYPERSCOPE_TESTS_GENERATORS_HPP
#define HYPERSCOPE_TESTS_GENERATORS_HPP

#include <hyperscope/poly.hpp>
#include <hyperscope/ratfun.hpp>
#include <hyperscope/term.hpp>

#include <map>
#include <random>
#include <vector>

namespace testsupport {

using hyperscope::Monomial;
using hyperscope::Polynomial;
using hyperscope::Rational;
using hyperscope::RationalFunction;
using hyperscope::Symbol;

inline Rational random_rational(std::mt19937_64& rng, long max_abs = 50) {
    std::uniform_int_distribution<long> num(1, max_abs), den(1, max_abs), sign(0, 1);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return sign(rng) ? r : Rational(-r);
}

/// Small positive rational p/q with p, q in [1, max]; never zero.
inline Rational random_positive_rational(std::mt19937_64& rng, long max_abs = 50) {
    std::uniform_int_distribution<long> num(1, max_abs), den(1, max_abs);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

inline Polynomial random_polynomial(std::mt19937_64& rng, const std::vector<Symbol>& vars,
                                    int max_deg, int n_terms) {
    Polynomial p;
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<long> coef(-6, 6);
    for (int t = 0; t < n_terms; ++t) {
        std::vector<Monomial::Pair> mp;
        for (auto& v : vars) {
            int e = deg(rng);
            if (e > 0) mp.push_back({v.id(), e});
        }
        long c = coef(rng);
        if (c != 0) p.add_term(Monomial(std::move(mp)), Rational(c));
    }
    return p;
}

inline Polynomial random_nonzero_polynomial(std::mt19937_64& rng, const std::vector<Symbol>& vars,
                                            int max_deg, int n_terms) {
    for (;;) {
        Polynomial p = random_polynomial(rng, vars, max_deg, n_terms);
        if (!p.is_zero()) return p;
    }
}

/// Naive cofactor-expansion determinant over Q; the independent oracle for
/// resultants and small eliminations.
inline Rational naive_det(std::vector<std::vector<Rational>> m) {
    size_t n = m.size();
    if (n == 0) return Rational(1);
    if (n == 1) return m[0][0];
    Rational det(0);
    long sign = 1;
    for (size_t c = 0; c < n; ++c) {
        std::vector<std::vector<Rational>> minor;
        for (size_t r = 1; r < n; ++r) {
            std::vector<Rational> row;
            for (size_t cc = 0; cc < n; ++cc)
                if (cc != c) row.push_back(m[r][cc]);
            minor.push_back(std::move(row));
        }
        det += Rational(sign) * m[0][c] * naive_det(minor);
        sign = -sign;
    }
    return det;
}

/// Sylvester-matrix resultant of univariate polynomials given as coefficient
/// vectors (index = exponent).
inline Rational naive_resultant(std::vector<Rational> p, std::vector<Rational> q) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    while (!q.empty() && q.back() == 0) q.pop_back();
    int m = static_cast<int>(p.size()) - 1, n = static_cast<int>(q.size()) - 1;
    if (m < 0 || n < 0) return Rational(0);
    if (m == 0) return hyperscope::pow_rational(p[0], n);
    if (n == 0) return hyperscope::pow_rational(q[0], m);
    size_t size = static_cast<size_t>(m + n);
    std::vector<std::vector<Rational>> M(size, std::vector<Rational>(size, Rational(0)));
    for (int row = 0; row < n; ++row)
        for (int j = 0; j <= m; ++j) M[row][row + j] = p[static_cast<size_t>(m - j)];
    for (int row = 0; row < m; ++row)
        for (int j = 0; j <= n; ++j) M[n + row][row + j] = q[static_cast<size_t>(n - j)];
    return naive_det(M);
}

/// Random ordinary hypergeometric term over one parameter `a`: small rational
/// prefactor in k, a couple of Pochhammer factors, rational geometric base.
inline hyperscope::HyperTerm random_hyperterm(std::mt19937_64& rng) {
    using hyperscope::HyperTerm;
    using hyperscope::TermKind;
    Symbol k = hyperscope::k_symbol();
    Symbol a = Symbol::intern("a");
    RationalFunction ra{Polynomial(a)};
    RationalFunction one{Rational(1)};
    std::uniform_int_distribution<int> pick(0, 3), mult(0, 1), coin(0, 1);

    HyperTerm t(TermKind::ordinary);
    std::vector<RationalFunction> pool{
        ra, ra + one, ra + RationalFunction(Rational(1, 2)), RationalFunction(Rational(2)),
        one};
    int n_poch = 1 + pick(rng) % 2;
    for (int i = 0; i < n_poch; ++i)
        t = t.times_poch(pool[static_cast<size_t>(pick(rng))], mult(rng) ? 1 : -1);
    std::vector<Rational> bases{Rational(2), Rational(1, 2), Rational(3), Rational(-2)};
    t = t.times_power(RationalFunction(bases[static_cast<size_t>(pick(rng))]));
    // prefactor: nonzero linear polynomial in k
    Polynomial pk{k};
    Polynomial pref = pk + Polynomial(Rational(1 + pick(rng)));
    if (coin(rng)) pref = pref * pk + Polynomial(Rational(1));
    t = t.times_prefactor(RationalFunction(pref));
    return t;
}

}  // namespace testsupport

#endif  // HYPERSCOPE_TESTS_GENERATORS_HPP
