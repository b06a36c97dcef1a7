// Copyright 2026 hyperscope contributors
// SPDX-License-Identifier: Apache-2.0
//
// Gosper kernel. A rational shift quotient r is brought to the form
// r = (a/b) * (c(k+1)/c(k)) with gcd(a(k), b(k+h)) = 1 for all h >= 0, the
// degree of the unknown polynomial x(k) is bounded, and the key equation
// a(k) x(k+1) - b(k-1) x(k) = c(k) P(k) is turned into a linear system by
// coefficient comparison. The q analogue works in X = q^k with the shift
// X -> qX; the unknown may need a Laurent window there, which is handled by
// multiplying through with a power of X (the `lo` offset below). The q degree
// bound follows the standard leading/trailing coefficient analysis; the paper
// shows no q-Gosper internals, so the edge cases follow the classical
// treatment.

#ifndef HYPERSCOPE_GOSPER_HPP
#define HYPERSCOPE_GOSPER_HPP

#include <set>
#include <string>
#include <vector>

#include "linsolve.hpp"
#include "term.hpp"

namespace hyperscope {

/// r(k) = (a/b) * (c(k+1)/c(k)); q kind: r(X) = (a/b) * (c(qX)/c(X)).
struct GosperForm {
    Polynomial a, b, c;
    TermKind kind = TermKind::ordinary;

    RationalFunction reconstruct() const {
        Symbol main = main_symbol(kind);
        RationalFunction cr{c};
        RationalFunction cshift =
            kind == TermKind::ordinary
                ? RationalFunction(c.shift(main, Rational(1)))
                : RationalFunction(c.subst(main, Polynomial(q_symbol()) * Polynomial(main)));
        return RationalFunction(a, b) * cshift / cr;
    }
};

namespace detail {

/// p(X * q^j) cleared of negative q powers (differs from the literal
/// substitution by a q-power unit when j < 0).
inline Polynomial qshift_poly(const Polynomial& p, long j) {
    Symbol X = qk_symbol(), q = q_symbol();
    if (j == 0 || !p.contains(X)) return p;
    int dx = p.degree(X);
    Polynomial out;
    for (auto& [m, coeff] : p.terms()) {
        int e = m.exponent(X.id());
        long qexp = j >= 0 ? j * e : (-j) * (dx - e);
        int sign;
        Monomial qm = Monomial::mul(m, Monomial::var(q, static_cast<int>(qexp)), sign);
        out.add_term(qm, sign > 0 ? coeff : -coeff);
    }
    return out;
}

inline std::set<long> q_dispersion_candidates(const Polynomial& res, Symbol w) {
    Symbol q = q_symbol();
    std::map<Monomial, std::vector<std::pair<long, long>>> groups;
    for (auto& [m, coeff] : res.terms()) {
        long jw = m.exponent(w.id());
        long dq = m.exponent(q.id());
        std::vector<Monomial::Pair> rest;
        for (auto& pr : m.pairs())
            if (pr.first != w.id() && pr.first != q.id()) rest.push_back(pr);
        groups[Monomial(std::move(rest))].push_back({jw, dq});
    }
    std::set<long> out;
    for (auto& [m, list] : groups) {
        for (size_t i = 0; i < list.size(); ++i)
            for (size_t j = i + 1; j < list.size(); ++j) {
                long dj = list[i].first - list[j].first;
                long dd = list[j].second - list[i].second;
                if (dj == 0) continue;
                if (dd % dj != 0) continue;
                long h = dd / dj;
                if (h >= 0) out.insert(h);
            }
    }
    return out;
}

}  // namespace detail

/// Gosper representation of a nonzero rational shift quotient.
inline GosperForm gosper_form(const RationalFunction& r, TermKind kind) {
    if (r.is_zero()) throw std::invalid_argument("Gosper form of the zero function");
    Symbol main = main_symbol(kind);
    GosperForm form;
    form.kind = kind;
    form.a = r.num();
    form.b = r.den();
    form.c = Polynomial(Rational(1));

    if (form.a.degree(main) > 0 && form.b.degree(main) > 0) {
        if (kind == TermKind::ordinary) {
            Symbol h = Symbol::intern("_h");
            Polynomial bh_sym = form.b.subst(main, Polynomial(main) + Polynomial(h));
            Polynomial res = resultant(form.a, bh_sym, main);
            for (long h0 : nonneg_integer_roots(res, h)) {
                if (h0 == 0) continue;  // reduced input
                Polynomial bh = form.b.shift(main, Rational(h0));
                Polynomial s = gcd_main(form.a, bh, main);
                if (s.degree(main) <= 0) continue;
                form.a = Polynomial::divide_exact(form.a, s);
                form.b = Polynomial::divide_exact(form.b, s.shift(main, Rational(-h0)));
                for (long j = 1; j <= h0; ++j) form.c *= s.shift(main, Rational(-j));
            }
        } else {
            Symbol w = Symbol::intern("_w");
            Polynomial bw = form.b.subst(main, Polynomial(w) * Polynomial(main));
            Polynomial res = resultant(form.a, bw, main);
            Polynomial qp{q_symbol()};
            for (long h0 : detail::q_dispersion_candidates(res, w)) {
                if (h0 == 0) continue;
                if (!res.subst(w, qp.pow(h0)).is_zero()) continue;
                Polynomial bh = form.b.subst(main, qp.pow(h0) * Polynomial(main));
                Polynomial s = gcd_main(form.a, bh, main);
                if (s.degree(main) <= 0) continue;
                form.a = Polynomial::divide_exact(form.a, s);
                // b is divisible by s(X/q^h) up to a q-power unit
                RationalFunction bq =
                    RationalFunction(form.b) / RationalFunction(detail::qshift_poly(s, -h0));
                form.b = bq.num();
                form.a = form.a * bq.den();  // keep a/b exact
                for (long j = 1; j <= h0; ++j) form.c *= detail::qshift_poly(s, -j);
            }
        }
    }
    form.c = form.c.primitive();

    // final exactness fix-up: any residual unit (a pure constant or q power)
    // is folded back into a
    RationalFunction fix = r / form.reconstruct();
    if (!fix.is_one()) {
        if (!fix.num().is_constant() && kind == TermKind::ordinary)
            throw std::logic_error("Gosper form reconstruction failed");
        form.a = form.a * fix.num();
        form.b = form.b * fix.den();
    }
    return form;
}

/// Degree window [lo, hi] for the unknown polynomial; empty() means only the
/// the a_i unknowns remain in the system.
struct DegreeWindow {
    long lo = 0, hi = -1;
    bool empty() const { return hi < lo; }
    size_t size() const { return empty() ? 0 : static_cast<size_t>(hi - lo + 1); }
};

/// Classical Gosper bound for a(k) x(k+1) - b(k-1) x(k) = rhs of degree
/// rhs_degree. Parameter-dependent root candidates are excluded.
inline DegreeWindow degree_bound(const Polynomial& a, const Polynomial& b, long rhs_degree) {
    Symbol k = k_symbol();
    Polynomial A = a, B = b.shift(k, Rational(-1));
    long da = A.degree(k), db = B.degree(k);
    long ell = std::max(da, db);
    Polynomial lca = A.coefficient_of(k, static_cast<int>(da));
    Polynomial lcb = B.coefficient_of(k, static_cast<int>(db));
    long d;
    if (da != db || lca != lcb) {
        d = rhs_degree - ell;
    } else {
        d = rhs_degree - ell + 1;
        Polynomial suba = da > 0 ? A.coefficient_of(k, static_cast<int>(da - 1)) : Polynomial();
        Polynomial subb = db > 0 ? B.coefficient_of(k, static_cast<int>(db - 1)) : Polynomial();
        RationalFunction alpha = (RationalFunction(subb) - RationalFunction(suba)) /
                                 RationalFunction(lca);
        auto cand = alpha.as_integer();
        if (cand && *cand >= 0) d = std::max(d, *cand);
    }
    DegreeWindow w;
    w.lo = 0;
    w.hi = d;
    return w;
}

/// q analogue: window for x(X) in a(X) x(qX) - b(X/q) x(X) = rhs, with
/// rhs X-degrees in [rhs_trailing, rhs_degree].
inline DegreeWindow q_degree_window(const Polynomial& a, const Polynomial& b, long rhs_degree,
                                    long rhs_trailing) {
    Symbol X = qk_symbol(), q = q_symbol();
    long da = a.degree(X), db = b.degree(X);
    long ta = a.trailing_degree_id(X.id()), tb = b.trailing_degree_id(X.id());
    long hi = rhs_degree - std::max(da, db);
    if (da == db) {
        RationalFunction ratio =
            RationalFunction(b.coefficient_of(X, static_cast<int>(db))) /
            RationalFunction(a.coefficient_of(X, static_cast<int>(da)));
        auto e = ratio.as_power_of(q);
        if (e) hi = std::max(hi, *e - db);
    }
    long lo = rhs_trailing - std::min(ta, tb);
    if (ta == tb) {
        RationalFunction ratio =
            RationalFunction(b.coefficient_of(X, static_cast<int>(tb))) /
            RationalFunction(a.coefficient_of(X, static_cast<int>(ta)));
        auto e = ratio.as_power_of(q);
        if (e) lo = std::min(lo, *e - tb);
    }
    DegreeWindow w;
    w.lo = std::min(lo, 0L);
    w.hi = hi;
    return w;
}

/// The coefficient-comparison system for the key equation with undetermined
/// right-hand side P(k) = sum a_i p_i(k).
struct GosperEquation {
    GosperForm form;
    std::vector<Polynomial> p;
    DegreeWindow window;
};

struct GosperSystem {
    std::vector<std::vector<RationalFunction>> matrix;
    std::vector<std::string> unknowns;  // a1..am, then x-coefficients
    size_t n_terms = 0;                 // number of a_i unknowns
};

inline GosperSystem build_gosper_system(const GosperEquation& eq) {
    Symbol main = main_symbol(eq.form.kind);
    size_t m = eq.p.size();
    GosperSystem sys;
    sys.n_terms = m;
    for (size_t i = 1; i <= m; ++i) sys.unknowns.push_back("a" + std::to_string(i));

    // columns as polynomials in the main variable (rational coefficients in q)
    std::vector<RationalFunction> cols;
    long shift_up = eq.window.empty() ? 0 : std::max(0L, -eq.window.lo);
    RationalFunction Xs{Polynomial(main)};
    for (size_t i = 0; i < m; ++i)
        cols.push_back(-RationalFunction(eq.form.c * eq.p[i]) * Xs.pow(shift_up));

    if (!eq.window.empty()) {
        if (eq.form.kind == TermKind::ordinary) {
            Polynomial k1 = Polynomial(main) + Polynomial(Rational(1));
            Polynomial B = eq.form.b.shift(main, Rational(-1));
            for (long j = eq.window.lo; j <= eq.window.hi; ++j) {
                sys.unknowns.push_back("c" + std::to_string(j));
                cols.push_back(RationalFunction(eq.form.a * k1.pow(j) - B * Polynomial(main).pow(j)));
            }
        } else {
            RationalFunction qrf{Polynomial(q_symbol())};
            RationalFunction B = RationalFunction(detail::qshift_poly(eq.form.b, -1)) /
                                 qrf.pow(eq.form.b.degree(qk_symbol()));
            for (long j = eq.window.lo; j <= eq.window.hi; ++j) {
                sys.unknowns.push_back("c" + std::to_string(j));
                cols.push_back((RationalFunction(eq.form.a) * qrf.pow(j) - B) *
                               Xs.pow(j + shift_up));
            }
        }
    }

    // common denominator in q is irrelevant for a homogeneous system; compare
    // coefficients of each main-variable power
    long maxdeg = 0;
    std::vector<std::vector<RationalFunction>> col_coeffs;
    for (auto& cf : cols) {
        Polynomial den = cf.den();
        if (den.contains(main)) throw std::logic_error("main variable in system denominator");
        std::vector<Polynomial> cc = cf.num().univariate(main);
        maxdeg = std::max(maxdeg, static_cast<long>(cc.size()));
        std::vector<RationalFunction> entry;
        for (auto& c : cc) entry.push_back(RationalFunction(c, den));
        col_coeffs.push_back(std::move(entry));
    }
    sys.matrix.assign(static_cast<size_t>(maxdeg),
                      std::vector<RationalFunction>(cols.size()));
    for (size_t c = 0; c < col_coeffs.size(); ++c)
        for (size_t e = 0; e < col_coeffs[c].size(); ++e) sys.matrix[e][c] = col_coeffs[c][e];
    return sys;
}

/// Indefinite summation certificate: g = multiplier * t.
struct GosperCertificate {
    RationalFunction multiplier;
};

/// Gosper's algorithm for a single term; nullopt when t is not summable.
inline std::optional<GosperCertificate> gosper_sum(const HyperTerm& t, long max_degree = 64) {
    Symbol main = t.mainvar();
    RationalFunction r = t.ratio();
    GosperForm form = gosper_form(r, t.kind());
    GosperEquation eq;
    eq.form = form;
    eq.p = {Polynomial(Rational(1))};
    long sigma = form.c.degree(main);
    if (t.kind() == TermKind::ordinary)
        eq.window = degree_bound(form.a, form.b, sigma);
    else
        eq.window = q_degree_window(form.a, form.b, sigma,
                                    form.c.trailing_degree_id(main.id()));
    if (eq.window.hi > max_degree) eq.window.hi = max_degree;

    GosperSystem sys = build_gosper_system(eq);
    SolutionSpace space = nullspace(sys.matrix, sys.unknowns);

    // look for a point with a_1 = 1
    size_t r_dim = space.dimension();
    for (size_t j = 0; j < r_dim; ++j) {
        const RationalFunction& a1 = space.expr(0)[j];
        if (a1.is_zero()) continue;
        std::vector<RationalFunction> v(r_dim);
        v[j] = RationalFunction(Rational(1)) / a1;
        auto sol = space.instantiate(v);
        // x(k) from the window coefficients
        RationalFunction x;
        RationalFunction Xs{Polynomial(main)};
        for (size_t c = 1; c < sol.size(); ++c) {
            long jexp = eq.window.lo + static_cast<long>(c) - 1;
            x += sol[c] * Xs.pow(jexp);
        }
        RationalFunction bm1 =
            t.kind() == TermKind::ordinary
                ? RationalFunction(form.b.shift(main, Rational(-1)))
                : RationalFunction(detail::qshift_poly(form.b, -1)) /
                      RationalFunction(Polynomial(q_symbol())).pow(form.b.degree(main));
        RationalFunction mult = bm1 * x / RationalFunction(form.c);
        if (mult.is_zero()) continue;
        return GosperCertificate{mult};
    }
    return std::nullopt;
}

}  // namespace hyperscope

#endif  // HYPERSCOPE_GOSPER_HPP
