// Copyright 2026 hyperscope contributors
// SPDX-License-Identifier: Apache-2.0
//
// Extended Zeilberger telescoping over a family of similar terms: find k-free
// coefficients a_1..a_m and a term g with
//     a_1 f_1(k) + ... + a_m f_m(k) = g(k+1) - g(k),
// presented as a parametric solution space, with an optional refinement that
// makes the a_i free of designated parameters. Classical Zeilberger is the
// specialization f_i = F(n+i-1, k).

#ifndef HYPERSCOPE_TELESCOPE_HPP
#define HYPERSCOPE_TELESCOPE_HPP

#include <cstdlib>
#include <string>
#include <vector>

#include "gosper.hpp"

namespace hyperscope {

struct OnlyTrivialError : std::runtime_error {
    explicit OnlyTrivialError(const std::string& w) : std::runtime_error(w) {}
};
struct AllZeroError : std::runtime_error {
    explicit AllZeroError(const std::string& w) : std::runtime_error(w) {}
};
struct OrderExceededError : std::runtime_error {
    explicit OrderExceededError(const std::string& w) : std::runtime_error(w) {}
};

inline long max_unknown_degree() {
    if (const char* env = std::getenv("HYPERSCOPE_MAX_DEGREE")) {
        long v = std::atol(env);
        if (v > 0) return v;
    }
    return 64;
}

struct TelescopeProblem {
    SimilarFamily family;
    std::vector<Symbol> freeze;
    TermKind kind = TermKind::ordinary;
    long max_degree = max_unknown_degree();

    static TelescopeProblem from_members(std::vector<HyperTerm> members,
                                         std::vector<Symbol> freeze = {}) {
        TelescopeProblem p;
        p.kind = members.front().kind();
        p.family = SimilarFamily::build(std::move(members));
        p.freeze = std::move(freeze);
        return p;
    }
};

/// Full linear solution space over (a_1..a_m, c_lo..c_hi) plus the data
/// mapping any point of the space to a certificate.
struct TelescopeResult {
    SolutionSpace space;
    size_t n_terms = 0;  // m
    GosperForm form;
    DegreeWindow window;
    Polynomial Q;
    std::vector<RationalFunction> g_basis;  // g multiplier per free variable

    bool has_nontrivial_coefficients() const {
        for (size_t i = 0; i < n_terms; ++i)
            for (auto& c : space.expr(i))
                if (!c.is_zero()) return true;
        return false;
    }

    RationalFunction g_multiplier(const std::vector<RationalFunction>& v) const {
        RationalFunction g;
        for (size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero() && !g_basis[j].is_zero()) g += g_basis[j] * v[j];
        return g;
    }
};

/// Concrete telescoping certificate: sum a_i f_i(k) = g(k+1) - g(k) with
/// g = g_multiplier * f_1.
struct Certificate {
    std::vector<RationalFunction> coeffs;
    RationalFunction g_multiplier;

    bool all_zero() const {
        for (auto& c : coeffs)
            if (!c.is_zero()) return false;
        return true;
    }
};

inline Certificate instantiate_certificate(const TelescopeResult& res,
                                           const std::vector<RationalFunction>& v) {
    auto sol = res.space.instantiate(v);
    Certificate cert;
    cert.coeffs.assign(sol.begin(), sol.begin() + static_cast<long>(res.n_terms));
    cert.g_multiplier = res.g_multiplier(v);
    return cert;
}

/// Steps 1-4 of the extended algorithm; the freeze refinement is applied
/// separately by restrict_free_of.
inline TelescopeResult extended_telescope(const TelescopeProblem& problem) {
    const SimilarFamily& fam = problem.family;
    Symbol main = main_symbol(problem.kind);

    RationalFunction Qr{fam.Q};
    RationalFunction Qshift =
        problem.kind == TermKind::ordinary
            ? RationalFunction(fam.Q.shift(main, Rational(1)))
            : RationalFunction(fam.Q.subst(main, Polynomial(q_symbol()) * Polynomial(main)));
    RationalFunction rho = fam.r * Qr / Qshift;

    TelescopeResult res;
    res.Q = fam.Q;
    res.n_terms = fam.members.size();
    res.form = gosper_form(rho, problem.kind);

    long max_p_deg = 0, min_p_trail = LONG_MAX;
    for (auto& p : fam.p) {
        max_p_deg = std::max(max_p_deg, static_cast<long>(p.degree(main)));
        min_p_trail = std::min(min_p_trail, static_cast<long>(p.trailing_degree_id(main.id())));
    }
    long sigma = res.form.c.degree(main) + max_p_deg;
    if (problem.kind == TermKind::ordinary) {
        res.window = degree_bound(res.form.a, res.form.b, sigma);
    } else {
        long tau = res.form.c.trailing_degree_id(main.id()) + min_p_trail;
        res.window = q_degree_window(res.form.a, res.form.b, sigma, tau);
    }
    if (res.window.hi > problem.max_degree) res.window.hi = problem.max_degree;
    if (res.window.lo < -problem.max_degree) res.window.lo = -problem.max_degree;

    GosperEquation eq{res.form, fam.p, res.window};
    GosperSystem sys = build_gosper_system(eq);
    res.space = nullspace(sys.matrix, sys.unknowns);

    // g multiplier basis: g = b(k-1) x(k) / (c(k) Q(k)) * f_1
    RationalFunction bm1 =
        problem.kind == TermKind::ordinary
            ? RationalFunction(res.form.b.shift(main, Rational(-1)))
            : RationalFunction(detail::qshift_poly(res.form.b, -1)) /
                  RationalFunction(Polynomial(q_symbol())).pow(res.form.b.degree(main));
    RationalFunction cQ = RationalFunction(res.form.c) * Qr;
    RationalFunction Xr{Polynomial(main)};
    for (size_t j = 0; j < res.space.dimension(); ++j) {
        auto sol = res.space.basis_vector(j);
        RationalFunction x;
        for (size_t c = res.n_terms; c < sol.size(); ++c) {
            long e = res.window.lo + static_cast<long>(c - res.n_terms);
            if (!sol[c].is_zero()) x += sol[c] * Xr.pow(e);
        }
        res.g_basis.push_back(bm1 * x / cQ);
    }
    return res;
}

namespace detail {

/// Sum of the terms of p whose exponents in the frozen symbols match mu,
/// with the frozen part stripped.
inline void split_by_frozen(const Polynomial& p, const std::vector<Symbol>& freeze,
                            std::map<Monomial, Polynomial>& out) {
    for (auto& [m, c] : p.terms()) {
        std::vector<Monomial::Pair> frozen, rest;
        for (auto& pr : m.pairs()) {
            bool is_frozen = false;
            for (auto& s : freeze)
                if (pr.first == s.id()) is_frozen = true;
            (is_frozen ? frozen : rest).push_back(pr);
        }
        out[Monomial(std::move(frozen))].add_term(Monomial(std::move(rest)), c);
    }
}

}  // namespace detail

/// Refine a solution space so that every coefficient a_1..a_m is free of the
/// frozen symbols. Coefficients are first cleared to polynomials by the least
/// common denominator of the whole space, then the frozen-monomial
/// coefficients of p_i - a_i q_i are forced to vanish.
inline TelescopeResult restrict_free_of(const TelescopeResult& res,
                                        const std::vector<Symbol>& freeze) {
    if (freeze.empty() || res.space.trivial()) return res;
    const size_t m = res.n_terms;
    const size_t r = res.space.dimension();

    Polynomial D(Rational(1));
    for (size_t i = 0; i < m; ++i)
        for (auto& h : res.space.expr(i)) {
            if (h.is_zero()) continue;
            D = poly_lcm(D, h.den());
        }

    // columns: A_1..A_m then v_1..v_r
    std::vector<std::string> unknowns;
    for (size_t i = 0; i < m; ++i) unknowns.push_back("A" + std::to_string(i + 1));
    for (size_t j = 0; j < r; ++j) unknowns.push_back("v" + std::to_string(j + 1));

    std::vector<std::vector<RationalFunction>> rows;
    std::map<Monomial, Polynomial> Dsplit;
    detail::split_by_frozen(D, freeze, Dsplit);
    for (size_t i = 0; i < m; ++i) {
        std::map<Monomial, std::vector<Polynomial>> by_mu;  // frozen monomial -> v coeffs
        for (size_t j = 0; j < r; ++j) {
            const RationalFunction& h = res.space.expr(i)[j];
            if (h.is_zero()) continue;
            Polynomial cleared = h.num() * Polynomial::divide_exact(D, h.den());
            std::map<Monomial, Polynomial> split;
            detail::split_by_frozen(cleared, freeze, split);
            for (auto& [mu, piece] : split) {
                auto& slot = by_mu[mu];
                slot.resize(r);
                slot[j] = piece;
            }
        }
        for (auto& [mu, dpiece] : Dsplit) by_mu[mu].resize(r);
        for (auto& [mu, vcoeffs] : by_mu) {
            std::vector<RationalFunction> row(m + r);
            auto dit = Dsplit.find(mu);
            if (dit != Dsplit.end()) row[i] = -RationalFunction(dit->second);
            bool nonzero = !row[i].is_zero();
            for (size_t j = 0; j < vcoeffs.size(); ++j) {
                if (vcoeffs[j].is_zero()) continue;
                row[m + j] = RationalFunction(vcoeffs[j]);
                nonzero = true;
            }
            if (nonzero) rows.push_back(std::move(row));
        }
    }

    SolutionSpace sub = nullspace(rows, unknowns);
    const size_t r2 = sub.dimension();

    // compose: original unknowns over the new free variables
    size_t total = res.space.unknown_count();
    std::vector<std::vector<RationalFunction>> exprs(total,
                                                     std::vector<RationalFunction>(r2));
    for (size_t i = 0; i < m; ++i) exprs[i] = sub.expr(i);  // a_i = A_i
    for (size_t c = m; c < total; ++c) {
        for (size_t l = 0; l < r2; ++l) {
            RationalFunction acc;
            for (size_t j = 0; j < r; ++j) {
                const RationalFunction& old = res.space.expr(c)[j];
                const RationalFunction& vj = sub.expr(m + j)[l];
                if (!old.is_zero() && !vj.is_zero()) acc += old * vj;
            }
            exprs[c][l] = acc;
        }
    }
    std::vector<long> anchors(r2, -1);
    for (size_t l = 0; l < r2; ++l) {
        long a = sub.anchor(l);
        if (a >= 0 && a < static_cast<long>(m)) anchors[l] = a;
    }

    TelescopeResult out = res;
    out.space = SolutionSpace(res.space.unknowns(), res.space.system(), r2, std::move(anchors),
                              std::move(exprs));
    out.g_basis.clear();
    for (size_t l = 0; l < r2; ++l) {
        RationalFunction g;
        for (size_t j = 0; j < r; ++j) {
            const RationalFunction& vj = sub.expr(m + j)[l];
            if (!vj.is_zero() && !res.g_basis[j].is_zero()) g += res.g_basis[j] * vj;
        }
        out.g_basis.push_back(g);
    }
    return out;
}

// ---- relations -----------------------------------------------------------------

/// Linear relation sum_i coeff_i * (sum_k f_i(k)) = 0, derived by summing a
/// certificate over k; boundary terms are assumed (not proven) to vanish.
struct Relation {
    std::vector<std::string> members;
    std::vector<RationalFunction> coeffs;       // as instantiated
    std::vector<Polynomial> normalized;         // cleared, content-free, sign-fixed
    std::vector<RationalFunction> ratio_form;   // divided by coeff of f_1 when nonzero
    Certificate certificate;
    bool boundary_assumed_vanishing = true;
};

inline Relation sum_relation(const Certificate& cert, std::vector<std::string> members) {
    if (cert.all_zero()) throw AllZeroError("all relation coefficients vanish");
    Relation rel;
    rel.members = std::move(members);
    rel.coeffs = cert.coeffs;
    rel.certificate = cert;

    Polynomial lcd(Rational(1));
    for (auto& c : cert.coeffs)
        if (!c.is_zero()) lcd = poly_lcm(lcd, c.den());
    std::vector<Polynomial> cleared;
    for (auto& c : cert.coeffs)
        cleared.push_back(c.is_zero() ? Polynomial()
                                      : c.num() * Polynomial::divide_exact(lcd, c.den()));
    Polynomial content;
    for (auto& p : cleared) {
        if (p.is_zero()) continue;
        content = content.is_zero() ? p.primitive() * p.content() : poly_gcd(content, p);
    }
    bool flip = false;
    for (auto& p : cleared) {
        if (p.is_zero()) continue;
        flip = p.leading_coefficient() < 0;
        break;
    }
    for (auto& p : cleared) {
        if (p.is_zero()) {
            rel.normalized.push_back(p);
            continue;
        }
        Polynomial q = Polynomial::divide_exact(p, content);
        rel.normalized.push_back(flip ? -q : q);
    }

    if (!cert.coeffs.front().is_zero())
        for (auto& c : cert.coeffs) rel.ratio_form.push_back(c / cert.coeffs.front());
    return rel;
}

// ---- classical Zeilberger --------------------------------------------------------

struct ZeilbergerResult {
    long order = 0;
    std::vector<Polynomial> coeffs;  // a_0..a_J, content-free, leading sign positive
    Certificate certificate;
    TelescopeProblem problem;
};

/// Least-order recurrence for sum_k F(n,k) up to max_order; the family at
/// order J is (F(n,k), ..., F(n+J,k)).
inline ZeilbergerResult classic_zeilberger(const HyperTerm& summand, Symbol n, long max_order) {
    if (max_order < 1) throw std::invalid_argument("max_order must be at least 1");
    for (long J = 1; J <= max_order; ++J) {
        std::vector<HyperTerm> members;
        for (long i = 0; i <= J; ++i) members.push_back(summand.shift_parameter(n, i));
        TelescopeProblem problem = TelescopeProblem::from_members(std::move(members));
        TelescopeResult res = extended_telescope(problem);
        if (!res.has_nontrivial_coefficients()) continue;
        for (size_t j = 0; j < res.space.dimension(); ++j) {
            std::vector<RationalFunction> v(res.space.dimension());
            v[j] = RationalFunction(Rational(1));
            Certificate cert = instantiate_certificate(res, v);
            if (cert.all_zero()) continue;
            ZeilbergerResult out;
            out.order = J;
            std::vector<std::string> names;
            for (long i = 0; i <= J; ++i) names.push_back("S(n+" + std::to_string(i) + ")");
            Relation rel = sum_relation(cert, names);
            // leading-shift coefficient sign positive
            bool flip = !rel.normalized.back().is_zero() &&
                        rel.normalized.back().leading_coefficient() < 0;
            for (auto& p : rel.normalized) out.coeffs.push_back(flip ? -p : p);
            out.certificate = cert;
            out.problem = problem;
            return out;
        }
    }
    throw OrderExceededError("no recurrence up to order " + std::to_string(max_order));
}

}  // namespace hyperscope

#endif  // HYPERSCOPE_TELESCOPE_HPP
