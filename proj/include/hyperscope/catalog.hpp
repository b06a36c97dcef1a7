// Copyright 2026 hyperscope contributors
// SPDX-License-Identifier: Apache-2.0
//
// Built-in hypergeometric summands for the classical and basic orthogonal
// polynomial families, plus the derivations built on the telescoper:
// three-term recurrences, structure relations, parameter-shift relations and
// connection-coefficient recurrences.
//
// Conventions: the six recurrence-table families (laguerre, jacobi, charlier,
// meixner, krawtchouk, hahn) are monic. Wilson, Racah and the q families keep
// their plain hypergeometric normalizations. Pollaczek is handled in a
// rational chart eta with x = (a eta^2 + 1)/((1+a) eta), which removes the
// square root xi from every quantity; the derived coefficients are eta-free.
// Lattice families (racah, qracah, wilson) store the lattice value lambda(x)
// used as the left-hand multiplier of the recurrence. The q-difference
// operator is dH(x) = (H(xq) - H(x))/((q-1)x).

#ifndef HYPERSCOPE_CATALOG_HPP
#define HYPERSCOPE_CATALOG_HPP

#include <functional>
#include <string>
#include <vector>

#include "telescope.hpp"

namespace hyperscope {

struct PolynomialFamily {
    std::string name;
    TermKind kind = TermKind::ordinary;
    Symbol n;        // degree symbol
    Symbol argument; // chart variable carrying the x-dependence
    std::vector<Symbol> freeze;
    RationalFunction lattice;  // left-hand multiplier for the three-term relation
    HyperTerm summand;
    bool monic = false;

    HyperTerm member(long delta) const { return summand.shift_parameter(n, delta); }
};

// ---- operators on terms ---------------------------------------------------------

/// t(x+1) - t(x) as a single structured term.
inline HyperTerm forward_difference(const HyperTerm& t, Symbol x) {
    std::map<int, RationalFunction> up{{x.id(), RationalFunction(Polynomial(x) + Polynomial(1))}};
    RationalFunction mult = t.substitute_params(up).quotient(t) - RationalFunction(Rational(1));
    if (mult.is_zero()) throw std::invalid_argument("difference vanishes");
    return t.times_prefactor(mult);
}

/// (t(xq) - t(x)) / ((q-1)x), the q-difference operator.
inline HyperTerm q_difference(const HyperTerm& t, Symbol x) {
    RationalFunction qx{Polynomial(q_symbol()) * Polynomial(x)};
    std::map<int, RationalFunction> up{{x.id(), qx}};
    RationalFunction mult = (t.substitute_params(up).quotient(t) - RationalFunction(Rational(1))) /
                            (RationalFunction(Polynomial(q_symbol())) - RationalFunction(Rational(1))) /
                            RationalFunction(Polynomial(x));
    if (mult.is_zero()) throw std::invalid_argument("q-difference vanishes");
    return t.times_prefactor(mult);
}

/// Derivative in the family's chart: d/dx or the q-difference by kind.
inline HyperTerm chart_derivative(const PolynomialFamily& fam, const HyperTerm& t) {
    return fam.kind == TermKind::ordinary ? t.differentiate(fam.argument)
                                          : q_difference(t, fam.argument);
}

inline PolynomialFamily derivative_family(const PolynomialFamily& fam) {
    PolynomialFamily d = fam;
    d.name = fam.name + "-derivative";
    d.summand = chart_derivative(fam, fam.summand);
    d.monic = false;
    return d;
}

// ---- generic solve --------------------------------------------------------------

struct FamilyRelation {
    Relation relation;
    TelescopeProblem problem;
    TelescopeResult restricted;
};

/// Telescope f_1 against the remaining members, freeze, and take the first
/// instantiation with a nonzero f_1 coefficient.
inline FamilyRelation solve_relation(std::vector<HyperTerm> members, std::vector<Symbol> freeze,
                                     std::vector<std::string> names) {
    TelescopeProblem problem = TelescopeProblem::from_members(std::move(members), freeze);
    TelescopeResult full = extended_telescope(problem);
    TelescopeResult res = restrict_free_of(full, freeze);
    if (res.space.trivial() || !res.has_nontrivial_coefficients())
        throw OnlyTrivialError("only the trivial telescoping solution exists");
    for (size_t j = 0; j < res.space.dimension(); ++j) {
        if (res.space.expr(0)[j].is_zero()) continue;
        std::vector<RationalFunction> v(res.space.dimension());
        v[j] = RationalFunction(Rational(1));
        Certificate cert = instantiate_certificate(res, v);
        return FamilyRelation{sum_relation(cert, std::move(names)), std::move(problem),
                              std::move(res)};
    }
    throw OnlyTrivialError("no solution involves the leading term");
}

// ---- derivations ---------------------------------------------------------------

/// x P_n = alpha P_{n+1} + beta P_n + gamma P_{n-1} (x the lattice value for
/// lattice families).
struct ThreeTermCoefficients {
    RationalFunction alpha, beta, gamma;
    FamilyRelation derivation;
};

inline ThreeTermCoefficients three_term(const PolynomialFamily& fam) {
    HyperTerm f1 = fam.member(0).times_prefactor(fam.lattice);
    FamilyRelation rel = solve_relation(
        {f1, fam.member(1), fam.member(0), fam.member(-1)}, fam.freeze,
        {"x*P[n]", "P[n+1]", "P[n]", "P[n-1]"});
    const auto& q = rel.relation.ratio_form;
    return ThreeTermCoefficients{-q[1], -q[2], -q[3], std::move(rel)};
}

/// sigma(x) P'_n = a_n P_{n+1} + b_n P_n + c_n P_{n-1}.
struct StructureCoefficients {
    RationalFunction a, b, c;
    FamilyRelation derivation;
};

inline StructureCoefficients structure_sigma(const PolynomialFamily& fam,
                                             const RationalFunction& sigma) {
    if (sigma.is_zero()) throw std::invalid_argument("sigma must be nonzero");
    HyperTerm f1 = chart_derivative(fam, fam.member(0)).times_prefactor(sigma);
    FamilyRelation rel = solve_relation(
        {f1, fam.member(1), fam.member(0), fam.member(-1)}, fam.freeze,
        {"sigma*P'[n]", "P[n+1]", "P[n]", "P[n-1]"});
    const auto& q = rel.relation.ratio_form;
    return StructureCoefficients{-q[1], -q[2], -q[3], std::move(rel)};
}

/// P_n = abar_n P'_{n+1} + bbar_n P'_n + cbar_n P'_{n-1}.
inline StructureCoefficients structure_inverse(const PolynomialFamily& fam) {
    FamilyRelation rel = solve_relation(
        {fam.member(0), chart_derivative(fam, fam.member(1)),
         chart_derivative(fam, fam.member(0)), chart_derivative(fam, fam.member(-1))},
        fam.freeze, {"P[n]", "P'[n+1]", "P'[n]", "P'[n-1]"});
    const auto& q = rel.relation.ratio_form;
    return StructureCoefficients{-q[1], -q[2], -q[3], std::move(rel)};
}

/// Shifted-parameter polynomial in the derivative basis, e.g.
/// P^(a+1,b)_n = u_n P'_{n+1} + v_n P'_n + w_n P'_{n-1}.
inline StructureCoefficients param_shift_relation(const PolynomialFamily& fam,
                                                  const std::map<int, RationalFunction>& shift) {
    HyperTerm f1 = fam.member(0).substitute_params(shift);
    FamilyRelation rel = solve_relation(
        {f1, chart_derivative(fam, fam.member(1)), chart_derivative(fam, fam.member(0)),
         chart_derivative(fam, fam.member(-1))},
        fam.freeze, {"P~[n]", "P'[n+1]", "P'[n]", "P'[n-1]"});
    const auto& q = rel.relation.ratio_form;
    return StructureCoefficients{-q[1], -q[2], -q[3], std::move(rel)};
}

/// Connection coefficients C_m(n) of src in terms of dst, via an x-shift
/// operator eliminating src and the basis P_m = dst_m(x+1) - dst_m(x). The
/// recurrence reads a_{m-1} C_{m-1}(n) + b_m C_m(n) + c_{m+1} C_{m+1}(n) = 0.
/// Linear independence of the P_m basis is assumed, not derived.
struct ConnectionResult {
    std::vector<Polynomial> eliminator;  // coefficients of (id, E_x, E_x^-1) applied to src
    RationalFunction a_m, b_m, c_m;
    FamilyRelation stage1, stage3;
};

inline ConnectionResult connection_recurrence(const PolynomialFamily& src,
                                              const PolynomialFamily& dst) {
    Symbol x = src.argument;
    if (x != dst.argument) throw std::invalid_argument("families must share the argument");

    auto shifted = [&](const HyperTerm& t, long d) {
        std::map<int, RationalFunction> up{
            {x.id(), RationalFunction(Polynomial(x) + Polynomial(Rational(d)))}};
        return t.substitute_params(up);
    };

    // stage 1: eliminate src by telescoping (M(x), M(x+1), M(x-1))
    HyperTerm M = src.member(0);
    FamilyRelation stage1 =
        solve_relation({M, shifted(M, 1), shifted(M, -1)}, {}, {"M(x)", "M(x+1)", "M(x-1)"});
    std::vector<Polynomial> op = stage1.relation.normalized;

    // stage 2: apply the operator to the dst member
    HyperTerm Mm = dst.member(0);
    RationalFunction mult = RationalFunction(op[0]) +
                            RationalFunction(op[1]) * shifted(Mm, 1).quotient(Mm) +
                            RationalFunction(op[2]) * shifted(Mm, -1).quotient(Mm);
    if (mult.is_zero()) throw OnlyTrivialError("operator annihilates the target family");
    HyperTerm S = Mm.times_prefactor(mult);

    // stage 3: expand S_m over the difference basis P_m = dst_m(x+1) - dst_m(x)
    auto P = [&](long d) { return forward_difference(dst.member(d), x); };
    FamilyRelation stage3 = solve_relation({S, P(1), P(0), P(-1)}, {x},
                                           {"S[m]", "P[m+1]", "P[m]", "P[m-1]"});
    const auto& q = stage3.relation.ratio_form;
    return ConnectionResult{std::move(op), -q[1], -q[2], -q[3], std::move(stage1),
                            std::move(stage3)};
}

// ---- family constructors --------------------------------------------------------

namespace families {

inline RationalFunction sym(const char* name) {
    return RationalFunction(Polynomial(Symbol::intern(name)));
}
inline RationalFunction cnst(long v) { return RationalFunction(Rational(v)); }

inline PolynomialFamily hermite() {
    Symbol n = Symbol::intern("n"), x = Symbol::intern("x");
    RationalFunction xn = sym("x"), nn = sym("n");
    PolynomialFamily f;
    f.name = "hermite";
    f.n = n;
    f.argument = x;
    f.freeze = {x};
    f.lattice = xn;
    f.summand = HyperTerm(TermKind::ordinary)
                    .times_sympow(cnst(2) * xn, Polynomial(n))
                    .times_poch(-nn / cnst(2))
                    .times_poch((cnst(1) - nn) / cnst(2))
                    .times_poch(cnst(1), -1)
                    .times_power(-cnst(1) / (xn * xn));
    return f;
}

inline PolynomialFamily laguerre() {
    Symbol n = Symbol::intern("n"), x = Symbol::intern("x"), a = Symbol::intern("a");
    RationalFunction an = sym("a"), nn = sym("n"), xn = sym("x");
    PolynomialFamily f;
    f.name = "laguerre";
    f.n = n;
    f.argument = x;
    f.freeze = {x};
    f.lattice = xn;
    f.monic = true;
    f.summand = HyperTerm(TermKind::ordinary)
                    .times_sympow(cnst(-1), Polynomial(n))
                    .times_parampoch(an + cnst(1), n)
                    .times_poch(-nn)
                    .times_poch(an + cnst(1), -1)
                    .times_poch(cnst(1), -1)
                    .times_power(xn);
    (void)a;
    return f;
}

inline PolynomialFamily jacobi() {
    Symbol n = Symbol::intern("n"), x = Symbol::intern("x");
    RationalFunction an = sym("a"), bn = sym("b"), nn = sym("n"), xn = sym("x");
    RationalFunction nab1 = nn + an + bn + cnst(1);
    PolynomialFamily f;
    f.name = "jacobi";
    f.n = n;
    f.argument = x;
    f.freeze = {x};
    f.lattice = xn;
    f.monic = true;
    f.summand = HyperTerm(TermKind::ordinary)
                    .times_parampoch(an + cnst(1), n)
                    .times_sympow(cnst(2), Polynomial(n))
                    .times_parampoch(nab1, n, 0, -1)
                    .times_poch(-nn)
                    .times_poch(nab1)
                    .times_poch(an + cnst(1), -1)
                    .times_poch(cnst(1), -1)
                    .times_power((cnst(1) - xn) / cnst(2));
    return f;
}

inline PolynomialFamily charlier() {
    Symbol n = Symbol::intern("n"), x = Symbol::intern("x");
    RationalFunction an = sym("a"), nn = sym("n"), xn = sym("x");
    PolynomialFamily f;
    f.name = "charlier";
    f.n = n;
    f.argument = x;
    f.freeze = {x};
    f.lattice = xn;
    f.monic = true;
    f.summand = HyperTerm(TermKind::ordinary)
                    .times_sympow(-an, Polynomial(n))
                    .times_poch(-nn)
                    .times_poch(-xn)
                    .times_poch(cnst(1), -1)
                    .times_power(-cnst(1) / an);
    return f;
}

/// Monic Meixner with caller-chosen symbols, reused by the connection setup.
inline PolynomialFamily meixner_with(Symbol n, Symbol x, Symbol b, Symbol c) {
    RationalFunction bn{Polynomial(b)}, cn{Polynomial(c)}, nn{Polynomial(n)}, xn{Polynomial(x)};
    PolynomialFamily f;
    f.name = "meixner";
    f.n = n;
    f.argument = x;
    f.freeze = {x};
    f.lattice = xn;
    f.monic = true;
    f.summand = HyperTerm(TermKind::ordinary)
                    .times_parampoch(bn, n)
                    .times_sympow(cn / (cn - cnst(1)), Polynomial(n))
                    .times_poch(-nn)
                    .times_poch(-xn)
                    .times_poch(bn, -1)
                    .times_poch(cnst(1), -1)
                    .times_power((cn - cnst(1)) / cn);
    return f;
}

inline PolynomialFamily meixner() {
    return meixner_with(Symbol::intern("n"), Symbol::intern("x"), Symbol::intern("b"),
                        Symbol::intern("c"));
}

inline PolynomialFamily krawtchouk() {
    Symbol n = Symbol::intern("n"), x = Symbol::intern("x");
    RationalFunction pn = sym("p"), Nn = sym("N"), nn = sym("n"), xn = sym("x");
    PolynomialFamily f;
    f.name = "krawtchouk";
    f.n = n;
    f.argument = x;
    f.freeze = {x};
    f.lattice = xn;
    f.monic = true;
    f.summand = HyperTerm(TermKind::ordinary)
                    .times_sympow(pn, Polynomial(n))
                    .times_parampoch(-Nn, n)
                    .times_poch(-nn)
                    .times_poch(-xn)
                    .times_poch(-Nn, -1)
                    .times_poch(cnst(1), -1)
                    .times_power(cnst(1) / pn);
    return f;
}

inline PolynomialFamily hahn() {
    Symbol n = Symbol::intern("n"), x = Symbol::intern("x");
    RationalFunction an = sym("a"), bn = sym("b"), Nn = sym("N"), nn = sym("n"), xn = sym("x");
    RationalFunction nab1 = nn + an + bn + cnst(1);
    PolynomialFamily f;
    f.name = "hahn";
    f.n = n;
    f.argument = x;
    f.freeze = {x};
    f.lattice = xn;
    f.monic = true;
    f.summand = HyperTerm(TermKind::ordinary)
                    .times_parampoch(an + cnst(1), n)
                    .times_parampoch(-Nn, n)
                    .times_parampoch(nab1, n, 0, -1)
                    .times_poch(-nn)
                    .times_poch(nab1)
                    .times_poch(-xn)
                    .times_poch(an + cnst(1), -1)
                    .times_poch(-Nn, -1)
                    .times_poch(cnst(1), -1)
                    .times_power(cnst(1));
    return f;
}

inline PolynomialFamily wilson() {
    Symbol n = Symbol::intern("n"), x = Symbol::intern("x");
    Symbol i = Symbol::intern_imaginary("i");
    RationalFunction an = sym("a"), bn = sym("b"), cn = sym("c"), dn = sym("d");
    RationalFunction nn = sym("n"), xn = sym("x");
    RationalFunction xi = xn * RationalFunction(Polynomial(i));
    PolynomialFamily f;
    f.name = "wilson";
    f.n = n;
    f.argument = x;
    f.freeze = {x};
    f.lattice = xn * xn;  // the relation is in the lattice value x^2
    f.summand = HyperTerm(TermKind::ordinary)
                    .times_parampoch(an + bn, n)
                    .times_parampoch(an + cn, n)
                    .times_parampoch(an + dn, n)
                    .times_poch(-nn)
                    .times_poch(nn + an + bn + cn + dn - cnst(1))
                    .times_poch(an + xi)
                    .times_poch(an - xi)
                    .times_poch(an + bn, -1)
                    .times_poch(an + cn, -1)
                    .times_poch(an + dn, -1)
                    .times_poch(cnst(1), -1)
                    .times_power(cnst(1));
    return f;
}

inline PolynomialFamily racah() {
    Symbol n = Symbol::intern("n"), x = Symbol::intern("x");
    RationalFunction an = sym("a"), bn = sym("b"), cn = sym("c"), dn = sym("d");
    RationalFunction nn = sym("n"), xn = sym("x");
    PolynomialFamily f;
    f.name = "racah";
    f.n = n;
    f.argument = x;
    f.freeze = {x};
    f.lattice = xn * (xn + cn + dn + cnst(1));  // lattice value x(x+c+d+1)
    f.summand = HyperTerm(TermKind::ordinary)
                    .times_poch(-nn)
                    .times_poch(nn + an + bn + cnst(1))
                    .times_poch(-xn)
                    .times_poch(xn + cn + dn + cnst(1))
                    .times_poch(an + cnst(1), -1)
                    .times_poch(bn + dn + cnst(1), -1)
                    .times_poch(cn + cnst(1), -1)
                    .times_poch(cnst(1), -1)
                    .times_power(cnst(1));
    return f;
}

inline PolynomialFamily pollaczek() {
    Symbol n = Symbol::intern("n"), eta = Symbol::intern("eta");
    RationalFunction an = sym("a"), bn = sym("b"), nn = sym("n"), en = sym("eta");
    RationalFunction one = cnst(1);
    // x = (a eta^2 + 1)/((1+a) eta); the 2F1 data becomes rational in eta:
    // upper argument b(1-eta^2)/((1+a)(1-a eta^2)), base -(1-a eta^2)/(a eta^2)
    RationalFunction upper = bn * (one - en * en) / ((one + an) * (one - an * en * en));
    RationalFunction base = -(one - an * en * en) / (an * en * en);
    PolynomialFamily f;
    f.name = "pollaczek";
    f.n = n;
    f.argument = eta;
    f.freeze = {eta};
    f.lattice = (an * en * en + one) / ((one + an) * en);
    f.summand = HyperTerm(TermKind::ordinary)
                    .times_sympow(en, Polynomial(n))
                    .times_poch(-nn)
                    .times_poch(upper)
                    .times_poch(bn / an, -1)
                    .times_poch(cnst(1), -1)
                    .times_power(base);
    return f;
}

inline PolynomialFamily qhermite1() {
    Symbol n = Symbol::intern("n"), x = Symbol::intern("x"), N = Symbol::intern("N");
    RationalFunction qn = sym("q"), xn = sym("x"), Nn = sym("N");
    // q^C(n,2) 2phi1[q^-n, 1/x; 0 | q; -qx]; the lower parameter 0 drops out
    Polynomial expn =
        Polynomial(n) * Polynomial(n) * Rational(1, 2) - Polynomial(n) * Rational(1, 2);
    PolynomialFamily f;
    f.name = "qhermite1";
    f.kind = TermKind::q;
    f.n = n;
    f.argument = x;
    f.freeze = {x};
    f.lattice = xn;
    f.summand = HyperTerm(TermKind::q)
                    .with_qlog(n, N)
                    .times_sympow(qn, expn)
                    .times_poch(cnst(1) / Nn)
                    .times_poch(cnst(1) / xn)
                    .times_poch(qn, -1)
                    .times_power(-qn * xn);
    return f;
}

inline PolynomialFamily askey_wilson() {
    Symbol n = Symbol::intern("n"), u = Symbol::intern("u"), N = Symbol::intern("N");
    RationalFunction an = sym("a"), bn = sym("b"), cn = sym("c"), dn = sym("d");
    RationalFunction qn = sym("q"), un = sym("u"), Nn = sym("N");
    PolynomialFamily f;
    f.name = "askey-wilson";
    f.kind = TermKind::q;
    f.n = n;
    f.argument = u;  // u = e^{i theta}, x = (u + 1/u)/2
    f.freeze = {u};
    f.lattice = (un * un + cnst(1)) / (cnst(2) * un);
    f.summand = HyperTerm(TermKind::q)
                    .with_qlog(n, N)
                    .times_parampoch(an * bn, n)
                    .times_parampoch(an * cn, n)
                    .times_parampoch(an * dn, n)
                    .times_sympow(an, -Polynomial(n))
                    .times_poch(cnst(1) / Nn)
                    .times_poch(an * bn * cn * dn * Nn / qn)
                    .times_poch(an * un)
                    .times_poch(an / un)
                    .times_poch(an * bn, -1)
                    .times_poch(an * cn, -1)
                    .times_poch(an * dn, -1)
                    .times_poch(qn, -1)
                    .times_power(qn);
    return f;
}

inline PolynomialFamily qracah() {
    Symbol n = Symbol::intern("n"), Y = Symbol::intern("Y"), N = Symbol::intern("N");
    RationalFunction an = sym("a"), bn = sym("b"), cn = sym("c"), dn = sym("d");
    RationalFunction qn = sym("q"), Yn = sym("Y"), Nn = sym("N");
    PolynomialFamily f;
    f.name = "qracah";
    f.kind = TermKind::q;
    f.n = n;
    f.argument = Y;  // Y = q^x; the lattice value is q^-x + c d q^(x+1)
    f.freeze = {Y};
    f.lattice = cnst(1) / Yn + cn * dn * qn * Yn;
    f.summand = HyperTerm(TermKind::q)
                    .with_qlog(n, N)
                    .times_poch(cnst(1) / Nn)
                    .times_poch(an * bn * qn * Nn)
                    .times_poch(cnst(1) / Yn)
                    .times_poch(cn * dn * qn * Yn)
                    .times_poch(an * qn, -1)
                    .times_poch(bn * dn * qn, -1)
                    .times_poch(cn * qn, -1)
                    .times_poch(qn, -1)
                    .times_power(qn);
    return f;
}

}  // namespace families

inline const std::vector<std::string>& family_names() {
    static const std::vector<std::string> names{
        "hermite",   "laguerre", "jacobi",    "charlier",  "meixner",
        "krawtchouk", "hahn",     "wilson",    "racah",     "pollaczek",
        "qhermite1", "askey-wilson", "qracah"};
    return names;
}

inline PolynomialFamily family(const std::string& name) {
    if (name == "hermite") return families::hermite();
    if (name == "laguerre") return families::laguerre();
    if (name == "jacobi") return families::jacobi();
    if (name == "charlier") return families::charlier();
    if (name == "meixner") return families::meixner();
    if (name == "krawtchouk") return families::krawtchouk();
    if (name == "hahn") return families::hahn();
    if (name == "wilson") return families::wilson();
    if (name == "racah") return families::racah();
    if (name == "pollaczek") return families::pollaczek();
    if (name == "qhermite1") return families::qhermite1();
    if (name == "askey-wilson") return families::askey_wilson();
    if (name == "qracah") return families::qracah();
    throw std::invalid_argument("unknown family: " + name);
}

/// The Meixner -> Meixner connection problem of the worked example: source
/// parameters (gamma, mu), target parameters (delta, nu), target degree m.
inline ConnectionResult meixner_connection() {
    Symbol x = Symbol::intern("x");
    PolynomialFamily src = families::meixner_with(Symbol::intern("n"), x,
                                                  Symbol::intern("gamma"), Symbol::intern("mu"));
    PolynomialFamily dst = families::meixner_with(Symbol::intern("m"), x,
                                                  Symbol::intern("delta"), Symbol::intern("nu"));
    return connection_recurrence(src, dst);
}

}  // namespace hyperscope

#endif  // HYPERSCOPE_CATALOG_HPP
