// Copyright 2026 hyperscope contributors
// SPDX-License-Identifier: Apache-2.0

#include <hyperscope/telescope.hpp>

#include <catch2/catch_amalgamated.hpp>

#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace hyperscope;
using testsupport::oracle_binomial;

namespace {

Symbol n() { return Symbol::intern("n"); }
Symbol x() { return Symbol::intern("x"); }
RationalFunction rf(Symbol s) { return RationalFunction(Polynomial(s)); }
RationalFunction rfc(long v) { return RationalFunction(Rational(v)); }

HyperTerm hermite_summand() {
    return HyperTerm(TermKind::ordinary)
        .times_sympow(rf(x()) * rfc(2), Polynomial(n()))
        .times_poch(-rf(n()) / rfc(2))
        .times_poch((rfc(1) - rf(n())) / rfc(2))
        .times_poch(rfc(1), -1)
        .times_power(-rfc(1) / (rf(x()) * rf(x())));
}

/// C(n,k) = (-n)_k (-1)^k / k!
HyperTerm binomial_summand() {
    return HyperTerm(TermKind::ordinary)
        .times_poch(-rf(n()))
        .times_poch(rfc(1), -1)
        .times_power(rfc(-1));
}

HyperTerm binomial_squared_summand() {
    return HyperTerm(TermKind::ordinary)
        .times_poch(-rf(n()), 2)
        .times_poch(rfc(1), -2);
}

/// Certificate soundness as a rational identity: sum_i a_i p_i / Q equals
/// g_mult(shifted) * r - g_mult.
bool certificate_identity(const TelescopeProblem& p, const Certificate& cert) {
    Symbol main = main_symbol(p.kind);
    RationalFunction lhs;
    for (size_t i = 0; i < cert.coeffs.size(); ++i)
        lhs += cert.coeffs[i] * RationalFunction(p.family.p[i], p.family.Q);
    RationalFunction shifted =
        p.kind == TermKind::ordinary
            ? cert.g_multiplier.shift(main, Rational(1))
            : cert.g_multiplier.subst(
                  main, RationalFunction(Polynomial(q_symbol()) * Polynomial(main)));
    return lhs == shifted * p.family.r - cert.g_multiplier;
}

}  // namespace

TEST_CASE("Hermite example: unrestricted solution space") {
    HyperTerm h = hermite_summand();
    HyperTerm f1 = h.times_prefactor(rf(x()));
    TelescopeProblem problem = TelescopeProblem::from_members(
        {f1, h.shift_parameter(n(), 1), h, h.shift_parameter(n(), -1)});
    TelescopeResult res = extended_telescope(problem);

    REQUIRE(res.space.dimension() == 2);
    // a1 = v1, a2 = v2 anchored in order
    CHECK(res.space.anchor(0) == 0);
    CHECK(res.space.anchor(1) == 1);
    CHECK(res.space.expr(0) == std::vector<RationalFunction>{rfc(1), rfc(0)});
    CHECK(res.space.expr(1) == std::vector<RationalFunction>{rfc(0), rfc(1)});
    // a3 = -x(v1 + 2 v2), a4 = 2n v2
    CHECK(res.space.expr(2) == std::vector<RationalFunction>{-rf(x()), -rfc(2) * rf(x())});
    CHECK(res.space.expr(3) == std::vector<RationalFunction>{rfc(0), rfc(2) * rf(n())});
    // g = -4k v2 / (n+1-2k) * f_1
    RationalFunction kp{Polynomial(k_symbol())};
    CHECK(res.g_basis[0].is_zero());
    CHECK(res.g_basis[1] == -rfc(4) * kp / (rf(n()) + rfc(1) - rfc(2) * kp));

    // re-substitution: random instantiations satisfy the system
    std::vector<RationalFunction> v{rfc(3), rfc(-7)};
    CHECK(res.space.satisfies_system(res.space.instantiate(v)));

    // certificate identity for both basis certificates
    for (size_t j = 0; j < 2; ++j) {
        std::vector<RationalFunction> e(2);
        e[j] = rfc(1);
        Certificate cert = instantiate_certificate(res, e);
        CHECK(certificate_identity(problem, cert));
    }
}

TEST_CASE("Hermite example: x-freeness restriction and the summed relation") {
    HyperTerm h = hermite_summand();
    HyperTerm f1 = h.times_prefactor(rf(x()));
    TelescopeProblem problem = TelescopeProblem::from_members(
        {f1, h.shift_parameter(n(), 1), h, h.shift_parameter(n(), -1)}, {x()});
    TelescopeResult full = extended_telescope(problem);
    TelescopeResult res = restrict_free_of(full, problem.freeze);

    REQUIRE(res.space.dimension() == 1);
    CHECK(res.space.expr(0) == std::vector<RationalFunction>{rfc(1)});
    CHECK(res.space.expr(1) == std::vector<RationalFunction>{-rfc(1) / rfc(2)});
    CHECK(res.space.expr(2) == std::vector<RationalFunction>{rfc(0)});
    CHECK(res.space.expr(3) == std::vector<RationalFunction>{-rf(n())});
    RationalFunction kp{Polynomial(k_symbol())};
    CHECK(res.g_basis[0] == rfc(2) * kp / (rf(n()) + rfc(1) - rfc(2) * kp));

    Certificate cert = instantiate_certificate(res, {rfc(1)});
    CHECK(certificate_identity(problem, cert));
    // k-free and x-free coefficients
    for (auto& c : cert.coeffs) {
        CHECK_FALSE(c.contains(k_symbol()));
        CHECK_FALSE(c.contains(x()));
    }

    Relation rel = sum_relation(cert, {"x*H[n]", "H[n+1]", "H[n]", "H[n-1]"});
    // x H_n = 1/2 H_{n+1} + n H_{n-1}
    CHECK(rel.ratio_form ==
          std::vector<RationalFunction>{rfc(1), -rfc(1) / rfc(2), rfc(0), -rf(n())});
    CHECK(rel.normalized ==
          std::vector<Polynomial>{Polynomial(Rational(2)), Polynomial(Rational(-1)),
                                  Polynomial(), Polynomial(Rational(-2)) * Polynomial(n())});
    CHECK(rel.boundary_assumed_vanishing);

    // scaled instantiation yields the identical normalized relation
    Certificate scaled = instantiate_certificate(res, {rfc(5) / rfc(3)});
    CHECK(sum_relation(scaled, rel.members).normalized == rel.normalized);

    // the zero instantiation is rejected when summed
    CHECK_THROWS_AS(sum_relation(instantiate_certificate(res, {rfc(0)}), rel.members),
                    AllZeroError);
}

TEST_CASE("family (f, -f) contains the cancellation solution") {
    HyperTerm f = hermite_summand();
    TelescopeProblem problem =
        TelescopeProblem::from_members({f, f.times_prefactor(-rfc(1))});
    TelescopeResult res = extended_telescope(problem);
    // the vector a1 = a2 = 1, all x-coefficients 0, lies in the space
    std::vector<RationalFunction> vec(res.space.unknown_count());
    vec[0] = rfc(1);
    vec[1] = rfc(1);
    CHECK(res.space.satisfies_system(vec));
}

TEST_CASE("single summable member reduces to Gosper") {
    // f = k k!/n with a dummy parameter n
    HyperTerm f = HyperTerm(TermKind::ordinary)
                      .times_prefactor(RationalFunction(Polynomial(k_symbol())) / rf(n()))
                      .times_poch(rfc(1));
    TelescopeProblem problem = TelescopeProblem::from_members({f});
    TelescopeResult res = extended_telescope(problem);
    REQUIRE(res.space.dimension() == 1);
    CHECK(res.space.anchor(0) == 0);

    Certificate cert = instantiate_certificate(res, {rfc(1)});
    CHECK(certificate_identity(problem, cert));
    auto gosper = gosper_sum(f);
    REQUIRE(gosper.has_value());
    CHECK(cert.g_multiplier == gosper->multiplier);  // g = v1 * k!/n
}

TEST_CASE("classic Zeilberger on the binomial sums") {
    ZeilbergerResult bin = classic_zeilberger(binomial_summand(), n(), 3);
    CHECK(bin.order == 1);
    // S(n+1) - 2 S(n) = 0, leading coefficient positive
    REQUIRE(bin.coeffs.size() == 2);
    CHECK(bin.coeffs[0] == Polynomial(Rational(-2)));
    CHECK(bin.coeffs[1] == Polynomial(Rational(1)));
    // oracle: sum_k C(n,k) = 2^n for n <= 20
    for (long nv = 0; nv <= 20; ++nv) {
        Rational s = pow_rational(Rational(2), nv);
        Rational s1 = pow_rational(Rational(2), nv + 1);
        std::map<int, Rational> pt{{n().id(), Rational(nv)}};
        CHECK(bin.coeffs[0].evaluate(pt) * s + bin.coeffs[1].evaluate(pt) * s1 == 0);
    }
    CHECK(certificate_identity(bin.problem, bin.certificate));

    ZeilbergerResult sq = classic_zeilberger(binomial_squared_summand(), n(), 3);
    CHECK(sq.order == 1);
    // (n+1) S(n+1) = 2(2n+1) S(n)
    REQUIRE(sq.coeffs.size() == 2);
    CHECK(sq.coeffs[1] == Polynomial(n()) + Polynomial(1));
    CHECK(sq.coeffs[0] == Polynomial(Rational(-2)) * (Polynomial(n()) * 2 + Polynomial(1)));
    // oracle: sum_k C(n,k)^2 = C(2n,n) for n <= 15
    for (long nv = 0; nv <= 15; ++nv) {
        Rational s = oracle_binomial(2 * nv, nv);
        Rational s1 = oracle_binomial(2 * nv + 2, nv + 1);
        std::map<int, Rational> pt{{n().id(), Rational(nv)}};
        CHECK(sq.coeffs[0].evaluate(pt) * s + sq.coeffs[1].evaluate(pt) * s1 == 0);
    }

    // summand independent of n: S(n+1) - S(n) = 0
    HyperTerm indep = HyperTerm(TermKind::ordinary).times_poch(rfc(1), -1).times_power(rfc(2));
    ZeilbergerResult triv = classic_zeilberger(indep, n(), 2);
    CHECK(triv.order == 1);
    CHECK(triv.coeffs[0] == Polynomial(Rational(-1)));
    CHECK(triv.coeffs[1] == Polynomial(Rational(1)));
}

TEST_CASE("specialization: extended telescoping equals classic Zeilberger") {
    HyperTerm F = binomial_summand();
    TelescopeProblem ext =
        TelescopeProblem::from_members({F, F.shift_parameter(n(), 1)});
    TelescopeResult res = extended_telescope(ext);
    ZeilbergerResult classic = classic_zeilberger(F, n(), 1);
    REQUIRE(res.space.dimension() >= 1);
    Certificate cert = instantiate_certificate(res, [&] {
        std::vector<RationalFunction> v(res.space.dimension());
        v[0] = rfc(1);
        return v;
    }());
    Relation rel = sum_relation(cert, {"S(n)", "S(n+1)"});
    // same normalized relation (up to the overall sign convention)
    std::vector<Polynomial> a = rel.normalized, b = classic.coeffs;
    bool same = a == b;
    if (!same) {
        for (auto& p : a) p = -p;
        same = a == b;
    }
    CHECK(same);
}

TEST_CASE("restriction with empty freeze set is the identity") {
    HyperTerm h = hermite_summand();
    TelescopeProblem problem =
        TelescopeProblem::from_members({h.times_prefactor(rf(x())), h.shift_parameter(n(), 1), h,
                                        h.shift_parameter(n(), -1)});
    TelescopeResult res = extended_telescope(problem);
    TelescopeResult same = restrict_free_of(res, {});
    CHECK(same.space.dimension() == res.space.dimension());
    for (size_t i = 0; i < res.space.unknown_count(); ++i)
        CHECK(same.space.expr(i) == res.space.expr(i));

    // freeze over a symbol absent from all coefficients is also the identity
    Symbol unused = Symbol::intern("zz");
    TelescopeResult same2 = restrict_free_of(res, {unused});
    CHECK(same2.space.dimension() == res.space.dimension());
}
