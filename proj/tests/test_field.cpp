// Copyright 2026 hyperscope contributors
// SPDX-License-Identifier: Apache-2.0

#include <hyperscope/linsolve.hpp>
#include <hyperscope/poly_gcd.hpp>
#include <hyperscope/ratfun.hpp>

#include <catch2/catch_amalgamated.hpp>

#include "support/generators.hpp"

using namespace hyperscope;
using testsupport::naive_resultant;
using testsupport::random_nonzero_polynomial;
using testsupport::random_rational;

namespace {
Symbol k() { return Symbol::intern("k"); }
Symbol a() { return Symbol::intern("a"); }
Symbol b() { return Symbol::intern("b"); }
Symbol h() { return Symbol::intern("h"); }

Polynomial P(Symbol s) { return Polynomial(s); }
}  // namespace

TEST_CASE("normalize reduces, scales and fixes signs") {
    // (k^2 - 1)/(k - 1) -> k + 1
    RationalFunction f(P(k()) * P(k()) - Polynomial(1), P(k()) - Polynomial(1));
    CHECK(f.num() == P(k()) + Polynomial(1));
    CHECK(f.den() == Polynomial(Rational(1)));

    // (2k + 2a)/4 -> (k + a)/2
    RationalFunction g(P(k()) * 2 + P(a()) * 2, Polynomial(Rational(4)));
    CHECK(g.num() == P(k()) + P(a()));
    CHECK(g.den() == Polynomial(Rational(2)));

    // (-k)/(-1) -> k
    RationalFunction s(-P(k()), Polynomial(Rational(-1)));
    CHECK(s.num() == P(k()));
    CHECK(s.den() == Polynomial(Rational(1)));

    CHECK_THROWS_AS(RationalFunction(P(k()), Polynomial()), ZeroDivisionError);
}

TEST_CASE("normalize is idempotent and multiplicative") {
    std::mt19937_64 rng(42);
    std::vector<Symbol> vars{k(), a()};
    for (int trial = 0; trial < 30; ++trial) {
        Polynomial pn = random_nonzero_polynomial(rng, vars, 3, 4);
        Polynomial pd = random_nonzero_polynomial(rng, vars, 3, 4);
        RationalFunction f(pn, pd);
        RationalFunction again(f.num(), f.den());
        CHECK(f == again);

        Polynomial qn = random_nonzero_polynomial(rng, vars, 2, 3);
        Polynomial qd = random_nonzero_polynomial(rng, vars, 2, 3);
        RationalFunction g(qn, qd);
        CHECK((f * g) / f == g);
    }
}

TEST_CASE("exact arithmetic matches unsimplified evaluation") {
    std::mt19937_64 rng(7);
    std::vector<Symbol> vars{k(), a(), b()};
    int done = 0;
    while (done < 20) {
        Polynomial pn = random_nonzero_polynomial(rng, vars, 3, 5);
        Polynomial pd = random_nonzero_polynomial(rng, vars, 2, 3);
        Polynomial qn = random_nonzero_polynomial(rng, vars, 2, 4);
        Polynomial qd = random_nonzero_polynomial(rng, vars, 2, 3);
        RationalFunction combined =
            RationalFunction(pn, pd) * RationalFunction(qn, qd) + RationalFunction(pn, qd);
        std::map<int, Rational> pt{{k().id(), random_rational(rng)},
                                   {a().id(), random_rational(rng)},
                                   {b().id(), random_rational(rng)}};
        try {
            Rational direct = (pn.evaluate(pt) / pd.evaluate(pt)) * (qn.evaluate(pt) / qd.evaluate(pt)) +
                              pn.evaluate(pt) / qd.evaluate(pt);
            Rational via = combined.evaluate(pt);
            CHECK(direct == via);
            ++done;
        } catch (const PoleError&) {
            continue;  // resample
        } catch (const std::exception& e) {
            // division by zero inside the straight-line evaluation
            continue;
        }
    }
}

TEST_CASE("gcd_main in the main variable over the parameter field") {
    // gcd(k^2-1, k-1; k) = k-1
    Polynomial p1 = P(k()) * P(k()) - Polynomial(1);
    Polynomial q1 = P(k()) - Polynomial(1);
    CHECK(gcd_main(p1, q1, k()) == q1);

    // gcd((k+a)(k+1), (k+a)(k+2); k) = k+a
    Polynomial ka = P(k()) + P(a());
    CHECK(gcd_main(ka * (P(k()) + Polynomial(1)), ka * (P(k()) + Polynomial(2)), k()) == ka);

    // gcd(k+a, k+b; k) = 1
    CHECK(gcd_main(P(k()) + P(a()), P(k()) + P(b()), k()) == Polynomial(Rational(1)));
}

TEST_CASE("gcd_main divides both arguments exactly") {
    std::mt19937_64 rng(11);
    std::vector<Symbol> vars{k(), a()};
    for (int trial = 0; trial < 25; ++trial) {
        Polynomial u = random_nonzero_polynomial(rng, vars, 2, 3);
        Polynomial v = random_nonzero_polynomial(rng, vars, 2, 3);
        Polynomial w = random_nonzero_polynomial(rng, vars, 2, 2);
        Polynomial g = gcd_main(u * w, v * w, k());
        CHECK(Polynomial::try_divide(u * w, g).has_value());
        CHECK(Polynomial::try_divide(v * w, g).has_value());
    }
}

TEST_CASE("resultants") {
    // Res_k(k, k+h) = +-h
    Polynomial r1 = resultant(P(k()), P(k()) + P(h()), k());
    CHECK((r1 == P(h()) || r1 == -P(h())));

    // Res_k(k+a, k+a+h) = +-h
    Polynomial r2 = resultant(P(k()) + P(a()), P(k()) + P(a()) + P(h()), k());
    CHECK((r2 == P(h()) || r2 == -P(h())));

    // Res_k(k(k+2), k+h) = +-h(h-2), checked against a naive Sylvester oracle
    Polynomial r3 = resultant(P(k()) * (P(k()) + Polynomial(2)), P(k()) + P(h()), k());
    Polynomial expect = P(h()) * (P(h()) - Polynomial(2));
    CHECK((r3 == expect || r3 == -expect));
    for (long h0 = 0; h0 <= 5; ++h0) {
        Rational oracle = naive_resultant({Rational(0), Rational(2), Rational(1)},
                                          {Rational(h0), Rational(1)});
        std::map<int, Rational> pt{{h().id(), Rational(h0)}};
        CHECK(r3.evaluate(pt) == oracle);
    }
}

TEST_CASE("resultant vanishes exactly when gcd_main is nontrivial") {
    std::mt19937_64 rng(13);
    std::vector<Symbol> vars{k(), a()};
    for (int trial = 0; trial < 20; ++trial) {
        Polynomial u = random_nonzero_polynomial(rng, vars, 2, 3);
        Polynomial v = random_nonzero_polynomial(rng, vars, 2, 3);
        if (u.degree(k()) < 1 || v.degree(k()) < 1) continue;
        Polynomial res = resultant(u, v, k());
        bool gcd_nontrivial = gcd_main(u, v, k()).degree(k()) > 0;
        CHECK(res.is_zero() == gcd_nontrivial);
        // and a forced common factor makes it vanish
        Polynomial shared = P(k()) + P(a());
        CHECK(resultant(u * shared, v * shared, k()).is_zero());
    }
}

TEST_CASE("nonnegative integer root extraction") {
    // h(h-2) -> {0, 2}
    Polynomial p = P(h()) * (P(h()) - Polynomial(2));
    CHECK(nonneg_integer_roots(p, h()) == std::set<long>{0, 2});

    // h - a -> {} (parameter-dependent root excluded)
    CHECK(nonneg_integer_roots(P(h()) - P(a()), h()).empty());

    // 2h - 1 -> {} (non-integer root)
    CHECK(nonneg_integer_roots(P(h()) * 2 - Polynomial(1), h()).empty());

    // negative roots excluded, large roots found
    Polynomial q = (P(h()) + Polynomial(3)) * (P(h()) - Polynomial(41));
    CHECK(nonneg_integer_roots(q, h()) == std::set<long>{41});

    // root shared with a parameter factor: (h-1)(h-a) vanishes identically only at h=1
    CHECK(nonneg_integer_roots((P(h()) - Polynomial(1)) * (P(h()) - P(a())), h()) ==
          std::set<long>{1});
}

TEST_CASE("nullspace of [1 1]") {
    std::vector<std::vector<RationalFunction>> m{
        {RationalFunction(Rational(1)), RationalFunction(Rational(1))}};
    SolutionSpace s = nullspace(m, {"a1", "a2"});
    REQUIRE(s.dimension() == 1);
    // free variable anchored at the earliest unknown: a1 = v1, a2 = -v1
    CHECK(s.is_free(0));
    CHECK(s.expr(0)[0] == RationalFunction(Rational(1)));
    CHECK(s.expr(1)[0] == RationalFunction(Rational(-1)));
    CHECK(s.satisfies_system(s.basis_vector(0)));
}

TEST_CASE("nullspace of the identity is trivial") {
    std::vector<std::vector<RationalFunction>> m{
        {RationalFunction(Rational(1)), RationalFunction()},
        {RationalFunction(), RationalFunction(Rational(1))}};
    SolutionSpace s = nullspace(m, {"a1", "a2"});
    CHECK(s.dimension() == 0);
    CHECK(s.trivial());
}

TEST_CASE("nullspace of a parametric rank-1 matrix") {
    RationalFunction ra{P(a())};
    std::vector<std::vector<RationalFunction>> m{
        {ra, RationalFunction(Rational(1))},
        {ra * ra, ra}};
    SolutionSpace s = nullspace(m, {"a1", "a2"});
    REQUIRE(s.dimension() == 1);
    // a1 = v1 free, a2 = -a*v1
    CHECK(s.is_free(0));
    CHECK(s.expr(1)[0] == -ra);
    // substitution check at a = 2, 3, 5
    auto vec = s.basis_vector(0);
    for (long av : {2L, 3L, 5L}) {
        std::map<int, Rational> pt{{a().id(), Rational(av)}};
        for (auto& row : m) {
            Rational acc(0);
            for (size_t c = 0; c < vec.size(); ++c)
                acc += row[c].evaluate(pt) * vec[c].evaluate(pt);
            CHECK(acc == 0);
        }
    }
}

TEST_CASE("nullspace basis vectors satisfy random systems") {
    std::mt19937_64 rng(17);
    std::vector<Symbol> vars{a(), b()};
    for (int trial = 0; trial < 10; ++trial) {
        size_t rows = 2 + static_cast<size_t>(trial % 3), cols = 4;
        std::vector<std::vector<RationalFunction>> m(rows, std::vector<RationalFunction>(cols));
        for (auto& row : m)
            for (auto& e : row) e = RationalFunction(testsupport::random_polynomial(rng, vars, 1, 2));
        SolutionSpace s = nullspace(m, {"u1", "u2", "u3", "u4"});
        for (size_t j = 0; j < s.dimension(); ++j) CHECK(s.satisfies_system(s.basis_vector(j)));
        // random instantiations stay inside the space
        if (s.dimension() > 0) {
            std::vector<RationalFunction> v(s.dimension());
            for (auto& x : v) x = RationalFunction(random_rational(rng, 5));
            CHECK(s.satisfies_system(s.instantiate(v)));
        }
    }
}

TEST_CASE("polynomial arithmetic with the imaginary symbol") {
    Symbol i = Symbol::intern_imaginary("i");
    Symbol x = Symbol::intern("x");
    Polynomial pi(i), px(x);
    // (a + xi)(a - xi) = a^2 + x^2
    Polynomial prod = (P(a()) + px * pi) * (P(a()) - px * pi);
    CHECK(prod == P(a()) * P(a()) + px * px);
    // i^2 = -1, i^3 = -i, i^4 = 1
    CHECK(pi * pi == Polynomial(Rational(-1)));
    CHECK(pi.pow(3) == -pi);
    CHECK(pi.pow(4) == Polynomial(Rational(1)));
    // denominators are rationalized away
    RationalFunction f(Polynomial(Rational(1)), P(a()) + pi);
    CHECK_FALSE(f.den().has_imaginary());
    CHECK(f.den() == P(a()) * P(a()) + Polynomial(1));
}
