// Copyright 2026 hyperscope contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef HYPERSCOPE_RATFUN_HPP
#define HYPERSCOPE_RATFUN_HPP

#include <map>
#include <optional>

#include "poly_gcd.hpp"

namespace hyperscope {

/// Reduced quotient of polynomials over Q. Canonical form: numerator and
/// denominator coprime, both integer-coefficient with the pair primitive,
/// denominator's graded-lex leading coefficient positive. Two equal rational
/// functions are representation-identical.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Rational(1)) {}
    RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) { normalize(); }  // NOLINT
    RationalFunction(long c) : RationalFunction(Rational(c)) {}                        // NOLINT
    RationalFunction(const Polynomial& p) : num_(p), den_(Rational(1)) { normalize(); }  // NOLINT
    explicit RationalFunction(Symbol s) : num_(Polynomial(s)), den_(Rational(1)) {}
    RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }

    std::optional<Rational> as_rational() const {
        if (!is_constant()) return std::nullopt;
        return constant_value();
    }

    /// The value when this is an explicit integer literal.
    std::optional<long> as_integer() const {
        auto r = as_rational();
        if (!r) return std::nullopt;
        return as_long(*r);
    }

    bool contains(Symbol s) const { return num_.contains(s) || den_.contains(s); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        Polynomial g = poly_gcd(a.den_, b.den_);
        Polynomial da = Polynomial::divide_exact(a.den_, g);
        Polynomial db = Polynomial::divide_exact(b.den_, g);
        return RationalFunction(a.num_ * db + b.num_ * da, da * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return a + (-b);
    }
    RationalFunction operator-() const {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero() || b.is_zero()) return RationalFunction();
        // cross-cancel before multiplying
        Polynomial g1 = poly_gcd(a.num_, b.den_);
        Polynomial g2 = poly_gcd(b.num_, a.den_);
        return RationalFunction(
            Polynomial::divide_exact(a.num_, g1) * Polynomial::divide_exact(b.num_, g2),
            Polynomial::divide_exact(a.den_, g2) * Polynomial::divide_exact(b.den_, g1));
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw ZeroDivisionError("rational function division by zero");
        return a * RationalFunction(b.den_, b.num_);
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    RationalFunction pow(long e) const {
        if (e == 0) return RationalFunction(Rational(1));
        if (e < 0) {
            if (is_zero()) throw ZeroDivisionError("zero to a negative power");
            return RationalFunction(den_, num_).pow(-e);
        }
        RationalFunction r(Rational(1));
        RationalFunction b = *this;
        while (e) {
            if (e & 1) r *= b;
            if (e >>= 1) b *= b;
        }
        return r;
    }

    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }
    bool operator<(const RationalFunction& o) const {
        int c = Polynomial::compare(num_, o.num_);
        if (c != 0) return c < 0;
        return Polynomial::compare(den_, o.den_) < 0;
    }

    RationalFunction shift(Symbol s, const Rational& offset) const {
        return RationalFunction(num_.shift(s, offset), den_.shift(s, offset));
    }

    RationalFunction subst(Symbol s, const RationalFunction& value) const {
        std::map<int, RationalFunction> b{{s.id(), value}};
        return subst_all(b);
    }

    RationalFunction subst_all(const std::map<int, RationalFunction>& bindings) const {
        return subst_poly(num_, bindings) / subst_poly(den_, bindings);
    }

    /// Substitute rational functions into a polynomial.
    static RationalFunction subst_poly(const Polynomial& p,
                                       const std::map<int, RationalFunction>& bindings) {
        std::vector<std::pair<int, const RationalFunction*>> bound;
        for (auto& [id, rf] : bindings)
            if (p.contains_id(id)) bound.push_back({id, &rf});
        if (bound.empty()) return RationalFunction(p);

        std::map<int, int> degs;
        Polynomial den(Rational(1));
        for (auto& [id, rf] : bound) {
            degs[id] = p.degree_id(id);
            den = den * rf->den().pow(degs[id]);
        }
        Polynomial num;
        for (auto& [m, c] : p.terms()) {
            Polynomial t(c);
            std::vector<Monomial::Pair> rest;
            for (auto& pr : m.pairs()) {
                auto it = bindings.find(pr.first);
                if (it == bindings.end()) {
                    rest.push_back(pr);
                    continue;
                }
                t = t * it->second.num().pow(pr.second) *
                    it->second.den().pow(degs[pr.first] - pr.second);
            }
            for (auto& [id, rf] : bound)
                if (!m.contains(id)) t = t * rf->den().pow(degs[id]);
            num += t * Polynomial::term(Monomial(std::move(rest)), Rational(1));
        }
        return RationalFunction(num, den);
    }

    RationalFunction derivative(Symbol s) const {
        return RationalFunction(num_.derivative(s) * den_ - num_ * den_.derivative(s), den_ * den_);
    }

    Rational evaluate(const std::map<int, Rational>& values) const {
        Rational d = den_.evaluate(values);
        if (d == 0) throw PoleError("pole in rational function evaluation");
        return num_.evaluate(values) / d;
    }

    GaussianRational evaluate_gaussian(const std::map<int, GaussianRational>& values) const {
        GaussianRational d = den_.evaluate_gaussian(values);
        if (d.is_zero()) throw PoleError("pole in rational function evaluation");
        return num_.evaluate_gaussian(values) / d;
    }

    /// If this equals q^j exactly (coefficient 1), the integer j.
    std::optional<long> as_power_of(Symbol q) const {
        auto mono_exp = [&](const Polynomial& p) -> std::optional<long> {
            if (p.term_count() != 1) return std::nullopt;
            auto& [m, c] = *p.terms().begin();
            if (c != 1) return std::nullopt;
            for (auto& pr : m.pairs())
                if (pr.first != q.id()) return std::nullopt;
            return m.exponent(q.id());
        };
        auto en = mono_exp(num_);
        auto ed = mono_exp(den_);
        if (!en || !ed) return std::nullopt;
        return *en - *ed;
    }

private:
    void normalize() {
        if (den_.is_zero()) throw ZeroDivisionError("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = Polynomial(Rational(1));
            return;
        }
        if (den_.has_imaginary()) {
            Polynomial conj = den_.conjugate_imaginary();
            num_ = num_ * conj;
            den_ = den_ * conj;
        }
        Polynomial g = poly_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = Polynomial::divide_exact(num_, g);
            den_ = Polynomial::divide_exact(den_, g);
        }
        Rational cn = num_.content(), cd = den_.content();
        Rational scale = rational_gcd(cn, cd);
        if (scale != 1) {
            num_ *= Rational(1) / scale;
            den_ *= Rational(1) / scale;
        }
        if (den_.leading_coefficient() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }

    Polynomial num_, den_;
};

/// Spec-facing normalization entry point (construction already normalizes).
inline RationalFunction normalize(const RationalFunction& f) { return f; }

}  // namespace hyperscope

#endif  // HYPERSCOPE_RATFUN_HPP
