// Copyright 2026 hyperscope contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef HYPERSCOPE_POLY_HPP
#define HYPERSCOPE_POLY_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "numbers.hpp"
#include "symbols.hpp"

namespace hyperscope {

/// Power product over interned symbols; exponents positive, pairs sorted by
/// symbol id. The empty monomial is 1.
class Monomial {
public:
    using Pair = std::pair<int, int>;  // (symbol id, exponent > 0)

    Monomial() = default;
    explicit Monomial(std::vector<Pair> pairs) : v_(std::move(pairs)) {
        std::sort(v_.begin(), v_.end());
    }
    static Monomial var(Symbol s, int e = 1) {
        Monomial m;
        if (e != 0) m.v_.push_back({s.id(), e});
        return m;
    }

    const std::vector<Pair>& pairs() const { return v_; }
    bool is_one() const { return v_.empty(); }

    int total_degree() const {
        int d = 0;
        for (auto& p : v_) d += p.second;
        return d;
    }

    int exponent(int sym_id) const {
        for (auto& p : v_)
            if (p.first == sym_id) return p.second;
        return 0;
    }

    bool contains(int sym_id) const { return exponent(sym_id) != 0; }

    /// Product; also applies s^2 = -1 for imaginary symbols and reports the
    /// resulting sign flip through `sign`.
    static Monomial mul(const Monomial& a, const Monomial& b, int& sign) {
        sign = 1;
        Monomial r;
        r.v_.reserve(a.v_.size() + b.v_.size());
        size_t i = 0, j = 0;
        while (i < a.v_.size() || j < b.v_.size()) {
            if (j == b.v_.size() || (i < a.v_.size() && a.v_[i].first < b.v_[j].first))
                r.v_.push_back(a.v_[i++]);
            else if (i == a.v_.size() || b.v_[j].first < a.v_[i].first)
                r.v_.push_back(b.v_[j++]);
            else {
                r.v_.push_back({a.v_[i].first, a.v_[i].second + b.v_[j].second});
                ++i, ++j;
            }
        }
        if (Symbol::any_imaginary_registered()) {
            for (auto& p : r.v_) {
                if (p.second >= 2 && Symbol::is_imaginary_id(p.first)) {
                    if ((p.second / 2) % 2 != 0) sign = -sign;
                    p.second %= 2;
                }
            }
            r.v_.erase(std::remove_if(r.v_.begin(), r.v_.end(),
                                      [](const Pair& p) { return p.second == 0; }),
                       r.v_.end());
        }
        return r;
    }

    /// Exact quotient a / b, or nullopt if some exponent would go negative.
    static std::optional<Monomial> try_div(const Monomial& a, const Monomial& b) {
        Monomial r;
        size_t i = 0, j = 0;
        while (j < b.v_.size()) {
            if (i == a.v_.size()) return std::nullopt;
            if (a.v_[i].first < b.v_[j].first) {
                r.v_.push_back(a.v_[i++]);
            } else if (a.v_[i].first > b.v_[j].first) {
                return std::nullopt;
            } else {
                int e = a.v_[i].second - b.v_[j].second;
                if (e < 0) return std::nullopt;
                if (e > 0) r.v_.push_back({a.v_[i].first, e});
                ++i, ++j;
            }
        }
        while (i < a.v_.size()) r.v_.push_back(a.v_[i++]);
        return r;
    }

    static Monomial gcd(const Monomial& a, const Monomial& b) {
        Monomial r;
        size_t i = 0, j = 0;
        while (i < a.v_.size() && j < b.v_.size()) {
            if (a.v_[i].first < b.v_[j].first)
                ++i;
            else if (b.v_[j].first < a.v_[i].first)
                ++j;
            else {
                r.v_.push_back({a.v_[i].first, std::min(a.v_[i].second, b.v_[j].second)});
                ++i, ++j;
            }
        }
        return r;
    }

    /// Graded lex, smaller symbol ids more significant.
    static int compare(const Monomial& a, const Monomial& b) {
        int da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db ? -1 : 1;
        size_t i = 0, j = 0;
        while (i < a.v_.size() && j < b.v_.size()) {
            if (a.v_[i].first != b.v_[j].first)
                // the monomial owning the smaller id has positive exponent there
                return a.v_[i].first < b.v_[j].first ? 1 : -1;
            if (a.v_[i].second != b.v_[j].second) return a.v_[i].second < b.v_[j].second ? -1 : 1;
            ++i, ++j;
        }
        if (i < a.v_.size()) return 1;
        if (j < b.v_.size()) return -1;
        return 0;
    }

    bool operator==(const Monomial& o) const { return v_ == o.v_; }
    bool operator!=(const Monomial& o) const { return v_ != o.v_; }
    bool operator<(const Monomial& o) const { return compare(*this, o) < 0; }

private:
    std::vector<Pair> v_;
};

struct MonomialGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::compare(a, b) > 0;
    }
};

struct ZeroDivisionError : std::runtime_error {
    explicit ZeroDivisionError(const std::string& w) : std::runtime_error(w) {}
};

/// Sparse multivariate polynomial over Q. Canonical by construction: no zero
/// coefficients are stored and terms sit in descending graded-lex order, so
/// equal polynomials compare equal as containers.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialGreater>;

    Polynomial() = default;
    Polynomial(const Rational& c) {  // NOLINT(google-explicit-constructor)
        if (c != 0) terms_[Monomial()] = c;
    }
    Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    explicit Polynomial(Symbol s) { terms_[Monomial::var(s)] = 1; }

    static Polynomial term(const Monomial& m, const Rational& c) {
        Polynomial p;
        if (c != 0) p.terms_[m] = c;
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }
    bool is_one() const { return is_constant() && constant_value() == 1; }

    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_constant()) throw std::logic_error("constant_value on non-constant polynomial");
        return terms_.begin()->second;
    }

    size_t term_count() const { return terms_.size(); }

    /// Leading term under graded lex.
    const Monomial& leading_monomial() const {
        if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
        return terms_.begin()->first;
    }
    const Rational& leading_coefficient() const {
        if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
        return terms_.begin()->second;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        for (auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        for (auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& [m, c] : r.terms_) const_cast<Rational&>(c) = -c;
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r;
        if (a.is_zero() || b.is_zero()) return r;
        // multiply by the shorter operand on the outside
        const Polynomial& s = a.term_count() <= b.term_count() ? a : b;
        const Polynomial& l = a.term_count() <= b.term_count() ? b : a;
        for (auto& [ms, cs] : s.terms_) {
            for (auto& [ml, cl] : l.terms_) {
                int sign;
                Monomial m = Monomial::mul(ms, ml, sign);
                r.add_term(m, sign > 0 ? Rational(cs * cl) : Rational(-(cs * cl)));
            }
        }
        return r;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, v] : terms_) const_cast<Rational&>(v) *= c;
        return *this;
    }
    friend Polynomial operator*(Polynomial p, const Rational& c) { return p *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }
    friend Polynomial operator*(Polynomial p, long c) { return p *= Rational(c); }
    friend Polynomial operator*(long c, Polynomial p) { return p *= Rational(c); }

    Polynomial pow(long e) const {
        if (e < 0) throw std::invalid_argument("negative polynomial power");
        Polynomial acc(Rational(1));
        Polynomial b = *this;
        while (e) {
            if (e & 1) acc = acc * b;
            if (e >>= 1) b = b * b;
        }
        return acc;
    }

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Total ordering for use as a container key (graded-lex termwise).
    static int compare(const Polynomial& a, const Polynomial& b) {
        auto i = a.terms_.begin();
        auto j = b.terms_.begin();
        for (; i != a.terms_.end() && j != b.terms_.end(); ++i, ++j) {
            int c = Monomial::compare(i->first, j->first);
            if (c != 0) return c;
            if (i->second != j->second) return i->second < j->second ? -1 : 1;
        }
        if (i != a.terms_.end()) return 1;
        if (j != b.terms_.end()) return -1;
        return 0;
    }
    bool operator<(const Polynomial& o) const { return compare(*this, o) < 0; }

    std::set<int> variables() const {
        std::set<int> vs;
        for (auto& [m, c] : terms_)
            for (auto& p : m.pairs()) vs.insert(p.first);
        return vs;
    }
    bool contains(Symbol s) const { return contains_id(s.id()); }
    bool contains_id(int id) const {
        for (auto& [m, c] : terms_)
            if (m.contains(id)) return true;
        return false;
    }

    int degree(Symbol s) const { return degree_id(s.id()); }
    int degree_id(int id) const {
        int d = -1;  // -1 for the zero polynomial, matching deg 0 = nonzero constant
        for (auto& [m, c] : terms_) d = std::max(d, m.exponent(id));
        return terms_.empty() ? -1 : d;
    }
    int trailing_degree_id(int id) const {
        if (terms_.empty()) return -1;
        int d = INT32_MAX;
        for (auto& [m, c] : terms_) d = std::min(d, m.exponent(id));
        return d;
    }
    int total_degree() const {
        int d = -1;
        for (auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return d;
    }

    /// Coefficient of main^e as a polynomial in the remaining symbols.
    Polynomial coefficient_of(Symbol main, int e) const {
        Polynomial r;
        int id = main.id();
        for (auto& [m, c] : terms_) {
            if (m.exponent(id) != e) continue;
            std::vector<Monomial::Pair> rest;
            for (auto& p : m.pairs())
                if (p.first != id) rest.push_back(p);
            r.add_term(Monomial(std::move(rest)), c);
        }
        return r;
    }

    /// Dense univariate view in `main`: index = exponent, entries are
    /// polynomials in the other symbols.
    std::vector<Polynomial> univariate(Symbol main) const {
        int d = std::max(0, degree_id(main.id()));
        std::vector<Polynomial> cs(static_cast<size_t>(d) + 1);
        int id = main.id();
        for (auto& [m, c] : terms_) {
            int e = m.exponent(id);
            std::vector<Monomial::Pair> rest;
            for (auto& p : m.pairs())
                if (p.first != id) rest.push_back(p);
            cs[static_cast<size_t>(e)].add_term(Monomial(std::move(rest)), c);
        }
        return cs;
    }

    static Polynomial from_univariate(Symbol main, const std::vector<Polynomial>& cs) {
        Polynomial r;
        Polynomial x(main);
        for (size_t e = 0; e < cs.size(); ++e)
            r += cs[e] * x.pow(static_cast<long>(e));
        return r;
    }

    /// Substitute one symbol by a polynomial.
    Polynomial subst(Symbol s, const Polynomial& value) const {
        if (!contains(s)) return *this;
        auto cs = univariate(s);
        // Horner
        Polynomial r;
        for (size_t e = cs.size(); e-- > 0;) r = r * value + cs[e];
        return r;
    }

    /// s -> s + offset, the hot path for shift operators.
    Polynomial shift(Symbol s, const Rational& offset) const {
        if (offset == 0 || !contains(s)) return *this;
        return subst(s, Polynomial(s) + Polynomial(offset));
    }

    Polynomial derivative(Symbol s) const {
        Polynomial r;
        int id = s.id();
        for (auto& [m, c] : terms_) {
            int e = m.exponent(id);
            if (e == 0) continue;
            std::vector<Monomial::Pair> rest;
            for (auto& p : m.pairs()) {
                if (p.first == id) {
                    if (e > 1) rest.push_back({id, e - 1});
                } else {
                    rest.push_back(p);
                }
            }
            r.add_term(Monomial(std::move(rest)), c * e);
        }
        return r;
    }

    Rational evaluate(const std::map<int, Rational>& values) const {
        Rational acc(0);
        for (auto& [m, c] : terms_) {
            Rational t = c;
            for (auto& p : m.pairs()) {
                auto it = values.find(p.first);
                if (it == values.end())
                    throw std::invalid_argument("unbound symbol in evaluate: " +
                                                Symbol::name_of(p.first));
                t *= pow_rational(it->second, p.second);
            }
            acc += t;
        }
        return acc;
    }

    GaussianRational evaluate_gaussian(const std::map<int, GaussianRational>& values) const {
        GaussianRational acc;
        for (auto& [m, c] : terms_) {
            GaussianRational t{c, Rational(0)};
            for (auto& p : m.pairs()) {
                auto it = values.find(p.first);
                if (it == values.end())
                    throw std::invalid_argument("unbound symbol in evaluate: " +
                                                Symbol::name_of(p.first));
                t = t * it->second.pow(p.second);
            }
            acc = acc + t;
        }
        return acc;
    }

    /// Positive rational c with (1/c) * this integer-coefficient and content 1.
    Rational content() const {
        if (terms_.empty()) return Rational(1);
        Integer num_gcd(0), den_lcm(1);
        for (auto& [m, c] : terms_) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        }
        Rational r(num_gcd, den_lcm);
        r.canonicalize();
        return r;
    }

    /// Divides out content and makes the leading coefficient positive.
    Polynomial primitive() const {
        if (terms_.empty()) return *this;
        Rational c = content();
        if (leading_coefficient() < 0) c = -c;
        Polynomial r = *this;
        r *= Rational(1) / c;
        return r;
    }

    /// Negates coefficients of terms odd in any imaginary symbol (complex
    /// conjugation when i is the only imaginary symbol in scope).
    Polynomial conjugate_imaginary() const {
        Polynomial r;
        for (auto& [m, c] : terms_) {
            int parity = 0;
            for (auto& p : m.pairs())
                if (Symbol::is_imaginary_id(p.first)) parity ^= (p.second & 1);
            r.add_term(m, parity ? -c : c);
        }
        return r;
    }

    bool has_imaginary() const {
        if (!Symbol::any_imaginary_registered()) return false;
        for (auto& [m, c] : terms_)
            for (auto& p : m.pairs())
                if (Symbol::is_imaginary_id(p.first)) return true;
        return false;
    }

    /// Exact division; nullopt when the divisor does not divide exactly.
    static std::optional<Polynomial> try_divide(const Polynomial& num, const Polynomial& den) {
        if (den.is_zero()) throw ZeroDivisionError("polynomial division by zero");
        if (num.is_zero()) return Polynomial();
        if (den.is_constant()) {
            Polynomial q = num;
            q *= Rational(1) / den.constant_value();
            return q;
        }
        if (den.has_imaginary()) {
            Polynomial cden = den.conjugate_imaginary();
            return try_divide(num * cden, den * cden);
        }
        Polynomial r = num, q;
        const Monomial& dm = den.leading_monomial();
        const Rational& dc = den.leading_coefficient();
        while (!r.is_zero()) {
            auto mq = Monomial::try_div(r.leading_monomial(), dm);
            if (!mq) return std::nullopt;
            Rational cq = r.leading_coefficient() / dc;
            q.add_term(*mq, cq);
            r -= Polynomial::term(*mq, cq) * den;
        }
        return q;
    }

    static Polynomial divide_exact(const Polynomial& num, const Polynomial& den) {
        auto q = try_divide(num, den);
        if (!q) throw std::logic_error("inexact polynomial division");
        return *q;
    }

    std::string debug_str() const {
        std::ostringstream os;
        bool first = true;
        for (auto& [m, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << c;
            for (auto& p : m.pairs()) {
                os << "*" << Symbol::name_of(p.first);
                if (p.second != 1) os << "^" << p.second;
            }
        }
        if (first) os << "0";
        return os.str();
    }

private:
    TermMap terms_;
};

}  // namespace hyperscope

#endif  // HYPERSCOPE_POLY_HPP
