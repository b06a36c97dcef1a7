// Copyright 2026 hyperscope contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef HYPERSCOPE_NUMBERS_HPP
#define HYPERSCOPE_NUMBERS_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace hyperscope {

using Rational = mpq_class;
using Integer = mpz_class;

struct PoleError : std::runtime_error {
    explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::optional<long> as_long(const Rational& q) {
    if (!is_integer(q) || !q.get_num().fits_slong_p()) return std::nullopt;
    return q.get_num().get_si();
}

inline Rational pow_rational(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e < 0) throw PoleError("0 raised to a negative power");
        return Rational(0);
    }
    Rational r;
    unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(r.get_num().get_mpz_t(), base.get_num().get_mpz_t(), ae);
    mpz_pow_ui(r.get_den().get_mpz_t(), base.get_den().get_mpz_t(), ae);
    r.canonicalize();
    if (e < 0) return Rational(1) / r;
    return r;
}

/// Element of Q(i); only used by the numeric evaluation paths, where the
/// Wilson-type conjugate Pochhammer pairs make final values real again.
struct GaussianRational {
    Rational re, im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(const Rational& r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_real() const { return im == 0; }
    bool is_zero() const { return re == 0 && im == 0; }

    GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussianRational operator/(const GaussianRational& o) const {
        Rational n = o.re * o.re + o.im * o.im;
        if (n == 0) throw PoleError("division by zero in Q(i)");
        return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
    }
    GaussianRational operator-() const { return {-re, -im}; }
    bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }

    GaussianRational pow(long e) const {
        if (e < 0) return GaussianRational(Rational(1)) / pow(-e);
        GaussianRational acc(Rational(1));
        GaussianRational b = *this;
        unsigned long n = static_cast<unsigned long>(e);
        while (n) {
            if (n & 1) acc = acc * b;
            b = b * b;
            n >>= 1;
        }
        return acc;
    }
};

}  // namespace hyperscope

#endif  // HYPERSCOPE_NUMBERS_HPP
