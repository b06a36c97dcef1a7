// Copyright 2026 hyperscope contributors
// SPDX-License-Identifier: Apache-2.0
//
// Structured model of (q-)hypergeometric terms: rational prefactor, geometric
// base^k, (q-)Pochhammer factors, parameter-indexed Pochhammers and symbolic
// powers. Every operation keeps the defining property intact: the shift
// quotient t(k+1)/t(k) is rational in k (or in X = q^k) and the parameters.

#ifndef HYPERSCOPE_TERM_HPP
#define HYPERSCOPE_TERM_HPP

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "ratfun.hpp"

namespace hyperscope {

enum class TermKind { ordinary, q };

struct NotSimilarError : std::runtime_error {
    explicit NotSimilarError(const std::string& w) : std::runtime_error(w) {}
};
struct VarInPochhammerError : std::runtime_error {
    explicit VarInPochhammerError(const std::string& w) : std::runtime_error(w) {}
};

inline Symbol k_symbol() { return Symbol::intern("k"); }
inline Symbol q_symbol() { return Symbol::intern("q"); }
/// Main variable of the q kernel; stands for q^k.
inline Symbol qk_symbol() { return Symbol::intern("X"); }

inline Symbol main_symbol(TermKind kind) {
    return kind == TermKind::ordinary ? k_symbol() : qk_symbol();
}

/// (arg)_k with multiplicity, or (arg; q)_k for the q kind.
struct PochFactor {
    RationalFunction arg;
    int mult = 1;
    bool operator==(const PochFactor& o) const { return arg == o.arg && mult == o.mult; }
};

/// base^exponent with the exponent a polynomial in the parameters, e.g.
/// (2x)^n or q^(n(n-1)/2).
struct SymPowFactor {
    RationalFunction base;
    Polynomial exponent;
    bool operator==(const SymPowFactor& o) const {
        return base == o.base && exponent == o.exponent;
    }
};

/// (arg)_{index} resp. (arg; q)_{index} with a parameter symbol as index,
/// e.g. the (a+1)_n prefactors of monic families. Canonical form keeps the
/// index offset at zero.
struct ParamPochFactor {
    RationalFunction arg;
    Symbol index;
    int mult = 1;
    bool operator==(const ParamPochFactor& o) const {
        return arg == o.arg && index == o.index && mult == o.mult;
    }
};

class HyperTerm {
public:
    explicit HyperTerm(TermKind kind = TermKind::ordinary)
        : kind_(kind), prefactor_(Rational(1)), base_(Rational(1)) {}

    TermKind kind() const { return kind_; }
    Symbol mainvar() const { return main_symbol(kind_); }
    const RationalFunction& prefactor() const { return prefactor_; }
    const RationalFunction& base() const { return base_; }
    const std::vector<PochFactor>& uppers() const { return uppers_; }
    long qbinom() const { return qbinom_; }
    const std::vector<SymPowFactor>& sympows() const { return sympows_; }
    const std::vector<ParamPochFactor>& parampochs() const { return parampochs_; }
    const std::map<int, int>& qlog() const { return qlog_; }

    bool operator==(const HyperTerm& o) const {
        return kind_ == o.kind_ && prefactor_ == o.prefactor_ && base_ == o.base_ &&
               uppers_ == o.uppers_ && qbinom_ == o.qbinom_ && sympows_ == o.sympows_ &&
               parampochs_ == o.parampochs_;
    }

    // ---- multiplicative builders -------------------------------------------

    HyperTerm times_prefactor(const RationalFunction& f) const {
        if (f.is_zero()) throw std::invalid_argument("zero prefactor would zero the term");
        HyperTerm t = *this;
        t.prefactor_ *= f;
        return t;
    }

    /// Multiplies by z^k (z^k with z rational in the parameters).
    HyperTerm times_power(const RationalFunction& z) const {
        if (z.is_zero()) throw std::invalid_argument("geometric base must be nonzero");
        HyperTerm t = *this;
        t.base_ *= z;
        return t;
    }

    HyperTerm times_poch(const RationalFunction& arg, int mult = 1) const {
        HyperTerm t = *this;
        t.push_poch(arg, mult);
        t.merge_uppers();
        return t;
    }

    HyperTerm times_qbinom(long e) const {
        if (kind_ != TermKind::q) throw std::invalid_argument("q^C(k,2) factor needs q kind");
        HyperTerm t = *this;
        t.qbinom_ += e;
        return t;
    }

    HyperTerm times_sympow(const RationalFunction& base, const Polynomial& exponent) const {
        if (base.is_zero()) throw std::invalid_argument("symbolic power of zero");
        HyperTerm t = *this;
        t.sympows_.push_back({base, exponent});
        t.merge_sympows();
        return t;
    }

    HyperTerm times_parampoch(const RationalFunction& arg, Symbol index, long offset = 0,
                              int mult = 1) const {
        HyperTerm t = *this;
        t.push_parampoch(arg, index, offset, mult);
        t.merge_parampochs();
        return t;
    }

    /// Associates an exponent symbol n with the parameter N = q^n (q kind).
    HyperTerm with_qlog(Symbol exponent_sym, Symbol q_power_param) const {
        HyperTerm t = *this;
        t.qlog_[exponent_sym.id()] = q_power_param.id();
        return t;
    }

    // ---- core operations ----------------------------------------------------

    /// t(k+1)/t(k), rational in k (ordinary) or X = q^k and q (q kind).
    RationalFunction ratio() const {
        if (kind_ == TermKind::ordinary) {
            Symbol k = k_symbol();
            RationalFunction r = prefactor_.shift(k, Rational(1)) / prefactor_;
            r *= base_;
            Polynomial kp(k);
            for (auto& u : uppers_) r *= (u.arg + RationalFunction(kp)).pow(u.mult);
            return r;
        }
        Symbol X = qk_symbol();
        RationalFunction r =
            prefactor_.subst(X, RationalFunction(Polynomial(q_symbol()) * Polynomial(X))) /
            prefactor_;
        r *= base_;
        RationalFunction Xr{Polynomial(X)};
        for (auto& u : uppers_) r *= (RationalFunction(Rational(1)) - u.arg * Xr).pow(u.mult);
        if (qbinom_ != 0) r *= Xr.pow(qbinom_);
        return r;
    }

    /// t(k)/other(k) as a rational function; throws NotSimilarError when a
    /// genuine non-rational part remains.
    RationalFunction quotient(const HyperTerm& other) const;

    /// d/dvar, ordinary kind; Pochhammer arguments must be free of var.
    HyperTerm differentiate(Symbol var) const {
        if (kind_ != TermKind::ordinary)
            throw std::invalid_argument("differentiate applies to the ordinary kind");
        for (auto& u : uppers_)
            if (u.arg.contains(var))
                throw VarInPochhammerError("variable occurs in a Pochhammer argument");
        for (auto& pp : parampochs_)
            if (pp.arg.contains(var))
                throw VarInPochhammerError("variable occurs in a Pochhammer argument");
        RationalFunction logderiv;
        if (base_.contains(var))
            logderiv += RationalFunction(Polynomial(k_symbol())) * base_.derivative(var) / base_;
        for (auto& sp : sympows_) {
            if (sp.exponent.contains(var))
                throw std::invalid_argument("variable occurs in a symbolic-power exponent");
            if (sp.base.contains(var))
                logderiv += RationalFunction(sp.exponent) * sp.base.derivative(var) / sp.base;
        }
        RationalFunction np = prefactor_.derivative(var) + prefactor_ * logderiv;
        if (np.is_zero()) throw std::invalid_argument("derivative is the zero term");
        HyperTerm t = *this;
        t.prefactor_ = np;
        return t;
    }

    /// Substitute parameters (never k, X or q). Bindings touching a symbolic
    /// exponent or a Pochhammer index must be integer shifts s -> s + c or
    /// integer constants.
    HyperTerm substitute_params(const std::map<int, RationalFunction>& bindings) const;

    /// Member shift n -> n + delta; for the q kind this also advances the
    /// associated parameter N = q^n to q^delta N.
    HyperTerm shift_parameter(Symbol n, long delta) const {
        std::map<int, RationalFunction> b;
        b[n.id()] = RationalFunction(Polynomial(n) + Polynomial(Rational(delta)));
        return substitute_params(b);
    }

    /// Exact value at k = k0; parameter values must avoid poles. Imaginary
    /// symbols evaluate to i; the result must come out real.
    Rational eval(long k0, const std::map<int, Rational>& values) const;

    // internal helpers shared with the parser
    HyperTerm normalized_copy() const {
        HyperTerm t = *this;
        t.merge_uppers();
        t.merge_sympows();
        t.merge_parampochs();
        return t;
    }

private:
    void push_poch(const RationalFunction& arg, int mult) {
        if (mult == 0) return;
        if (kind_ == TermKind::ordinary) {
            auto v = arg.as_integer();
            if (v && *v <= 0)
                throw std::invalid_argument("Pochhammer argument is a nonpositive integer");
        } else {
            if (arg.is_one())
                throw std::invalid_argument("q-Pochhammer argument 1 makes the term vanish");
        }
        uppers_.push_back({arg, mult});
    }

    void push_parampoch(const RationalFunction& arg, Symbol index, long offset, int mult) {
        if (mult == 0) return;
        // canonicalize the index offset to zero
        RationalFunction residue = index_shift_residue(arg, index, offset);
        prefactor_ *= residue.pow(mult);
        parampochs_.push_back({arg, index, mult});
    }

    /// (arg)_{index+offset} = (arg)_{index} * residue (q analogue likewise).
    RationalFunction index_shift_residue(const RationalFunction& arg, Symbol index,
                                         long offset) const {
        RationalFunction res(Rational(1));
        RationalFunction idx{Polynomial(index)};
        if (kind_ == TermKind::ordinary) {
            for (long j = 0; j < offset; ++j) res *= arg + idx + RationalFunction(Rational(j));
            for (long j = 1; j <= -offset; ++j)
                res /= arg + idx - RationalFunction(Rational(j));
            return res;
        }
        RationalFunction N = qlog_param(index);
        RationalFunction q{Polynomial(q_symbol())};
        for (long j = 0; j < offset; ++j)
            res *= RationalFunction(Rational(1)) - arg * N * q.pow(j);
        for (long j = 1; j <= -offset; ++j)
            res /= RationalFunction(Rational(1)) - arg * N * q.pow(-j);
        return res;
    }

    RationalFunction qlog_param(Symbol index) const {
        auto it = qlog_.find(index.id());
        if (it == qlog_.end())
            throw std::invalid_argument("no q^n parameter registered for index symbol " +
                                        index.name());
        return RationalFunction(Polynomial(Symbol::intern(Symbol::name_of(it->second))));
    }

    void merge_uppers() {
        std::map<RationalFunction, int> acc;
        for (auto& u : uppers_) acc[u.arg] += u.mult;
        uppers_.clear();
        for (auto& [arg, mult] : acc)
            if (mult != 0) uppers_.push_back({arg, mult});
    }

    void merge_sympows() {
        std::map<RationalFunction, Polynomial> acc;
        for (auto& sp : sympows_) {
            auto it = acc.find(sp.base);
            if (it == acc.end())
                acc.emplace(sp.base, sp.exponent);
            else
                it->second += sp.exponent;
        }
        sympows_.clear();
        for (auto& [base, expo] : acc) {
            if (expo.is_zero() || base.is_one()) continue;
            if (expo.is_constant()) {
                auto c = as_long(expo.constant_value());
                if (!c) throw std::invalid_argument("non-integer constant exponent");
                prefactor_ *= base.pow(*c);
                continue;
            }
            sympows_.push_back({base, expo});
        }
    }

    void merge_parampochs() {
        std::map<std::pair<int, RationalFunction>, int> acc;
        for (auto& pp : parampochs_) acc[{pp.index.id(), pp.arg}] += pp.mult;
        parampochs_.clear();
        for (auto& [key, mult] : acc)
            if (mult != 0)
                parampochs_.push_back(
                    {key.second, Symbol::intern(Symbol::name_of(key.first)), mult});
    }

    TermKind kind_;
    RationalFunction prefactor_;  // rational in k (resp. X) and parameters
    RationalFunction base_;       // z of z^k, parameters only
    std::vector<PochFactor> uppers_;
    long qbinom_ = 0;  // q^(qbinom * C(k,2))
    std::vector<SymPowFactor> sympows_;
    std::vector<ParamPochFactor> parampochs_;
    std::map<int, int> qlog_;  // exponent symbol -> parameter symbol with q^sym = param
};

// ---- quotient ----------------------------------------------------------------

namespace detail {

/// Entries (value, mult) grouped into classes whose values differ by explicit
/// integers (ordinary) or explicit powers of q (q kind).
struct ArgClass {
    RationalFunction rep;                       // minimal-offset representative
    std::vector<std::pair<long, int>> entries;  // (offset from rep, mult)
};

inline std::optional<long> arg_offset(TermKind kind, const RationalFunction& a,
                                      const RationalFunction& b) {
    if (kind == TermKind::ordinary) return (a - b).as_integer();
    if (b.is_zero()) return std::nullopt;
    return (a / b).as_power_of(q_symbol());
}

inline std::vector<ArgClass> group_args(TermKind kind,
                                        const std::vector<std::pair<RationalFunction, int>>& in) {
    std::vector<ArgClass> classes;
    for (auto& [arg, mult] : in) {
        bool placed = false;
        for (auto& cls : classes) {
            auto off = arg_offset(kind, arg, cls.rep);
            if (!off) continue;
            if (*off < 0) {
                for (auto& e : cls.entries) e.first -= *off;
                cls.rep = arg;
                cls.entries.push_back({0, mult});
            } else {
                cls.entries.push_back({*off, mult});
            }
            placed = true;
            break;
        }
        if (!placed) classes.push_back({arg, {{0, mult}}});
    }
    return classes;
}

}  // namespace detail

inline RationalFunction HyperTerm::quotient(const HyperTerm& other) const {
    if (kind_ != other.kind_) throw NotSimilarError("terms of different kinds");
    RationalFunction result = prefactor_ / other.prefactor_;
    RationalFunction q{Polynomial(q_symbol())};

    // geometric bases
    if (base_ != other.base_) {
        RationalFunction w = base_ / other.base_;
        if (kind_ == TermKind::q) {
            auto j = w.as_power_of(q_symbol());
            if (!j) throw NotSimilarError("geometric bases differ by a non-q-power");
            result *= RationalFunction(Polynomial(qk_symbol())).pow(*j);
        } else {
            throw NotSimilarError("geometric bases differ");
        }
    }
    if (qbinom_ != other.qbinom_) throw NotSimilarError("q^C(k,2) exponents differ");

    // Pochhammer factors in k
    {
        std::vector<std::pair<RationalFunction, int>> all;
        for (auto& u : uppers_) all.push_back({u.arg, u.mult});
        for (auto& u : other.uppers_) all.push_back({u.arg, -u.mult});
        Polynomial kp(mainvar());
        for (auto& cls : detail::group_args(kind_, all)) {
            int net = 0;
            for (auto& [off, mult] : cls.entries) net += mult;
            if (net != 0) throw NotSimilarError("unmatched Pochhammer factor");
            for (auto& [off, mult] : cls.entries) {
                if (mult == 0 || off == 0) continue;
                RationalFunction res(Rational(1));
                for (long j = 0; j < off; ++j) {
                    if (kind_ == TermKind::ordinary) {
                        RationalFunction lo = cls.rep + RationalFunction(Rational(j));
                        res *= (lo + RationalFunction(kp)) / lo;
                    } else {
                        RationalFunction qa = cls.rep * q.pow(j);
                        RationalFunction one(Rational(1));
                        res *= (one - qa * RationalFunction(kp)) / (one - qa);
                    }
                }
                result *= res.pow(mult);
            }
        }
    }

    // symbolic powers
    {
        std::map<RationalFunction, Polynomial> acc;
        for (auto& sp : sympows_) {
            auto it = acc.find(sp.base);
            if (it == acc.end())
                acc.emplace(sp.base, sp.exponent);
            else
                it->second += sp.exponent;
        }
        for (auto& sp : other.sympows_) {
            auto it = acc.find(sp.base);
            if (it == acc.end())
                acc.emplace(sp.base, -sp.exponent);
            else
                it->second -= sp.exponent;
        }
        for (auto& [base, diff] : acc) {
            if (diff.is_zero()) continue;
            if (diff.is_constant()) {
                auto c = as_long(diff.constant_value());
                if (!c) throw NotSimilarError("non-integer symbolic power difference");
                result *= base.pow(*c);
                continue;
            }
            // q^(linear in qlog'd symbols) is rational via N = q^n
            if (kind_ == TermKind::q && base == q) {
                RationalFunction fac(Rational(1));
                Polynomial rest = diff;
                const std::map<int, int>& ql = !qlog_.empty() ? qlog_ : other.qlog_;
                for (auto& [nsym, Nsym] : ql) {
                    Symbol n = Symbol::intern(Symbol::name_of(nsym));
                    int d = rest.degree(n);
                    if (d <= 0) continue;
                    if (d > 1) throw NotSimilarError("q-power exponent difference not linear");
                    Polynomial coeff = rest.coefficient_of(n, 1);
                    if (!coeff.is_constant()) throw NotSimilarError("mixed q-power exponent");
                    auto c = as_long(coeff.constant_value());
                    if (!c) throw NotSimilarError("non-integer q-power exponent");
                    fac *= RationalFunction(Polynomial(Symbol::intern(Symbol::name_of(Nsym))))
                               .pow(*c);
                    rest -= coeff * Polynomial(n);
                }
                if (!rest.is_constant()) throw NotSimilarError("irreducible q-power exponent");
                auto c0 = as_long(rest.constant_value());
                if (!c0) throw NotSimilarError("non-integer q-power exponent");
                result *= fac * q.pow(*c0);
                continue;
            }
            throw NotSimilarError("unmatched symbolic power " + base.num().debug_str());
        }
    }

    // parameter-indexed Pochhammers, per index symbol
    {
        std::map<int, std::vector<std::pair<RationalFunction, int>>> by_index;
        for (auto& pp : parampochs_) by_index[pp.index.id()].push_back({pp.arg, pp.mult});
        for (auto& pp : other.parampochs_) by_index[pp.index.id()].push_back({pp.arg, -pp.mult});
        for (auto& [idx, list] : by_index) {
            Symbol index = Symbol::intern(Symbol::name_of(idx));
            RationalFunction idxr{Polynomial(index)};
            RationalFunction N;
            if (kind_ == TermKind::q) {
                auto it = qlog_.find(idx);
                if (it == qlog_.end()) {
                    auto it2 = other.qlog_.find(idx);
                    if (it2 == other.qlog_.end())
                        throw NotSimilarError("unregistered q-Pochhammer index");
                    it = it2;
                }
                N = RationalFunction(Polynomial(Symbol::intern(Symbol::name_of(it->second))));
            }
            for (auto& cls : detail::group_args(kind_, list)) {
                int net = 0;
                for (auto& [off, mult] : cls.entries) net += mult;
                if (net != 0) throw NotSimilarError("unmatched parameter Pochhammer");
                for (auto& [off, mult] : cls.entries) {
                    if (mult == 0 || off == 0) continue;
                    RationalFunction res(Rational(1));
                    for (long j = 0; j < off; ++j) {
                        if (kind_ == TermKind::ordinary) {
                            RationalFunction lo = cls.rep + RationalFunction(Rational(j));
                            res *= (lo + idxr) / lo;
                        } else {
                            RationalFunction qa = cls.rep * q.pow(j);
                            RationalFunction one(Rational(1));
                            res *= (one - qa * N) / (one - qa);
                        }
                    }
                    result *= res.pow(mult);
                }
            }
        }
    }

    return result;
}

// ---- substitution --------------------------------------------------------------

inline HyperTerm HyperTerm::substitute_params(const std::map<int, RationalFunction>& in) const {
    std::map<int, RationalFunction> bindings = in;
    for (auto& [id, value] : bindings) {
        if (id == k_symbol().id() || id == qk_symbol().id())
            throw std::invalid_argument("cannot substitute the summation variable");
        if (kind_ == TermKind::q && id == q_symbol().id())
            throw std::invalid_argument("cannot substitute q");
        (void)value;
    }
    // complete qlog pairs: binding n -> n + c implies N -> q^c N and vice versa
    if (kind_ == TermKind::q) {
        for (auto& [nsym, Nsym] : qlog_) {
            Symbol n = Symbol::intern(Symbol::name_of(nsym));
            auto itn = bindings.find(nsym);
            auto itN = bindings.find(Nsym);
            if (itn != bindings.end() && itN == bindings.end()) {
                auto shift = (itn->second - RationalFunction(Polynomial(n))).as_integer();
                if (!shift) throw std::invalid_argument("q exponent symbols shift by integers only");
                bindings[Nsym] = RationalFunction(Polynomial(q_symbol())).pow(*shift) *
                                 RationalFunction(Polynomial(Symbol::intern(Symbol::name_of(Nsym))));
            } else if (itN != bindings.end() && itn == bindings.end()) {
                RationalFunction Nr{Polynomial(Symbol::intern(Symbol::name_of(Nsym)))};
                auto shift = (itN->second / Nr).as_power_of(q_symbol());
                if (!shift)
                    throw std::invalid_argument("q^n parameters shift by powers of q only");
                bindings[nsym] =
                    RationalFunction(Polynomial(n) + Polynomial(Rational(*shift)));
            }
        }
    }

    HyperTerm t(kind_);
    t.qlog_ = qlog_;
    t.qbinom_ = qbinom_;
    t.prefactor_ = prefactor_.subst_all(bindings);
    t.base_ = base_.subst_all(bindings);
    if (t.base_.is_zero()) throw ZeroDivisionError("substitution zeroes the geometric base");
    for (auto& u : uppers_) t.push_poch(u.arg.subst_all(bindings), u.mult);
    for (auto& sp : sympows_) {
        Polynomial e = sp.exponent;
        for (auto& [id, value] : bindings) {
            if (!e.contains_id(id)) continue;
            if (!value.is_polynomial())
                throw std::invalid_argument("exponent symbols take polynomial substitutions only");
            Polynomial vp = value.num();
            vp *= Rational(1) / value.den().constant_value();
            e = e.subst(Symbol::intern(Symbol::name_of(id)), vp);
        }
        t.sympows_.push_back({sp.base.subst_all(bindings), e});
    }
    for (auto& pp : parampochs_) {
        RationalFunction arg = pp.arg.subst_all(bindings);
        auto it = bindings.find(pp.index.id());
        if (it == bindings.end()) {
            t.push_parampoch(arg, pp.index, 0, pp.mult);
            continue;
        }
        auto shift = (it->second - RationalFunction(Polynomial(pp.index))).as_integer();
        if (shift) {
            t.push_parampoch(arg, pp.index, *shift, pp.mult);
            continue;
        }
        auto value = it->second.as_integer();
        if (!value)
            throw std::invalid_argument("Pochhammer index must shift by an integer or close");
        // explicit index: expand the finite product into the prefactor
        RationalFunction prod(Rational(1));
        RationalFunction q{Polynomial(q_symbol())};
        if (*value >= 0) {
            for (long j = 0; j < *value; ++j)
                prod *= kind_ == TermKind::ordinary
                            ? arg + RationalFunction(Rational(j))
                            : RationalFunction(Rational(1)) - arg * q.pow(j);
        } else {
            for (long j = 1; j <= -*value; ++j)
                prod /= kind_ == TermKind::ordinary
                            ? arg - RationalFunction(Rational(j))
                            : RationalFunction(Rational(1)) - arg * q.pow(-j);
        }
        t.prefactor_ *= prod.pow(pp.mult);
    }
    t.merge_uppers();
    t.merge_sympows();
    t.merge_parampochs();
    return t;
}

// ---- numeric evaluation ---------------------------------------------------------

inline Rational HyperTerm::eval(long k0, const std::map<int, Rational>& values) const {
    if (k0 < 0) throw std::invalid_argument("eval needs k0 >= 0");
    std::map<int, GaussianRational> vals;
    for (auto& [id, v] : values) vals[id] = GaussianRational(v);
    // imaginary symbols evaluate to i itself
    if (Symbol::any_imaginary_registered()) {
        auto add_imag = [&](const RationalFunction& f) {
            for (int id : f.num().variables())
                if (Symbol::is_imaginary_id(id)) vals[id] = GaussianRational(Rational(0), Rational(1));
            for (int id : f.den().variables())
                if (Symbol::is_imaginary_id(id)) vals[id] = GaussianRational(Rational(0), Rational(1));
        };
        add_imag(prefactor_);
        add_imag(base_);
        for (auto& u : uppers_) add_imag(u.arg);
        for (auto& pp : parampochs_) add_imag(pp.arg);
    }

    Rational qval(0);
    if (kind_ == TermKind::ordinary) {
        vals[k_symbol().id()] = GaussianRational(Rational(k0));
    }
    if (kind_ == TermKind::q) {
        auto it = values.find(q_symbol().id());
        if (it == values.end()) throw std::invalid_argument("q kind needs a value for q");
        qval = it->second;
        if (qval == 0 || qval == 1 || qval == -1)
            throw std::invalid_argument("q must avoid 0 and roots of unity");
        vals[qk_symbol().id()] = GaussianRational(pow_rational(qval, k0));
    }

    GaussianRational acc = prefactor_.evaluate_gaussian(vals);
    acc = acc * base_.evaluate_gaussian(vals).pow(k0);
    for (auto& u : uppers_) {
        GaussianRational av = u.arg.evaluate_gaussian(vals);
        GaussianRational prod{Rational(1)};
        for (long j = 0; j < k0; ++j)
            prod = prod * (kind_ == TermKind::ordinary
                               ? av + GaussianRational(Rational(j))
                               : GaussianRational(Rational(1)) - av * GaussianRational(pow_rational(qval, j)));
        if (u.mult < 0 && prod.is_zero()) throw PoleError("vanishing Pochhammer in a denominator");
        acc = acc * prod.pow(u.mult);
    }
    if (qbinom_ != 0) acc = acc * GaussianRational(pow_rational(qval, qbinom_ * (k0 * (k0 - 1) / 2)));
    for (auto& sp : sympows_) {
        std::map<int, Rational> rv = values;
        Rational e = sp.exponent.evaluate(rv);
        auto ei = as_long(e);
        if (!ei) throw std::invalid_argument("symbolic power exponent must evaluate to an integer");
        acc = acc * sp.base.evaluate_gaussian(vals).pow(*ei);
    }
    for (auto& pp : parampochs_) {
        auto it = values.find(pp.index.id());
        if (it == values.end())
            throw std::invalid_argument("unbound Pochhammer index " + pp.index.name());
        auto m = as_long(it->second);
        if (!m) throw std::invalid_argument("Pochhammer index must evaluate to an integer");
        GaussianRational av = pp.arg.evaluate_gaussian(vals);
        GaussianRational prod{Rational(1)};
        if (*m >= 0) {
            for (long j = 0; j < *m; ++j)
                prod = prod * (kind_ == TermKind::ordinary
                                   ? av + GaussianRational(Rational(j))
                                   : GaussianRational(Rational(1)) -
                                         av * GaussianRational(pow_rational(qval, j)));
            if (pp.mult < 0 && prod.is_zero())
                throw PoleError("vanishing Pochhammer in a denominator");
            acc = acc * prod.pow(pp.mult);
        } else {
            for (long j = 1; j <= -*m; ++j)
                prod = prod * (kind_ == TermKind::ordinary
                                   ? av - GaussianRational(Rational(j))
                                   : GaussianRational(Rational(1)) -
                                         av * GaussianRational(pow_rational(qval, -j)));
            if (prod.is_zero()) throw PoleError("vanishing Pochhammer in a denominator");
            acc = acc * prod.pow(-pp.mult);
        }
    }
    if (!acc.is_real()) throw std::logic_error("term value has a nonzero imaginary part");
    return acc.re;
}

// ---- similar families --------------------------------------------------------

/// f_1..f_m with the shared data of the telescoping setup: f_i/f_1 = p_i/Q
/// and f_1(k+1)/f_1(k) = u/v, everything polynomial in the main variable.
struct SimilarFamily {
    std::vector<HyperTerm> members;
    Polynomial Q;
    std::vector<Polynomial> p;
    RationalFunction r;  // shift quotient of f_1

    static SimilarFamily build(std::vector<HyperTerm> members) {
        if (members.empty()) throw std::invalid_argument("empty family");
        SimilarFamily fam;
        std::vector<RationalFunction> quotients;
        quotients.reserve(members.size());
        for (auto& m : members) quotients.push_back(m.quotient(members.front()));
        Polynomial Q(Rational(1));
        for (auto& quot : quotients) Q = poly_lcm(Q, quot.den());
        fam.Q = Q;
        for (auto& quot : quotients)
            fam.p.push_back(quot.num() * Polynomial::divide_exact(Q, quot.den()));
        fam.r = members.front().ratio();
        fam.members = std::move(members);
        return fam;
    }
};

}  // namespace hyperscope

#endif  // HYPERSCOPE_TERM_HPP
