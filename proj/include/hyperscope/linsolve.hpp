// Copyright 2026 hyperscope contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef HYPERSCOPE_LINSOLVE_HPP
#define HYPERSCOPE_LINSOLVE_HPP

#include <string>
#include <vector>

#include "ratfun.hpp"

namespace hyperscope {

/// Parametric nullspace of a homogeneous system: each unknown expressed as a
/// linear combination of free variables v_1..v_r with coefficients rational in
/// the parameters. Free variables are attached to the earliest independent
/// unknowns (pivots are chosen scanning columns from the last backwards),
/// which reproduces the a_1 = v_1, a_2 = v_2 presentation.
class SolutionSpace {
public:
    SolutionSpace() = default;
    SolutionSpace(std::vector<std::string> unknowns,
                  std::vector<std::vector<RationalFunction>> matrix, size_t dimension,
                  std::vector<long> anchors, std::vector<std::vector<RationalFunction>> exprs)
        : unknowns_(std::move(unknowns)),
          matrix_(std::move(matrix)),
          dim_(dimension),
          anchors_(std::move(anchors)),
          exprs_(std::move(exprs)) {}

    size_t dimension() const { return dim_; }
    size_t unknown_count() const { return unknowns_.size(); }
    const std::vector<std::string>& unknowns() const { return unknowns_; }
    bool trivial() const { return dim_ == 0; }

    /// Unknown anchoring free variable j (v_j appears as "unknown = v_j"), or
    /// -1 when the free variable is not anchored at an unknown.
    long anchor(size_t j) const { return anchors_.at(j); }

    bool is_free(size_t unknown) const {
        for (long a : anchors_)
            if (a == static_cast<long>(unknown)) return true;
        return false;
    }

    /// Coefficients of unknown `i` over (v_1, ..., v_r).
    const std::vector<RationalFunction>& expr(size_t i) const { return exprs_.at(i); }

    /// Concrete unknown vector from an assignment of the free variables.
    std::vector<RationalFunction> instantiate(const std::vector<RationalFunction>& v) const {
        if (v.size() != dim_) throw std::invalid_argument("free variable count mismatch");
        std::vector<RationalFunction> out(unknowns_.size());
        for (size_t i = 0; i < unknowns_.size(); ++i)
            for (size_t j = 0; j < v.size(); ++j)
                if (!exprs_[i][j].is_zero() && !v[j].is_zero()) out[i] += exprs_[i][j] * v[j];
        return out;
    }

    /// Unit vector assignment for free variable j (0-based).
    std::vector<RationalFunction> basis_vector(size_t j) const {
        std::vector<RationalFunction> v(dim_);
        v.at(j) = RationalFunction(Rational(1));
        return instantiate(v);
    }

    /// Re-substitution check against the originating system.
    bool satisfies_system(const std::vector<RationalFunction>& vec) const {
        for (auto& row : matrix_) {
            RationalFunction acc;
            for (size_t c = 0; c < vec.size(); ++c) acc += row[c] * vec[c];
            if (!acc.is_zero()) return false;
        }
        return true;
    }

    const std::vector<std::vector<RationalFunction>>& system() const { return matrix_; }

private:
    std::vector<std::string> unknowns_;
    std::vector<std::vector<RationalFunction>> matrix_;
    size_t dim_ = 0;
    std::vector<long> anchors_;                         // per free variable
    std::vector<std::vector<RationalFunction>> exprs_;  // unknown -> coeffs over v
};

namespace detail {

inline void remove_row_content(std::vector<Polynomial>& row) {
    Polynomial g;
    for (auto& e : row) {
        if (e.is_zero()) continue;
        g = g.is_zero() ? e.primitive() * e.content() : poly_gcd(g, e);
        if (g.is_one()) break;
    }
    if (g.is_zero() || g.is_one()) return;
    for (auto& e : row)
        if (!e.is_zero()) e = Polynomial::divide_exact(e, g);
}

}  // namespace detail

/// Nullspace of a matrix with rational-function entries in the parameters.
/// Fraction-free (Bareiss-style) elimination on denominator-cleared rows with
/// row content stripped after each step.
inline SolutionSpace nullspace(const std::vector<std::vector<RationalFunction>>& input,
                               const std::vector<std::string>& unknowns) {
    const size_t cols = unknowns.size();
    std::vector<std::vector<Polynomial>> M;
    for (auto& row : input) {
        if (row.size() != cols) throw std::invalid_argument("matrix width mismatch");
        Polynomial lcm(Rational(1));
        bool all_zero = true;
        for (auto& e : row) {
            if (e.is_zero()) continue;
            all_zero = false;
            lcm = poly_lcm(lcm, e.den());
        }
        if (all_zero) continue;
        std::vector<Polynomial> cleared(cols);
        for (size_t c = 0; c < cols; ++c) {
            if (row[c].is_zero()) continue;
            cleared[c] = row[c].num() * Polynomial::divide_exact(lcm, row[c].den());
        }
        detail::remove_row_content(cleared);
        M.push_back(std::move(cleared));
    }

    std::vector<size_t> pivot_cols;  // in processing order (descending column index)
    size_t npiv = 0;
    for (size_t cc = cols; cc-- > 0;) {
        // pick the sparsest available pivot row
        size_t best = SIZE_MAX, best_terms = SIZE_MAX;
        for (size_t r = npiv; r < M.size(); ++r) {
            if (M[r][cc].is_zero()) continue;
            size_t t = 0;
            for (auto& e : M[r]) t += e.term_count();
            if (t < best_terms) {
                best = r;
                best_terms = t;
            }
        }
        if (best == SIZE_MAX) continue;
        std::swap(M[npiv], M[best]);
        for (size_t r = npiv + 1; r < M.size(); ++r) {
            if (M[r][cc].is_zero()) continue;
            Polynomial f = M[r][cc];
            for (size_t c = 0; c < cols; ++c) M[r][c] = M[npiv][cc] * M[r][c] - f * M[npiv][c];
            detail::remove_row_content(M[r]);
        }
        pivot_cols.push_back(cc);
        ++npiv;
    }

    std::vector<size_t> free_cols;
    for (size_t c = 0; c < cols; ++c) {
        bool pivot = false;
        for (size_t pc : pivot_cols)
            if (pc == c) pivot = true;
        if (!pivot) free_cols.push_back(c);
    }

    // back-substitute one basis vector per free column
    std::vector<std::vector<RationalFunction>> exprs(
        cols, std::vector<RationalFunction>(free_cols.size()));
    for (size_t j = 0; j < free_cols.size(); ++j) {
        std::vector<RationalFunction> x(cols);
        x[free_cols[j]] = RationalFunction(Rational(1));
        for (size_t t = npiv; t-- > 0;) {
            size_t pc = pivot_cols[t];
            RationalFunction acc;
            for (size_t c = 0; c < cols; ++c) {
                if (c == pc || M[t][c].is_zero() || x[c].is_zero()) continue;
                acc += RationalFunction(M[t][c]) * x[c];
            }
            x[pc] = -(acc / RationalFunction(M[t][pc]));
        }
        for (size_t c = 0; c < cols; ++c) exprs[c][j] = x[c];
    }

    std::vector<long> anchors(free_cols.begin(), free_cols.end());
    return SolutionSpace(unknowns, input, free_cols.size(), std::move(anchors),
                         std::move(exprs));
}

}  // namespace hyperscope

#endif  // HYPERSCOPE_LINSOLVE_HPP
