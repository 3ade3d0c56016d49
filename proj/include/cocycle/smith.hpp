#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "cocycle/rational.hpp"

namespace cocycle {

template <typename Scalar = std::int64_t>
using IntMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar = std::int64_t>
using IntVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrixX = IntMatrix<std::int64_t>;
using IntVectorX = IntVector<std::int64_t>;

// Which unimodular transforms to accumulate alongside the diagonal.
enum SmithTransforms : unsigned {
    kSmithNone = 0,
    kSmithLeft = 1,
    kSmithLeftInverse = 2,
    kSmithRight = 4,
    kSmithRightInverse = 8,
    kSmithAll = 15,
};

// L * A * R = diag(d_1, ..., d_r, 0, ...) with d_1 | d_2 | ... | d_r, all positive.
template <typename Scalar>
struct SmithForm {
    Eigen::Index rows = 0, cols = 0;
    std::vector<Scalar> diagonal;  // the r nonzero invariant factors
    IntMatrix<Scalar> L, Linv, R, Rinv;  // present only when requested

    Eigen::Index rank() const { return static_cast<Eigen::Index>(diagonal.size()); }
    // Invariant factors greater than one: the torsion of the cokernel.
    std::vector<Scalar> torsion() const {
        std::vector<Scalar> out;
        for (Scalar d : diagonal)
            if (d > 1) out.push_back(d);
        return out;
    }
};

namespace detail {

template <typename Scalar>
struct SmithWork {
    using RowMat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    RowMat M;
    IntMatrix<Scalar> L, Linv, R, Rinv;
    unsigned flags;

    template <typename A, typename B>
    static void guard(const A& dst, const B& src, Scalar q) {
        if (dst.size() == 0) return;
        long double bound = static_cast<long double>(q < 0 ? -q : q) *
                                static_cast<long double>(src.cwiseAbs().maxCoeff()) +
                            static_cast<long double>(dst.cwiseAbs().maxCoeff());
        if (bound >= static_cast<long double>(std::numeric_limits<Scalar>::max()) / 2)
            throw overflow_error("entry growth in Smith normal form exceeds the scalar range");
    }

    // row_i += q * row_t
    void row_add(Eigen::Index i, Eigen::Index t, Scalar q, Eigen::Index from) {
        auto dst = M.row(i).tail(M.cols() - from);
        auto src = M.row(t).tail(M.cols() - from);
        guard(dst, src, q);
        dst += q * src;
        if (flags & kSmithLeft) {
            guard(L.row(i), L.row(t), q);
            L.row(i) += q * L.row(t);
        }
        if (flags & kSmithLeftInverse) {
            guard(Linv.col(t), Linv.col(i), q);
            Linv.col(t) -= q * Linv.col(i);
        }
    }
    // col_j += q * col_t
    void col_add(Eigen::Index j, Eigen::Index t, Scalar q, Eigen::Index from) {
        auto dst = M.col(j).tail(M.rows() - from);
        auto src = M.col(t).tail(M.rows() - from);
        guard(dst, src, q);
        dst += q * src;
        if (flags & kSmithRight) {
            guard(R.col(j), R.col(t), q);
            R.col(j) += q * R.col(t);
        }
        if (flags & kSmithRightInverse) {
            guard(Rinv.row(t), Rinv.row(j), q);
            Rinv.row(t) -= q * Rinv.row(j);
        }
    }
    void row_swap(Eigen::Index a, Eigen::Index b) {
        if (a == b) return;
        M.row(a).swap(M.row(b));
        if (flags & kSmithLeft) L.row(a).swap(L.row(b));
        if (flags & kSmithLeftInverse) Linv.col(a).swap(Linv.col(b));
    }
    void col_swap(Eigen::Index a, Eigen::Index b) {
        if (a == b) return;
        M.col(a).swap(M.col(b));
        if (flags & kSmithRight) R.col(a).swap(R.col(b));
        if (flags & kSmithRightInverse) Rinv.row(a).swap(Rinv.row(b));
    }
    void row_negate(Eigen::Index a) {
        M.row(a) *= Scalar(-1);
        if (flags & kSmithLeft) L.row(a) *= Scalar(-1);
        if (flags & kSmithLeftInverse) Linv.col(a) *= Scalar(-1);
    }
};

template <typename Scalar>
Scalar abs_value(Scalar v) { return v < 0 ? -v : v; }

}  // namespace detail

template <typename Derived>
SmithForm<typename Derived::Scalar> smith_normal_form(const Eigen::MatrixBase<Derived>& A,
                                                       unsigned transforms = kSmithNone) {
    using Scalar = typename Derived::Scalar;
    using Eigen::Index;
    detail::SmithWork<Scalar> w;
    w.M = A;
    w.flags = transforms;
    const Index m = A.rows(), n = A.cols();
    if (transforms & kSmithLeft) w.L = IntMatrix<Scalar>::Identity(m, m);
    if (transforms & kSmithLeftInverse) w.Linv = IntMatrix<Scalar>::Identity(m, m);
    if (transforms & kSmithRight) w.R = IntMatrix<Scalar>::Identity(n, n);
    if (transforms & kSmithRightInverse) w.Rinv = IntMatrix<Scalar>::Identity(n, n);

    auto& M = w.M;
    Index t = 0;
    for (; t < std::min(m, n); ++t) {
        Index bi = -1, bj = -1;
        Scalar best = 0;
        for (Index i = t; i < m; ++i)
            for (Index j = t; j < n; ++j) {
                Scalar v = detail::abs_value(M(i, j));
                if (v != 0 && (best == 0 || v < best)) {
                    best = v; bi = i; bj = j;
                    if (best == 1) break;
                }
            }
        if (bi < 0) break;
        w.row_swap(t, bi);
        w.col_swap(t, bj);

        for (;;) {
            bool clean = true;
            for (Index i = t + 1; i < m; ++i) {
                if (M(i, t) == 0) continue;
                w.row_add(i, t, -(M(i, t) / M(t, t)), t);
                if (M(i, t) != 0) clean = false;
            }
            for (Index j = t + 1; j < n; ++j) {
                if (M(t, j) == 0) continue;
                w.col_add(j, t, -(M(t, j) / M(t, t)), t);
                if (M(t, j) != 0) clean = false;
            }
            if (!clean) {
                Index pi = t, pj = t;
                Scalar pv = detail::abs_value(M(t, t));
                for (Index i = t + 1; i < m; ++i) {
                    Scalar v = detail::abs_value(M(i, t));
                    if (v != 0 && v < pv) { pv = v; pi = i; pj = t; }
                }
                for (Index j = t + 1; j < n; ++j) {
                    Scalar v = detail::abs_value(M(t, j));
                    if (v != 0 && v < pv) { pv = v; pi = t; pj = j; }
                }
                w.row_swap(t, pi);
                w.col_swap(t, pj);
                continue;
            }
            Scalar p = M(t, t);
            Index bad = -1;
            if (detail::abs_value(p) != 1) {
                for (Index i = t + 1; i < m && bad < 0; ++i)
                    for (Index j = t + 1; j < n; ++j)
                        if (M(i, j) % p != 0) { bad = i; break; }
            }
            if (bad < 0) break;
            w.row_add(t, bad, Scalar(1), t);
        }
        if (M(t, t) < 0) w.row_negate(t);
    }

    SmithForm<Scalar> out;
    out.rows = m;
    out.cols = n;
    out.diagonal.reserve(static_cast<std::size_t>(t));
    for (Index i = 0; i < t; ++i) out.diagonal.push_back(M(i, i));
    out.L = std::move(w.L);
    out.Linv = std::move(w.Linv);
    out.R = std::move(w.R);
    out.Rinv = std::move(w.Rinv);
    return out;
}

// Rank over Q, via the invariant factors.
template <typename Derived>
Eigen::Index integer_rank(const Eigen::MatrixBase<Derived>& A) {
    return smith_normal_form(A).rank();
}

// Solve A y = b over Q, given a Smith form of A carrying L and R. Returns nothing when b is
// outside the rational column span.
std::optional<std::vector<Rational>> solve_rational(const SmithForm<std::int64_t>& snf,
                                                    const std::vector<Rational>& b);

}  // namespace cocycle
