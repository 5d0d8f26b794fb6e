#pragma once

// Smith normal form over any exact integer scalar (int64_t, Integer, ...).
// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ..., d_i >= 0.

#include "gengroup/integer.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <utility>

namespace gengroup {

template <typename Scalar>
struct SnfResult {
    Matrix<Scalar> U;
    Matrix<Scalar> D;
    Matrix<Scalar> V;
};

namespace detail {

template <typename Scalar>
Scalar abs_value(const Scalar& x) {
    return x < 0 ? Scalar(-x) : x;
}

// Position of the nonzero entry of minimal absolute value in A(t:, t:).
template <typename Scalar>
bool find_pivot(const Matrix<Scalar>& A, Eigen::Index t, Eigen::Index& pr, Eigen::Index& pc) {
    bool found = false;
    Scalar best = 0;
    for (Eigen::Index j = t; j < A.cols(); ++j)
        for (Eigen::Index i = t; i < A.rows(); ++i) {
            if (A(i, j) == 0) continue;
            Scalar a = abs_value(A(i, j));
            if (!found || a < best) {
                best = a;
                pr = i;
                pc = j;
                found = true;
            }
        }
    return found;
}

} // namespace detail

template <typename Scalar>
SnfResult<Scalar> smith_normal_form(const Matrix<Scalar>& A) {
    const Eigen::Index m = A.rows();
    const Eigen::Index n = A.cols();
    SnfResult<Scalar> r{Matrix<Scalar>::Identity(m, m), A, Matrix<Scalar>::Identity(n, n)};
    auto& D = r.D;

    for (Eigen::Index t = 0; t < std::min(m, n); ++t) {
        Eigen::Index pr = t, pc = t;
        if (!detail::find_pivot(D, t, pr, pc)) break;
        for (;;) {
            D.row(t).swap(D.row(pr));
            r.U.row(t).swap(r.U.row(pr));
            D.col(t).swap(D.col(pc));
            r.V.col(t).swap(r.V.col(pc));

            bool clean = true;
            for (Eigen::Index i = t + 1; i < m; ++i) {
                if (D(i, t) == 0) continue;
                const Scalar q = D(i, t) / D(t, t);
                D.row(i) -= q * D.row(t);
                r.U.row(i) -= q * r.U.row(t);
                clean = clean && D(i, t) == 0;
            }
            for (Eigen::Index j = t + 1; j < n; ++j) {
                if (D(t, j) == 0) continue;
                const Scalar q = D(t, j) / D(t, t);
                D.col(j) -= q * D.col(t);
                r.V.col(j) -= q * r.V.col(t);
                clean = clean && D(t, j) == 0;
            }
            if (clean) {
                // Divisibility: fold an offending row into the pivot row and retry.
                Eigen::Index bad = -1;
                for (Eigen::Index i = t + 1; i < m && bad < 0; ++i)
                    for (Eigen::Index j = t + 1; j < n; ++j)
                        if (D(i, j) % D(t, t) != 0) {
                            bad = i;
                            break;
                        }
                if (bad < 0) break;
                D.row(t) += D.row(bad);
                r.U.row(t) += r.U.row(bad);
            }
            // Remainders are smaller than the pivot, so the next pivot improves.
            detail::find_pivot(D, t, pr, pc);
        }
        if (D(t, t) < 0) {
            D.row(t) = -D.row(t);
            r.U.row(t) = -r.U.row(t);
        }
    }
    return r;
}

/// Exact determinant by fraction-free (Bareiss) elimination.
template <typename Scalar>
Scalar exact_determinant(Matrix<Scalar> M) {
    const Eigen::Index n = M.rows();
    if (n != M.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    if (n == 0) return Scalar(1);
    Scalar sign = 1;
    Scalar prev = 1;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        if (M(k, k) == 0) {
            Eigen::Index swap = k + 1;
            while (swap < n && M(swap, k) == 0) ++swap;
            if (swap == n) return Scalar(0);
            M.row(k).swap(M.row(swap));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i)
            for (Eigen::Index j = k + 1; j < n; ++j) M(i, j) = (M(i, j) * M(k, k) - M(i, k) * M(k, j)) / prev;
        prev = M(k, k);
    }
    return sign * M(n - 1, n - 1);
}

template <typename Scalar>
bool is_unimodular(const Matrix<Scalar>& M) {
    if (M.rows() != M.cols()) return false;
    const Scalar d = exact_determinant(M);
    return d == 1 || d == -1;
}

} // namespace gengroup
