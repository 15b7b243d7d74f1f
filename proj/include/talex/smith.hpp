#pragma once

#include <cstdint>
#include <vector>

#include "talex/eigen_support.hpp"
#include "talex/errors.hpp"
#include "talex/linalg.hpp"

namespace talex {

// Smith normal form over the univariate Laurent ring K[t^{+/-1}] (a
// Euclidean domain with norm = span degree).
//
// Invariants: U * A * V = D with U, V invertible over the ring,
// Uinv * D * Vinv = A, D diagonal, and the nonzero diagonal entries
// (the elementary divisors, unit-normalized) satisfy d1 | d2 | ...
template <class K>
struct SmithResult {
    Mat<Laurent<K>> U, Uinv, V, Vinv, D;
    std::vector<Laurent<K>> divisors;
    int rank = 0;
};

namespace detail {

template <class K>
long span_or_negative(const Laurent<K>& p) {
    return p.is_zero() ? -1 : degree(p);
}

} // namespace detail

template <class K>
SmithResult<K> snf_univariate(const Mat<Laurent<K>>& input) {
    using L = Laurent<K>;
    for (Eigen::Index i = 0; i < input.rows(); ++i)
        for (Eigen::Index j = 0; j < input.cols(); ++j)
            if (input(i, j).rank() > 1)
                throw ArithmeticError("snf_univariate requires rank-1 Laurent entries");

    const Eigen::Index m = input.rows(), n = input.cols();
    SmithResult<K> res;
    res.D = input;
    res.U = Mat<L>::Identity(m, m);
    res.Uinv = Mat<L>::Identity(m, m);
    res.V = Mat<L>::Identity(n, n);
    res.Vinv = Mat<L>::Identity(n, n);
    Mat<L>& A = res.D;

    auto swap_rows = [&](Eigen::Index a, Eigen::Index b) {
        if (a == b) return;
        A.row(a).swap(A.row(b));
        res.U.row(a).swap(res.U.row(b));
        res.Uinv.col(a).swap(res.Uinv.col(b));
    };
    auto swap_cols = [&](Eigen::Index a, Eigen::Index b) {
        if (a == b) return;
        A.col(a).swap(A.col(b));
        res.V.col(a).swap(res.V.col(b));
        res.Vinv.row(a).swap(res.Vinv.row(b));
    };
    // row i -= q * row k
    auto row_sub = [&](Eigen::Index i, Eigen::Index k, const L& q) {
        for (Eigen::Index j = 0; j < n; ++j) A(i, j) -= q * A(k, j);
        for (Eigen::Index j = 0; j < m; ++j) res.U(i, j) -= q * res.U(k, j);
        for (Eigen::Index j = 0; j < m; ++j) res.Uinv(j, k) += res.Uinv(j, i) * q;
    };
    // col j -= q * col k
    auto col_sub = [&](Eigen::Index j, Eigen::Index k, const L& q) {
        for (Eigen::Index i = 0; i < m; ++i) A(i, j) -= q * A(i, k);
        for (Eigen::Index i = 0; i < n; ++i) res.V(i, j) -= q * res.V(i, k);
        for (Eigen::Index i = 0; i < n; ++i) res.Vinv(k, i) += q * res.Vinv(j, i);
    };
    // row i += row k
    auto row_add = [&](Eigen::Index i, Eigen::Index k) {
        for (Eigen::Index j = 0; j < n; ++j) A(i, j) += A(k, j);
        for (Eigen::Index j = 0; j < m; ++j) res.U(i, j) += res.U(k, j);
        for (Eigen::Index j = 0; j < m; ++j) res.Uinv(j, k) -= res.Uinv(j, i);
    };

    Eigen::Index t = std::min(m, n);
    for (Eigen::Index k = 0; k < t; ++k) {
        // Bring a minimal-span nonzero entry of the trailing block to (k, k).
        long best = -1;
        Eigen::Index bi = -1, bj = -1;
        for (Eigen::Index i = k; i < m; ++i)
            for (Eigen::Index j = k; j < n; ++j) {
                long s = detail::span_or_negative(A(i, j));
                if (s >= 0 && (best < 0 || s < best)) {
                    best = s;
                    bi = i;
                    bj = j;
                }
            }
        if (best < 0) break; // trailing block is zero
        swap_rows(k, bi);
        swap_cols(k, bj);

        for (;;) {
            // Clear column k below the pivot.
            bool dirty = true;
            while (dirty) {
                dirty = false;
                for (Eigen::Index i = k + 1; i < m; ++i) {
                    if (A(i, k).is_zero()) continue;
                    auto [q, r] = divmod_rank1(A(i, k), A(k, k));
                    row_sub(i, k, q);
                    if (!A(i, k).is_zero()) {
                        swap_rows(i, k); // remainder has smaller span
                        dirty = true;
                    }
                }
                for (Eigen::Index j = k + 1; j < n; ++j) {
                    if (A(k, j).is_zero()) continue;
                    auto [q, r] = divmod_rank1(A(k, j), A(k, k));
                    col_sub(j, k, q);
                    if (!A(k, j).is_zero()) {
                        swap_cols(j, k);
                        dirty = true;
                    }
                }
            }
            // Divisibility fixup: the pivot must divide the whole trailing
            // block; otherwise fold an offending row in and re-reduce.
            bool fixed = true;
            for (Eigen::Index i = k + 1; i < m && fixed; ++i)
                for (Eigen::Index j = k + 1; j < n && fixed; ++j) {
                    if (A(i, j).is_zero()) continue;
                    auto [q, r] = divmod_rank1(A(i, j), A(k, k));
                    if (!r.is_zero()) {
                        row_add(k, i);
                        fixed = false;
                    }
                }
            if (fixed) break;
        }
    }

    // Unit-normalize the diagonal (compensating in U / Uinv) and collect
    // the divisors.
    for (Eigen::Index k = 0; k < t; ++k) {
        if (A(k, k).is_zero()) continue;
        auto un = unit_normalize(A(k, k));
        if (!un.unit.is_one()) {
            L inv_unit = un.unit.pow(-1);
            for (Eigen::Index j = 0; j < n; ++j) A(k, j) = A(k, j) * inv_unit;
            for (Eigen::Index j = 0; j < m; ++j) res.U(k, j) = res.U(k, j) * inv_unit;
            for (Eigen::Index j = 0; j < m; ++j) res.Uinv(j, k) = res.Uinv(j, k) * un.unit;
        }
        res.divisors.push_back(A(k, k));
        ++res.rank;
    }
    for (std::size_t i = 0; i + 1 < res.divisors.size(); ++i) {
        auto [q, r] = divmod_rank1(res.divisors[i + 1], res.divisors[i]);
        if (!r.is_zero()) throw InternalError("Smith divisor chain is not divisible");
    }
    return res;
}

// --- integer Smith normal form (for abelianizations) ----------------------

using MatI = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

struct IntSmithResult {
    MatI U, V, D; // U * A * V = D
    std::vector<std::int64_t> divisors;
    int rank = 0;
};

IntSmithResult int_smith(MatI input);

} // namespace talex
