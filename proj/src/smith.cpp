#include "talex/smith.hpp"

#include <cstdlib>

namespace talex {

IntSmithResult int_smith(MatI input) {
    const Eigen::Index m = input.rows(), n = input.cols();
    IntSmithResult res;
    res.U = MatI::Identity(m, m);
    res.V = MatI::Identity(n, n);
    MatI& A = input;

    auto swap_rows = [&](Eigen::Index a, Eigen::Index b) {
        if (a == b) return;
        A.row(a).swap(A.row(b));
        res.U.row(a).swap(res.U.row(b));
    };
    auto swap_cols = [&](Eigen::Index a, Eigen::Index b) {
        if (a == b) return;
        A.col(a).swap(A.col(b));
        res.V.col(a).swap(res.V.col(b));
    };
    auto row_sub = [&](Eigen::Index i, Eigen::Index k, std::int64_t q) {
        A.row(i) -= q * A.row(k);
        res.U.row(i) -= q * res.U.row(k);
    };
    auto col_sub = [&](Eigen::Index j, Eigen::Index k, std::int64_t q) {
        A.col(j) -= q * A.col(k);
        res.V.col(j) -= q * res.V.col(k);
    };
    auto row_add = [&](Eigen::Index i, Eigen::Index k) {
        A.row(i) += A.row(k);
        res.U.row(i) += res.U.row(k);
    };

    Eigen::Index t = std::min(m, n);
    for (Eigen::Index k = 0; k < t; ++k) {
        std::int64_t best = 0;
        Eigen::Index bi = -1, bj = -1;
        for (Eigen::Index i = k; i < m; ++i)
            for (Eigen::Index j = k; j < n; ++j) {
                std::int64_t v = std::abs(A(i, j));
                if (v != 0 && (best == 0 || v < best)) {
                    best = v;
                    bi = i;
                    bj = j;
                }
            }
        if (bi < 0) break;
        swap_rows(k, bi);
        swap_cols(k, bj);

        for (;;) {
            bool dirty = true;
            while (dirty) {
                dirty = false;
                for (Eigen::Index i = k + 1; i < m; ++i) {
                    if (A(i, k) == 0) continue;
                    row_sub(i, k, A(i, k) / A(k, k));
                    if (A(i, k) != 0) {
                        swap_rows(i, k);
                        dirty = true;
                    }
                }
                for (Eigen::Index j = k + 1; j < n; ++j) {
                    if (A(k, j) == 0) continue;
                    col_sub(j, k, A(k, j) / A(k, k));
                    if (A(k, j) != 0) {
                        swap_cols(j, k);
                        dirty = true;
                    }
                }
            }
            bool fixed = true;
            for (Eigen::Index i = k + 1; i < m && fixed; ++i)
                for (Eigen::Index j = k + 1; j < n && fixed; ++j)
                    if (A(i, j) % A(k, k) != 0) {
                        row_add(k, i);
                        fixed = false;
                    }
            if (fixed) break;
        }
    }

    for (Eigen::Index k = 0; k < t; ++k) {
        if (A(k, k) == 0) continue;
        if (A(k, k) < 0) {
            A.row(k) = -A.row(k);
            res.U.row(k) = -res.U.row(k);
        }
        res.divisors.push_back(A(k, k));
        ++res.rank;
    }
    for (std::size_t i = 0; i + 1 < res.divisors.size(); ++i)
        if (res.divisors[i + 1] % res.divisors[i] != 0)
            throw InternalError("integer Smith divisor chain is not divisible");
    res.D = A;
    return res;
}

} // namespace talex
