#pragma once

#include <optional>
#include <vector>

#include "talex/eigen_support.hpp"
#include "talex/errors.hpp"

namespace talex {

// Dispatch tags for the det() entry point.
template <class T>
struct is_laurent_scalar : std::false_type {};
template <class K>
struct is_laurent_scalar<Laurent<K>> : std::true_type {};
template <class T>
struct is_fraction_scalar : std::false_type {};
template <class K>
struct is_fraction_scalar<RationalFunc<K>> : std::true_type {};

// Reduced row echelon form in place over a field; returns the pivot column
// indices (their count is the rank).
template <class F>
std::vector<int> rref_in_place(Mat<F>& a) {
    std::vector<int> pivots;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
        Eigen::Index sel = -1;
        for (Eigen::Index i = row; i < a.rows(); ++i)
            if (!is_zero(a(i, col))) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        if (sel != row) a.row(sel).swap(a.row(row));
        F inv = F(1) / a(row, col);
        for (Eigen::Index j = col; j < a.cols(); ++j) a(row, j) = a(row, j) * inv;
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            if (i == row || is_zero(a(i, col))) continue;
            F f = a(i, col);
            for (Eigen::Index j = col; j < a.cols(); ++j) a(i, j) = a(i, j) - f * a(row, j);
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    return pivots;
}

template <class F>
std::vector<int> pivot_columns(Mat<F> a) {
    return rref_in_place(a);
}

template <class F>
int rank_of(Mat<F> a) {
    return static_cast<int>(rref_in_place(a).size());
}

// Determinant over a field by Gaussian elimination with exact zero tests.
template <class F>
F det_field(Mat<F> a) {
    if (a.rows() != a.cols()) throw ShapeError("determinant of a non-square matrix");
    Eigen::Index n = a.rows();
    F det = F(1);
    for (Eigen::Index k = 0; k < n; ++k) {
        Eigen::Index sel = -1;
        for (Eigen::Index i = k; i < n; ++i)
            if (!is_zero(a(i, k))) {
                sel = i;
                break;
            }
        if (sel < 0) return F(0);
        if (sel != k) {
            a.row(sel).swap(a.row(k));
            det = -det;
        }
        det = det * a(k, k);
        F inv = F(1) / a(k, k);
        for (Eigen::Index i = k + 1; i < n; ++i) {
            if (is_zero(a(i, k))) continue;
            F f = a(i, k) * inv;
            for (Eigen::Index j = k + 1; j < n; ++j) a(i, j) = a(i, j) - f * a(k, j);
            a(i, k) = F(0);
        }
    }
    return det;
}

// Fallback exact division for field scalars so det_bareiss is generic; the
// Laurent overload (true polynomial division) is preferred by ADL.
template <class F>
F exact_div(const F& a, const F& b) {
    return a / b;
}

// Fraction-free determinant (Bareiss) over an integral domain with exact
// division.
template <class R>
R det_bareiss(Mat<R> a) {
    if (a.rows() != a.cols()) throw ShapeError("determinant of a non-square matrix");
    Eigen::Index n = a.rows();
    if (n == 0) return R(1);
    bool negate = false;
    R prev = R(1);
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        Eigen::Index sel = -1;
        for (Eigen::Index i = k; i < n; ++i)
            if (!is_zero(a(i, k))) {
                sel = i;
                break;
            }
        if (sel < 0) return R(0);
        if (sel != k) {
            a.row(sel).swap(a.row(k));
            negate = !negate;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j)
                a(i, j) = exact_div(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
            a(i, k) = R(0);
        }
        prev = a(k, k);
    }
    return negate ? R(-1) * a(n - 1, n - 1) : a(n - 1, n - 1);
}

// Cofactor-expansion determinant; exponential, used as a test oracle only.
template <class R>
R det_cofactor(const Mat<R>& a) {
    if (a.rows() != a.cols()) throw ShapeError("determinant of a non-square matrix");
    Eigen::Index n = a.rows();
    if (n == 0) return R(1);
    if (n == 1) return a(0, 0);
    R det = R(0);
    for (Eigen::Index j = 0; j < n; ++j) {
        if (is_zero(a(0, j))) continue;
        Mat<R> minor(n - 1, n - 1);
        for (Eigen::Index i = 1; i < n; ++i) {
            Eigen::Index cc = 0;
            for (Eigen::Index c = 0; c < n; ++c) {
                if (c == j) continue;
                minor(i - 1, cc++) = a(i, c);
            }
        }
        R term = a(0, j) * det_cofactor(minor);
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

// Determinant over fractions: clear denominators row by row (prefix/suffix
// products), take a fraction-free determinant of the polynomial matrix, and
// divide back.
template <class K>
RationalFunc<K> det_fraction(const Mat<RationalFunc<K>>& a) {
    if (a.rows() != a.cols()) throw ShapeError("determinant of a non-square matrix");
    Eigen::Index n = a.rows();
    if (n == 0) return RationalFunc<K>(1);
    Mat<Laurent<K>> cleared(n, n);
    Laurent<K> total(K(1));
    for (Eigen::Index i = 0; i < n; ++i) {
        std::vector<Laurent<K>> pre(n + 1, Laurent<K>(K(1)));
        std::vector<Laurent<K>> suf(n + 1, Laurent<K>(K(1)));
        for (Eigen::Index j = 0; j < n; ++j) pre[j + 1] = pre[j] * a(i, j).den();
        for (Eigen::Index j = n; j-- > 0;) suf[j] = suf[j + 1] * a(i, j).den();
        for (Eigen::Index j = 0; j < n; ++j) cleared(i, j) = a(i, j).num() * pre[j] * suf[j + 1];
        total = total * pre[n];
    }
    return RationalFunc<K>(det_bareiss(std::move(cleared)), std::move(total));
}

// Exact determinant with entry-type dispatch: fields use elimination,
// polynomial entries use Bareiss, fractions clear denominators first.
template <class T>
T det(const Mat<T>& a) {
    if constexpr (is_fraction_scalar<T>::value)
        return det_fraction(a);
    else if constexpr (is_laurent_scalar<T>::value)
        return det_bareiss(a);
    else
        return det_field(std::move(a));
}

// Columns spanning the kernel of a (over a field); n x (n - rank).
template <class F>
Mat<F> kernel_basis(Mat<F> a) {
    Eigen::Index n = a.cols();
    std::vector<int> pivots = rref_in_place(a);
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    Mat<F> basis = Mat<F>::Zero(n, n - static_cast<Eigen::Index>(pivots.size()));
    Eigen::Index k = 0;
    for (Eigen::Index f = 0; f < n; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        basis(f, k) = F(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], k) = -a(static_cast<Eigen::Index>(r), f);
        ++k;
    }
    return basis;
}

// One solution of A x = b over a field, if consistent.
template <class F>
std::optional<Mat<F>> solve_linear(const Mat<F>& a, const Mat<F>& b) {
    if (a.rows() != b.rows()) throw ShapeError("solve: row count mismatch");
    Mat<F> aug(a.rows(), a.cols() + b.cols());
    aug << a, b;
    std::vector<int> pivots = rref_in_place(aug);
    // Any pivot inside the right block marks inconsistency.
    for (int p : pivots)
        if (p >= a.cols()) return std::nullopt;
    Mat<F> x = Mat<F>::Zero(a.cols(), b.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (Eigen::Index c = 0; c < b.cols(); ++c) x(pivots[r], c) = aug(static_cast<Eigen::Index>(r), a.cols() + c);
    return x;
}

template <class F>
Mat<F> inverse_field(const Mat<F>& a) {
    if (a.rows() != a.cols()) throw ShapeError("inverse of a non-square matrix");
    Eigen::Index n = a.rows();
    Mat<F> aug(n, 2 * n);
    aug << a, Mat<F>::Identity(n, n);
    std::vector<int> pivots = rref_in_place(aug);
    if (static_cast<Eigen::Index>(pivots.size()) != n ||
        (n > 0 && pivots.back() >= static_cast<int>(n)))
        throw SingularMatrixError("matrix is singular");
    return aug.rightCols(n);
}

} // namespace talex
