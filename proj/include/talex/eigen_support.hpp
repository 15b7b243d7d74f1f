#pragma once

// Eigen matrices are used purely as exact containers: all elimination,
// determinant, and kernel routines live in linalg.hpp and never call
// Eigen's own decompositions (those assume approximate scalars).

#include <Eigen/Core>

#include "talex/fp.hpp"
#include "talex/gaussian.hpp"
#include "talex/laurent.hpp"
#include "talex/rational.hpp"
#include "talex/rational_function.hpp"

namespace Eigen {

namespace talex_detail {

// Shared NumTraits shape for exact scalars.  IsComplex stays 0 even for
// gaussian rationals: Eigen's conjugation support is bypassed entirely and
// involutions are applied explicitly via talex::scalar_traits.
template <class T>
struct ExactNumTraits : GenericNumTraits<T> {
    using Real = T;
    using NonInteger = T;
    using Nested = T;
    using Literal = T;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 60,
        MulCost = 100
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

} // namespace talex_detail

template <>
struct NumTraits<talex::Rational> : talex_detail::ExactNumTraits<talex::Rational> {};
template <>
struct NumTraits<talex::GaussianRational> : talex_detail::ExactNumTraits<talex::GaussianRational> {};
template <>
struct NumTraits<talex::Fp> : talex_detail::ExactNumTraits<talex::Fp> {};
template <class K>
struct NumTraits<talex::Laurent<K>> : talex_detail::ExactNumTraits<talex::Laurent<K>> {};
template <class K>
struct NumTraits<talex::RationalFunc<K>> : talex_detail::ExactNumTraits<talex::RationalFunc<K>> {};

} // namespace Eigen

namespace talex {

template <class T>
using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <class T>
using Vec = Eigen::Matrix<T, Eigen::Dynamic, 1>;

// Elementwise exact equality (Eigen's isApprox is tolerance-based).
template <class T>
bool matrices_equal(const Mat<T>& a, const Mat<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (!(a(i, j) == b(i, j))) return false;
    return true;
}

template <class T>
bool is_zero_matrix(const Mat<T>& a) {
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (!is_zero(a(i, j))) return false;
    return true;
}

// Entrywise conversion through an explicit function (e.g. embedding
// polynomial entries into the fraction field).
template <class To, class From, class F>
Mat<To> map_matrix(const Mat<From>& a, F f) {
    Mat<To> r(a.rows(), a.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) r(i, j) = f(a(i, j));
    return r;
}

// Conjugate transpose under the scalar's involution.
template <class T>
Mat<T> conj_transpose(const Mat<T>& a) {
    Mat<T> r(a.cols(), a.rows());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) r(j, i) = scalar_traits<T>::conj(a(i, j));
    return r;
}

template <class T>
Mat<T> hcat(const std::vector<Mat<T>>& blocks, Eigen::Index rows) {
    Eigen::Index cols = 0;
    for (const auto& b : blocks) {
        if (b.cols() > 0 && b.rows() != rows) throw ShapeError("hcat: inconsistent row counts");
        cols += b.cols();
    }
    Mat<T> r(rows, cols);
    Eigen::Index at = 0;
    for (const auto& b : blocks) {
        if (b.cols() > 0) r.middleCols(at, b.cols()) = b;
        at += b.cols();
    }
    return r;
}

template <class T>
Mat<T> select_columns(const Mat<T>& a, const std::vector<int>& idx) {
    Mat<T> r(a.rows(), static_cast<Eigen::Index>(idx.size()));
    for (std::size_t k = 0; k < idx.size(); ++k) r.col(static_cast<Eigen::Index>(k)) = a.col(idx[k]);
    return r;
}

} // namespace talex
