#pragma once

// Randomized constructions of based chain complexes with known homology,
// used by property tests and the self-check suite.  Complexes are built in
// a split normal form (image / homology / lift blocks) and then scrambled
// by random base changes, so every produced complex carries valid homology
// representatives by construction.

#include <functional>
#include <random>

#include "talex/torsion.hpp"

namespace talex {

using Rng = std::mt19937_64;

template <class F>
using CoeffGen = std::function<F(Rng&)>;

template <class F>
Mat<F> random_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols, const CoeffGen<F>& gen) {
    Mat<F> a(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) a(i, j) = gen(rng);
    return a;
}

template <class F>
F random_nonzero(Rng& rng, const CoeffGen<F>& gen) {
    for (int tries = 0; tries < 200; ++tries) {
        F v = gen(rng);
        if (!is_zero(v)) return v;
    }
    return F(1);
}

// Random invertible matrix assembled from elementary row operations applied
// to the identity, so invertibility never needs a determinant check.
template <class F>
Mat<F> random_invertible(Rng& rng, Eigen::Index n, const CoeffGen<F>& gen) {
    Mat<F> a = Mat<F>::Identity(n, n);
    if (n == 0) return a;
    std::uniform_int_distribution<Eigen::Index> pick(0, n - 1);
    std::uniform_int_distribution<int> op(0, 2);
    Eigen::Index steps = 3 * n + 2;
    for (Eigen::Index s = 0; s < steps; ++s) {
        Eigen::Index i = pick(rng), j = pick(rng);
        switch (op(rng)) {
        case 0: // row_i += f * row_j
            if (i != j) {
                F f = gen(rng);
                for (Eigen::Index k = 0; k < n; ++k) a(i, k) = a(i, k) + f * a(j, k);
            }
            break;
        case 1: // swap rows
            if (i != j)
                for (Eigen::Index k = 0; k < n; ++k) std::swap(a(i, k), a(j, k));
            break;
        default: // scale a row by a nonzero value
            {
                F f = random_nonzero(rng, gen);
                for (Eigen::Index k = 0; k < n; ++k) a(i, k) = a(i, k) * f;
            }
            break;
        }
    }
    return a;
}

// Random based complex with prescribed homology dimensions.  betas[i] is
// dim H_i; the boundary ranks are chosen at random subject to the given
// cap on the dimension of each chain group.  When some beta is nonzero the
// result carries homology_bases.
template <class F>
BasedChainComplex<F> random_complex_with_homology(Rng& rng, const std::vector<int>& betas,
                                                  int max_rank, const CoeffGen<F>& gen) {
    int m = static_cast<int>(betas.size()) - 1;
    if (m < 0) throw ShapeError("random complex needs at least one degree");
    std::uniform_int_distribution<int> rank_pick(0, max_rank);
    std::vector<int> ranks(static_cast<std::size_t>(m) + 1, 0);
    for (int i = 0; i < m; ++i) ranks[i] = rank_pick(rng); // rank of d_i; rank d_m = 0

    BasedChainComplex<F> c;
    c.dims.resize(static_cast<std::size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) {
        int prev = i > 0 ? ranks[i - 1] : 0;
        c.dims[i] = ranks[i] + betas[i] + prev;
    }
    // Split normal form: degree i is ordered [image | homology | lift],
    // and d_i maps the lift block of degree i+1 identically onto the image
    // block of degree i.
    c.boundaries.resize(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        Mat<F> d = Mat<F>::Zero(c.dims[i], c.dims[i + 1]);
        int lift_at = ranks[i + 1] + betas[i + 1];
        for (int k = 0; k < ranks[i]; ++k) d(k, lift_at + k) = F(1);
        c.boundaries[static_cast<std::size_t>(i)] = d;
    }
    bool any_h = false;
    for (int b : betas)
        if (b > 0) any_h = true;
    if (any_h) {
        std::vector<Mat<F>> hs(static_cast<std::size_t>(m) + 1);
        for (int i = 0; i <= m; ++i) {
            Mat<F> h = Mat<F>::Zero(c.dims[i], betas[i]);
            for (int k = 0; k < betas[i]; ++k) h(ranks[i] + k, k) = F(1);
            hs[static_cast<std::size_t>(i)] = h;
        }
        c.homology_bases = std::move(hs);
    }
    // Scramble every degree with a random base change.
    for (int i = 0; i <= m; ++i)
        c = base_change(c, i, random_invertible(rng, c.dims[i], gen));
    return c;
}

template <class F>
BasedChainComplex<F> random_acyclic_complex(Rng& rng, int length, int max_rank,
                                            const CoeffGen<F>& gen) {
    std::vector<int> betas(static_cast<std::size_t>(length) + 1, 0);
    return random_complex_with_homology(rng, betas, max_rank, gen);
}

template <class F>
struct ShortExactTriple {
    BasedChainComplex<F> sub, total, quot;
};

// Random short exact sequence with compatible bases: the sub and quotient
// complexes are drawn independently and the total complex is glued with
// connecting blocks X_i = Y_i d''_i - d'_i Y_{i+1}, which squares to zero
// for any choice of the Y matrices.  The total complex gets homology
// representatives computed from its own cycles.
template <class F>
ShortExactTriple<F> random_ses(Rng& rng, const std::vector<int>& betas_sub,
                               const std::vector<int>& betas_quot, int max_rank,
                               const CoeffGen<F>& gen) {
    if (betas_sub.size() != betas_quot.size())
        throw ShapeError("random ses factors need equal length");
    ShortExactTriple<F> t;
    t.sub = random_complex_with_homology(rng, betas_sub, max_rank, gen);
    t.quot = random_complex_with_homology(rng, betas_quot, max_rank, gen);
    int m = t.sub.length();

    std::vector<Mat<F>> ys(static_cast<std::size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) ys[i] = random_matrix(rng, t.sub.dims[i], t.quot.dims[i], gen);

    t.total.dims.resize(static_cast<std::size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) t.total.dims[i] = t.sub.dims[i] + t.quot.dims[i];
    t.total.boundaries.resize(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        Mat<F> x = ys[i] * t.quot.boundaries[i] - t.sub.boundaries[i] * ys[i + 1];
        Mat<F> d = Mat<F>::Zero(t.total.dims[i], t.total.dims[i + 1]);
        d.topLeftCorner(t.sub.dims[i], t.sub.dims[i + 1]) = t.sub.boundaries[i];
        d.topRightCorner(t.sub.dims[i], t.quot.dims[i + 1]) = x;
        d.bottomRightCorner(t.quot.dims[i], t.quot.dims[i + 1]) = t.quot.boundaries[i];
        t.total.boundaries[static_cast<std::size_t>(i)] = d;
    }
    auto hs = homology(t.total);
    bool any_h = false;
    for (const auto& h : hs)
        if (h.dim > 0) any_h = true;
    if (any_h) {
        std::vector<Mat<F>> bases(hs.size());
        for (std::size_t i = 0; i < hs.size(); ++i) bases[i] = hs[i].cycle_reps;
        t.total.homology_bases = std::move(bases);
    }
    return t;
}

} // namespace talex
