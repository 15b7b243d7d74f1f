#pragma once

#include "talex/linalg.hpp"
#include "talex/presentation.hpp"
#include "talex/torsion.hpp"
#include "talex/word.hpp"

namespace talex {

// Matrix representation of a free group over an arbitrary commutative ring
// scalar R: per-generator images together with their inverses (supplied
// explicitly since general ring elements cannot be inverted by division).
template <class R>
struct RingRep {
    int dim = 0;
    std::vector<Mat<R>> images;
    std::vector<Mat<R>> inverses;

    void validate(int num_generators) const {
        if (dim <= 0) throw ShapeError("representation dimension must be positive");
        if (static_cast<int>(images.size()) != num_generators ||
            static_cast<int>(inverses.size()) != num_generators)
            throw ShapeError("representation must cover every generator");
        Mat<R> id = Mat<R>::Identity(dim, dim);
        for (int g = 0; g < num_generators; ++g) {
            if (images[g].rows() != dim || images[g].cols() != dim ||
                inverses[g].rows() != dim || inverses[g].cols() != dim)
                throw ShapeError("representation matrices must be dim x dim");
            if (!matrices_equal(Mat<R>(images[g] * inverses[g]), id))
                throw ShapeError("stored inverse is wrong for generator " + std::to_string(g));
        }
    }

    const Mat<R>& image(int g) const { return images.at(static_cast<std::size_t>(g)); }
    const Mat<R>& inverse(int g) const { return inverses.at(static_cast<std::size_t>(g)); }
};

// Convenience constructor over a field: inverses computed by elimination.
template <class F>
RingRep<F> make_field_rep(std::vector<Mat<F>> images) {
    RingRep<F> rep;
    rep.dim = images.empty() ? 0 : static_cast<int>(images[0].rows());
    rep.images = std::move(images);
    for (const Mat<F>& a : rep.images) rep.inverses.push_back(inverse_field(a));
    return rep;
}

template <class R>
Mat<R> eval_word(const RingRep<R>& rep, const Word& w) {
    Mat<R> m = Mat<R>::Identity(rep.dim, rep.dim);
    for (const Letter& l : w.letters())
        m = m * (l.exp > 0 ? rep.image(l.gen) : rep.inverse(l.gen));
    return m;
}

// Fox derivative of w with respect to generator j, evaluated under the ring
// map induced by rep: follows the recursion d(uv) = du + rho(u) dv with
// d(x_i)/dx_j = delta_ij I and d(x_i^{-1})/dx_j = -rho(x_i)^{-1} delta_ij.
template <class R>
Mat<R> fox_derivative_eval(const Word& w, int j, const RingRep<R>& rep) {
    if (j < 0 || j >= static_cast<int>(rep.images.size()))
        throw InputError("fox derivative generator index out of range");
    Mat<R> result = Mat<R>::Zero(rep.dim, rep.dim);
    Mat<R> prefix = Mat<R>::Identity(rep.dim, rep.dim);
    for (const Letter& l : w.letters()) {
        if (l.exp > 0) {
            if (l.gen == j) result = result + prefix;
            prefix = prefix * rep.image(l.gen);
        } else {
            prefix = prefix * rep.inverse(l.gen);
            if (l.gen == j) result = result - prefix;
        }
    }
    return result;
}

// Boundary matrices of the presentation 2-complex in column convention.
// With d' = rep.dim, n generators and q relators:
//   d1 (d' x n d'): generator block j is (rho(x_j) - I)^T,
//   d2 (n d' x q d'): block (j, k) is (d r_k / d x_j)^T.
// The blocks are transposed because the literature writes chains as row
// vectors acted on from the right; d1 * d2 = 0 is then the transposed Fox
// fundamental identity.
template <class R>
struct PresentationBoundaries {
    Mat<R> d1, d2;
};

template <class R>
PresentationBoundaries<R> presentation_boundaries(const GroupPresentation& p,
                                                  const RingRep<R>& rep) {
    p.validate();
    rep.validate(p.generators);
    int d = rep.dim;
    int n = p.generators;
    int q = static_cast<int>(p.relators.size());
    Mat<R> id = Mat<R>::Identity(d, d);
    for (const Word& r : p.relators)
        if (!matrices_equal(eval_word(rep, r), id))
            throw HypothesisError("representation does not respect relator \"" + r.str() + "\"");

    PresentationBoundaries<R> out;
    out.d1 = Mat<R>(d, n * d);
    for (int j = 0; j < n; ++j)
        out.d1.middleCols(j * d, d) = Mat<R>(rep.image(j) - id).transpose();
    out.d2 = Mat<R>(n * d, q * d);
    for (int k = 0; k < q; ++k)
        for (int j = 0; j < n; ++j)
            out.d2.block(j * d, k * d, d, d) =
                fox_derivative_eval(p.relators[static_cast<std::size_t>(k)], j, rep).transpose();
    return out;
}

// The presentation 2-complex as a based chain complex
//   0 -> K^{q d'} --d2--> K^{n d'} --d1--> K^{d'} -> 0
// (length 1 when there are no relators).  Bases are ordered
// generator-major then coordinate.  The scalar must support the field
// operations used downstream (instantiate with a fraction field).
template <class R>
BasedChainComplex<R> presentation_complex(const GroupPresentation& p, const RingRep<R>& rep) {
    PresentationBoundaries<R> b = presentation_boundaries(p, rep);
    int d = rep.dim;
    int q = static_cast<int>(p.relators.size());
    BasedChainComplex<R> c;
    if (q == 0) {
        c.dims = {d, p.generators * d};
        c.boundaries = {b.d1};
    } else {
        c.dims = {d, p.generators * d, q * d};
        c.boundaries = {b.d1, b.d2};
    }
    c.validate();
    return c;
}

} // namespace talex
