#pragma once

// Small chain-complex and representation fixtures shared between suites.

#include <array>

#include "talex/representation.hpp"
#include "talex/torsion.hpp"

namespace testsupport {

// Parabolic trefoil pair over Q: a -> [[1,1],[0,1]], b -> [[1,0],[-1,1]].
inline talex::Representation<talex::Rational> parabolic_trefoil_rep() {
    using talex::Rational;
    talex::Representation<Rational> r;
    r.dim = 2;
    r.field = {talex::FieldKind::rationals, 0};
    talex::Mat<Rational> a(2, 2), b(2, 2);
    a(0, 0) = Rational(1);
    a(0, 1) = Rational(1);
    a(1, 0) = Rational(0);
    a(1, 1) = Rational(1);
    b(0, 0) = Rational(1);
    b(0, 1) = Rational(0);
    b(1, 0) = Rational(-1);
    b(1, 1) = Rational(1);
    r.images = {a, b};
    return r;
}

// Two-generator representation over F_p from row-major matrix entries.
inline talex::Representation<talex::Fp> sl2_sample_rep(std::int64_t p, std::array<long, 4> a,
                                                       std::array<long, 4> b) {
    talex::Representation<talex::Fp> r;
    r.dim = 2;
    r.field = {talex::FieldKind::prime_field, static_cast<long>(p)};
    for (const auto& m : {a, b}) {
        talex::Mat<talex::Fp> img(2, 2);
        img(0, 0) = talex::Fp::make(m[0], p);
        img(0, 1) = talex::Fp::make(m[1], p);
        img(1, 0) = talex::Fp::make(m[2], p);
        img(1, 1) = talex::Fp::make(m[3], p);
        r.images.push_back(img);
    }
    return r;
}

// Trivial d-dimensional representation over K on n generators.
template <class K>
talex::Representation<K> trivial_rep(const talex::InvolutiveField& f, int n, int d = 1) {
    talex::Representation<K> r;
    r.dim = d;
    r.field = f;
    for (int i = 0; i < n; ++i) r.images.push_back(talex::Mat<K>(talex::Mat<K>::Identity(d, d)));
    return r;
}

// 0 -> F --(a)--> F -> 0 concentrated in degrees 1 and 0.
template <class F>
talex::BasedChainComplex<F> segment_complex(const F& a) {
    talex::BasedChainComplex<F> c;
    c.dims = {1, 1};
    talex::Mat<F> d(1, 1);
    d(0, 0) = a;
    c.boundaries = {d};
    return c;
}

// The twisted cellular complex of the torus over the fraction field in two
// variables: 0 -> F -> F^2 -> F -> 0 with boundaries [y-1; 1-x] and
// [1-x, 1-y].  Acyclic with torsion -1.
inline talex::BasedChainComplex<talex::RationalFunc<talex::Rational>> torus_complex() {
    using L = talex::Laurent<talex::Rational>;
    using RF = talex::RationalFunc<talex::Rational>;
    L one(1), x = L::variable(1), y = L::variable(2);
    talex::BasedChainComplex<RF> c;
    c.dims = {1, 2, 1};
    talex::Mat<RF> d0(1, 2), d1(2, 1);
    d0(0, 0) = RF(one - x);
    d0(0, 1) = RF(one - y);
    d1(0, 0) = RF(y - one);
    d1(1, 0) = RF(one - x);
    c.boundaries = {d0, d1};
    return c;
}

} // namespace testsupport
