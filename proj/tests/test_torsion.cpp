#include "doctest.h"

#include "talex/random_complex.hpp"
#include "talex/torsion.hpp"

#include "fixtures.hpp"
#include "test_support.hpp"

using namespace talex;
using testsupport::segment_complex;
using testsupport::torus_complex;

namespace {

using L = Laurent<Rational>;
using RF = RationalFunc<Rational>;

CoeffGen<Rational> rational_gen() {
    return [](Rng& rng) { return testsupport::random_rational(rng); };
}

CoeffGen<Fp> fp_gen(long p) {
    return [p](Rng& rng) { return testsupport::random_fp(rng, p); };
}

template <class F>
F pow_sign(const F& v, int degree) {
    return degree % 2 == 0 ? v : F(1) / v;
}

} // namespace

TEST_SUITE("torsion") {

    TEST_CASE("segment complex has torsion a^{-1}") {
        auto c = segment_complex(Rational(5));
        auto t = torsion(c);
        CHECK(t.acyclic);
        CHECK(t.value == Rational(1, 5));

        auto cf = segment_complex(RF(L::variable(1) - L(1)));
        auto tf = torsion(cf);
        CHECK(tf.acyclic);
        CHECK(tf.value == RF(L(1)) / RF(L::variable(1) - L(1)));
    }

    TEST_CASE("torus complex has torsion -1") {
        auto c = torus_complex();
        c.validate();
        auto t = torsion(c);
        CHECK(t.acyclic);
        CHECK(t.value == RF(L(-1)));
        CHECK(sign_refined_torsion(c).value == RF(L(-1)));
    }

    TEST_CASE("validate rejects malformed complexes") {
        BasedChainComplex<Rational> c;
        c.dims = {1, 1};
        c.boundaries = {Mat<Rational>::Zero(2, 1)};
        CHECK_THROWS_AS(c.validate(), ShapeError);

        BasedChainComplex<Rational> d;
        d.dims = {1, 1, 1};
        Mat<Rational> one(1, 1);
        one(0, 0) = Rational(1);
        d.boundaries = {one, one};
        CHECK_THROWS_AS(d.validate(), ShapeError); // d*d != 0

        BasedChainComplex<Rational> e;
        e.dims = {};
        CHECK_THROWS_AS(e.validate(), ShapeError);
    }

    TEST_CASE("homology dimensions and representatives") {
        // d_0 = diag(1, 0): H_0 and H_1 both one-dimensional.
        BasedChainComplex<Rational> c;
        c.dims = {2, 2};
        Mat<Rational> d = Mat<Rational>::Zero(2, 2);
        d(0, 0) = Rational(1);
        c.boundaries = {d};
        auto h = homology(c);
        REQUIRE(h.size() == 2);
        CHECK(h[0].dim == 1);
        CHECK(h[1].dim == 1);
        CHECK(h[0].cycle_reps(0, 0) == Rational(0));
        CHECK(h[0].cycle_reps(1, 0) == Rational(1));
        // The degree-1 representative spans ker d_0.
        CHECK(is_zero_matrix(Mat<Rational>(c.boundaries[0] * h[1].cycle_reps)));
        CHECK(h[1].cycle_reps.cols() == 1);

        // Acyclic segment: all homology vanishes.
        auto seg = segment_complex(Rational(3));
        for (const auto& hi : homology(seg)) CHECK(hi.dim == 0);
    }

    TEST_CASE("prescribed homology is recovered by the homology op") {
        Rng rng(2024);
        auto gen = rational_gen();
        std::uniform_int_distribution<int> beta_pick(0, 2), len_pick(1, 4);
        for (int iter = 0; iter < 25; ++iter) {
            int m = len_pick(rng);
            std::vector<int> betas(static_cast<std::size_t>(m) + 1);
            for (auto& b : betas) b = beta_pick(rng);
            auto c = random_complex_with_homology(rng, betas, 2, gen);
            c.validate();
            auto h = homology(c);
            for (int i = 0; i <= m; ++i) CHECK(h[static_cast<std::size_t>(i)].dim == betas[static_cast<std::size_t>(i)]);
        }
    }

    TEST_CASE("euler characteristic matches homology") {
        Rng rng(77);
        auto gen = fp_gen(101);
        std::uniform_int_distribution<int> beta_pick(0, 2), len_pick(1, 4);
        for (int iter = 0; iter < 30; ++iter) {
            int m = len_pick(rng);
            std::vector<int> betas(static_cast<std::size_t>(m) + 1);
            for (auto& b : betas) b = beta_pick(rng);
            auto c = random_complex_with_homology(rng, betas, 2, gen);
            long chi_dims = 0, chi_h = 0;
            auto h = homology(c);
            for (int i = 0; i <= m; ++i) {
                long sign = i % 2 == 0 ? 1 : -1;
                chi_dims += sign * c.dims[static_cast<std::size_t>(i)];
                chi_h += sign * h[static_cast<std::size_t>(i)].dim;
            }
            CHECK(chi_dims == chi_h);
        }
    }

    TEST_CASE("non-acyclic complexes: error vs invariant-zero entry points") {
        BasedChainComplex<Rational> c;
        c.dims = {2, 1};
        c.boundaries = {Mat<Rational>::Zero(2, 1)};
        CHECK_THROWS_AS(torsion(c), NonAcyclicError);
        auto tv = torsion_invariant(c);
        CHECK_FALSE(tv.acyclic);
        CHECK(tv.value == Rational(0));

        // With homology bases the low-level op succeeds but the invariant
        // semantics still map non-acyclicity to zero.
        Rng rng(5);
        auto cc = random_complex_with_homology<Rational>(rng, {1, 0}, 1, rational_gen());
        CHECK(torsion(cc).acyclic == false);
        CHECK_FALSE(is_zero(torsion(cc).value));
        CHECK(torsion_invariant(cc).value == Rational(0));
    }

    TEST_CASE("invalid homology bases are rejected") {
        // beta_0 = 1 complex; pass a non-cycle or a boundary as its basis.
        BasedChainComplex<Rational> c;
        c.dims = {2, 1};
        Mat<Rational> d(2, 1);
        d(0, 0) = Rational(1);
        d(1, 0) = Rational(0);
        c.boundaries = {d}; // H_0 = span(e_1), H_1 = 0
        std::vector<Mat<Rational>> hs(2);
        hs[0] = Mat<Rational>(2, 1);
        hs[0](0, 0) = Rational(1); // e_0 is a boundary: not a homology basis
        hs[0](1, 0) = Rational(0);
        hs[1] = Mat<Rational>(1, 0);
        c.homology_bases = hs;
        CHECK_THROWS_AS(torsion(c), HypothesisError);

        (*c.homology_bases)[0](1, 0) = Rational(1); // e_0 + e_1 projects to a basis
        CHECK_FALSE(is_zero(torsion(c).value));

        (*c.homology_bases)[0] = Mat<Rational>(2, 2); // wrong width
        CHECK_THROWS_AS(torsion(c), HypothesisError);
    }

    TEST_CASE("choice independence of the internal bases") {
        Rng rng(4242);
        auto gen = fp_gen(101);
        std::uniform_int_distribution<int> beta_pick(0, 1), len_pick(1, 4);
        for (int iter = 0; iter < 12; ++iter) {
            int m = len_pick(rng);
            std::vector<int> betas(static_cast<std::size_t>(m) + 1);
            for (auto& b : betas) b = beta_pick(rng);
            auto c = random_complex_with_homology(rng, betas, 2, gen);
            auto base = torsion(c);
            for (int rep = 0; rep < 5; ++rep) {
                detail::ColumnMixers<Fp> mixers(static_cast<std::size_t>(m));
                for (int i = 0; i < m; ++i)
                    mixers[static_cast<std::size_t>(i)] =
                        random_invertible(rng, c.dims[static_cast<std::size_t>(i) + 1], gen);
                auto alt = torsion_with_choices(c, mixers);
                CHECK(alt.value == base.value);
                CHECK(alt.acyclic == base.acyclic);
            }
        }
    }

    TEST_CASE("swapping two basis vectors negates torsion") {
        Rng rng(99);
        auto gen = rational_gen();
        auto c = random_acyclic_complex(rng, 3, 2, gen);
        // Find a degree with at least two basis vectors.
        int deg = -1;
        for (int i = 0; i <= c.length(); ++i)
            if (c.dims[static_cast<std::size_t>(i)] >= 2) deg = i;
        REQUIRE(deg >= 0);
        int n = c.dims[static_cast<std::size_t>(deg)];
        Mat<Rational> p = Mat<Rational>::Identity(n, n);
        p(0, 0) = Rational(0);
        p(1, 1) = Rational(0);
        p(0, 1) = Rational(1);
        p(1, 0) = Rational(1);
        auto swapped = base_change(c, deg, p);
        CHECK(torsion(swapped).value == -torsion(c).value);
    }

    TEST_CASE("scaling one basis vector multiplies torsion by f^{(-1)^i}") {
        Rng rng(123);
        auto gen = rational_gen();
        for (int iter = 0; iter < 10; ++iter) {
            auto c = random_acyclic_complex(rng, 3, 2, gen);
            Rational f(3, 7);
            for (int deg = 0; deg <= c.length(); ++deg) {
                int n = c.dims[static_cast<std::size_t>(deg)];
                if (n == 0) continue;
                Mat<Rational> p = Mat<Rational>::Identity(n, n);
                p(0, 0) = f;
                auto scaled = base_change(c, deg, p);
                CHECK(torsion(scaled).value == torsion(c).value * pow_sign(f, deg));
            }
        }
    }

    TEST_CASE("base change law: torsion scales by det(P)^{(-1)^i}") {
        Rng rng(321);
        auto genq = rational_gen();
        auto genp = fp_gen(101);
        std::uniform_int_distribution<int> beta_pick(0, 1), len_pick(1, 4);
        for (int iter = 0; iter < 10; ++iter) {
            int m = len_pick(rng);
            std::vector<int> betas(static_cast<std::size_t>(m) + 1);
            for (auto& b : betas) b = beta_pick(rng);

            auto cq = random_complex_with_homology(rng, betas, 2, genq);
            for (int deg = 0; deg <= m; ++deg) {
                int n = cq.dims[static_cast<std::size_t>(deg)];
                Mat<Rational> p = random_invertible(rng, n, genq);
                auto changed = base_change(cq, deg, p);
                Rational dp = det(p);
                CHECK(torsion(changed).value == torsion(cq).value * pow_sign(dp, deg));
            }

            auto cp = random_complex_with_homology(rng, betas, 2, genp);
            for (int deg = 0; deg <= m; ++deg) {
                int n = cp.dims[static_cast<std::size_t>(deg)];
                Mat<Fp> p = random_invertible(rng, n, genp);
                auto changed = base_change(cp, deg, p);
                Fp dp = det(p);
                CHECK(torsion(changed).value == torsion(cp).value * pow_sign(dp, deg));
            }
        }
    }

    TEST_CASE("base change rejects singular and misshapen matrices") {
        auto c = segment_complex(Rational(2));
        CHECK_THROWS_AS(base_change(c, 0, Mat<Rational>(Mat<Rational>::Zero(1, 1))), SingularMatrixError);
        CHECK_THROWS_AS(base_change(c, 5, Mat<Rational>(Mat<Rational>::Identity(1, 1))), ShapeError);
        CHECK_THROWS_AS(base_change(c, 0, Mat<Rational>(Mat<Rational>::Identity(2, 2))), ShapeError);
    }

    TEST_CASE("sign data: acyclic complexes have eta = 0 and alternating-sum consistency") {
        Rng rng(31);
        auto gen = fp_gen(101);
        for (int iter = 0; iter < 20; ++iter) {
            auto c = random_acyclic_complex(rng, 4, 2, gen);
            auto s = sign_data(c);
            CHECK(s.eta == 0);
            for (long b : s.beta) CHECK(b == 0);
            CHECK(sign_refined_torsion(c).value == torsion(c).value);
        }
        // Non-acyclic: alpha_m and beta_m agree up to sign with the Euler
        // characteristic, so they coincide.
        std::uniform_int_distribution<int> beta_pick(0, 2);
        for (int iter = 0; iter < 20; ++iter) {
            std::vector<int> betas{beta_pick(rng), beta_pick(rng), beta_pick(rng)};
            auto c = random_complex_with_homology(rng, betas, 2, gen);
            auto s = sign_data(c);
            CHECK(s.alpha.back() == s.beta.back());
        }
    }

    TEST_CASE("sign-refined torsion flips with eta parity") {
        // A complex with known eta: dims {1, 1}, zero boundary, H_0 = H_1 = F.
        BasedChainComplex<Rational> c;
        c.dims = {1, 1};
        c.boundaries = {Mat<Rational>::Zero(1, 1)};
        std::vector<Mat<Rational>> hs(2);
        hs[0] = Mat<Rational>(1, 1);
        hs[0](0, 0) = Rational(1);
        hs[1] = Mat<Rational>(1, 1);
        hs[1](0, 0) = Rational(1);
        c.homology_bases = hs;
        // alpha = (1, 0), beta = (1, 0) => eta = 1: refined torsion differs
        // from plain torsion by a sign.
        auto s = sign_data(c);
        CHECK(s.eta == 1);
        CHECK(sign_refined_torsion(c).value == -torsion(c).value);
    }
}
