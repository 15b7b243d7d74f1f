#include "doctest.h"

#include "talex/invariants.hpp"
#include "talex/sl2_enumerate.hpp"
#include "fixtures.hpp"
#include "test_support.hpp"

using namespace talex;

namespace {

const InvolutiveField QF{FieldKind::rationals, 0};
const InvolutiveField F5{FieldKind::prime_field, 5};

using LQ = Laurent<Rational>;
using RQ = RationalFunc<Rational>;
using LF = Laurent<Fp>;

// Equality up to a full monomial unit c * t^e: the precision at which a
// ratio of two individually normalized orders is defined.
template <class K>
bool mono_equal(const RationalFunc<K>& a, const RationalFunc<K>& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
    return is_monomial_unit(a / b).has_value();
}

template <class K>
Laurent<K> canon(const Laurent<K>& p) {
    return unit_normalize(p).canonical;
}

} // namespace

TEST_SUITE("orders") {

    TEST_CASE("Alexander orders of the table knots with trivial coefficients") {
        auto check = [](const char* name, const char* delta1) {
            GroupPresentation p = knot_table(name);
            auto triv = testsupport::trivial_rep<Rational>(QF, p.generators);
            AbelianizationMap phi = abelianization(p);
            auto d1 = alexander_order(p, triv, phi, 1);
            auto d0 = alexander_order(p, triv, phi, 0);
            CHECK(d1.polynomial == canon(LQ::parse(delta1, QF)));
            CHECK(d0.polynomial == canon(LQ::parse("t+-1", QF)));
            CHECK(d1.index == 1);
            CHECK(d0.index == 0);
        };
        check("trefoil", "t^2+-t+1");
        check("figure8", "t^2+-3*t+1");
        check("5_2", "2*t^2+-3*t+2");

        // Unknot: H_1 of the universal abelian cover is trivial, so the
        // first order is the empty product 1.
        GroupPresentation unknot = knot_table("unknot");
        auto utriv = testsupport::trivial_rep<Rational>(QF, 1);
        AbelianizationMap uphi = abelianization(unknot);
        CHECK(alexander_order(unknot, utriv, uphi, 1).polynomial == LQ(Rational(1)));
        CHECK(alexander_order(unknot, utriv, uphi, 0).polynomial == canon(LQ::parse("t+-1", QF)));

        // Orders need a rank-1 abelianization and an index in {0, 1}.
        GroupPresentation hopf = knot_table("hopf");
        auto two = testsupport::trivial_rep<Rational>(QF, 2);
        CHECK_THROWS_AS(alexander_order(hopf, two, abelianization(hopf), 0), HypothesisError);
        GroupPresentation trefoil = knot_table("trefoil");
        CHECK_THROWS_AS(alexander_order(trefoil, two, abelianization(trefoil), 2), InputError);
    }

    TEST_CASE("zeroth order is trivial for the irreducible corpus samples") {
        GroupPresentation trefoil = knot_table("trefoil");
        GroupPresentation fig8 = knot_table("figure8");
        GroupPresentation k52 = knot_table("5_2");

        auto t5 = testsupport::sl2_sample_rep(5, {0, 1, 4, 0}, {2, 0, 1, 3});
        auto f5 = testsupport::sl2_sample_rep(5, {0, 1, 4, 1}, {0, 2, 2, 1});
        auto s5 = testsupport::sl2_sample_rep(5, {0, 1, 4, 2}, {1, 0, 1, 1});
        LF one(Fp::make(1, 5));
        CHECK(alexander_order(trefoil, t5, abelianization(trefoil), 0).polynomial == one);
        CHECK(alexander_order(fig8, f5, abelianization(fig8), 0).polynomial == one);
        CHECK(alexander_order(k52, s5, abelianization(k52), 0).polynomial == one);

        // First orders recover the frozen Wada numerators exactly.
        CHECK(alexander_order(trefoil, t5, abelianization(trefoil), 1).polynomial ==
              canon(LF::parse("t^2+1", F5)));
        CHECK(alexander_order(fig8, f5, abelianization(fig8), 1).polynomial ==
              canon(LF::parse("t^2+3*t+1", F5)));
        // 5_2 sample: tau is a monomial, so H_1 vanishes and the order is 1.
        CHECK(alexander_order(k52, s5, abelianization(k52), 1).polynomial == LF(Fp::make(1, 5)));

        // The parabolic pair and its symmetric square over Q.
        auto par = testsupport::parabolic_trefoil_rep();
        AbelianizationMap phi = abelianization(trefoil);
        CHECK(alexander_order(trefoil, par, phi, 0).polynomial == LQ(Rational(1)));
        CHECK(alexander_order(trefoil, par, phi, 1).polynomial == canon(LQ::parse("t^2+1", QF)));
        auto sq = sym_power(par, 2);
        CHECK(alexander_order(trefoil, sq, phi, 0).polynomial == LQ(Rational(1)));
        CHECK(alexander_order(trefoil, sq, phi, 1).polynomial == canon(LQ::parse("1+-t^3", QF)));
    }

    TEST_CASE("torsion equals the ratio of orders up to a monomial unit") {
        auto triangle = [](const GroupPresentation& p, const auto& alpha) {
            AbelianizationMap phi = abelianization(p);
            auto inv = wada_invariant(p, alpha, phi);
            REQUIRE(inv.acyclic);
            auto ratio = torsion_via_orders(p, alpha, phi);
            CHECK(mono_equal(ratio, inv.representative));
        };
        GroupPresentation trefoil = knot_table("trefoil");
        GroupPresentation fig8 = knot_table("figure8");
        GroupPresentation k52 = knot_table("5_2");
        auto triv = testsupport::trivial_rep<Rational>(QF, 2);
        triangle(trefoil, triv);
        triangle(fig8, triv);
        triangle(k52, triv);
        triangle(knot_table("unknot"), testsupport::trivial_rep<Rational>(QF, 1));
        triangle(trefoil, testsupport::sl2_sample_rep(5, {0, 1, 4, 0}, {2, 0, 1, 3}));
        triangle(fig8, testsupport::sl2_sample_rep(5, {0, 1, 4, 1}, {0, 2, 2, 1}));
        triangle(k52, testsupport::sl2_sample_rep(5, {0, 1, 4, 2}, {1, 0, 1, 1}));
        auto par = testsupport::parabolic_trefoil_rep();
        triangle(trefoil, par);
        triangle(trefoil, sym_power(par, 2));
    }

    TEST_CASE("order/torsion consistency across an enumerated slice") {
        GroupPresentation trefoil = knot_table("trefoil");
        AbelianizationMap phi = abelianization(trefoil);
        auto reps = enumerate_sl2_reps(trefoil, 5);
        REQUIRE(reps.size() == 720);

        REQUIRE(trefoil.thurston_norm.has_value());
        int acyclic_seen = 0;
        for (std::size_t i = 0; i < reps.size(); i += 18) {
            const auto& alpha = reps[i].rep;
            auto inv = wada_invariant(trefoil, alpha, phi);
            auto d0 = alexander_order(trefoil, alpha, phi, 0);
            auto d1 = alexander_order(trefoil, alpha, phi, 1);
            if (d0.polynomial.is_zero()) {
                // H_0 has positive rank: the complex cannot be acyclic.
                CHECK(!inv.acyclic);
                CHECK_THROWS_AS(torsion_via_orders(trefoil, alpha, phi), HypothesisError);
                continue;
            }
            auto ratio = torsion_via_orders(trefoil, alpha, phi);
            // Acyclic exactly when both orders are nonzero.
            CHECK(inv.acyclic == !d1.polynomial.is_zero());
            CHECK(mono_equal(ratio, inv.representative));
            if (inv.acyclic) {
                CHECK(degree_parity_check(inv, 2, *trefoil.thurston_norm));
                ++acyclic_seen;
            }
        }
        CHECK(acyclic_seen > 0);
    }

    TEST_CASE("closed-manifold variant divides by the dual zeroth order") {
        GroupPresentation trefoil = knot_table("trefoil");
        AbelianizationMap phi = abelianization(trefoil);
        auto triv = testsupport::trivial_rep<Rational>(QF, 2);
        auto closed = torsion_via_orders(trefoil, triv, phi, true);
        RQ expected(LQ::parse("t^2+-t+1", QF),
                    LQ::parse("t+-1", QF) * LQ::parse("t+-1", QF));
        CHECK(mono_equal(closed, expected));
    }
}
