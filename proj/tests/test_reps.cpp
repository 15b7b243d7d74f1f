#include "doctest.h"

#include <random>

#include "talex/representation.hpp"
#include "talex/sl2_enumerate.hpp"
#include "test_support.hpp"

using namespace talex;

namespace {

Mat<Fp> fmat2(std::int64_t p, long a, long b, long c, long d) {
    Mat<Fp> m(2, 2);
    m(0, 0) = Fp::make(a, p);
    m(0, 1) = Fp::make(b, p);
    m(1, 0) = Fp::make(c, p);
    m(1, 1) = Fp::make(d, p);
    return m;
}

Mat<Rational> qmat2(Rational a, Rational b, Rational c, Rational d) {
    Mat<Rational> m(2, 2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
}

// Parabolic trefoil pair over Q: a -> [[1,1],[0,1]], b -> [[1,0],[-1,1]].
Representation<Rational> parabolic_trefoil() {
    Representation<Rational> r;
    r.dim = 2;
    r.field = {FieldKind::rationals, 0};
    r.images = {qmat2(Rational(1), Rational(1), Rational(0), Rational(1)),
                qmat2(Rational(1), Rational(0), Rational(-1), Rational(1))};
    return r;
}

Representation<Fp> sample_rep(std::int64_t p, std::array<long, 4> a, std::array<long, 4> b) {
    Representation<Fp> r;
    r.dim = 2;
    r.field = {FieldKind::prime_field, static_cast<long>(p)};
    r.images = {fmat2(p, a[0], a[1], a[2], a[3]), fmat2(p, b[0], b[1], b[2], b[3])};
    return r;
}

template <class K>
Representation<K> one_dim(const InvolutiveField& f, std::vector<K> values) {
    Representation<K> r;
    r.dim = 1;
    r.field = f;
    for (const K& v : values) {
        Mat<K> m(1, 1);
        m(0, 0) = v;
        r.images.push_back(m);
    }
    return r;
}

template <class K>
void check_witness(const Representation<K>& a, const Mat<K>& p) {
    REQUIRE(!is_zero(det(p)));
    Representation<K> d = dual_representation(a);
    for (std::size_t g = 0; g < a.images.size(); ++g)
        CHECK(matrices_equal(Mat<K>(p * a.images[g]), Mat<K>(d.images[g] * p)));
}

Mat<Fp> random_sl2(testsupport::Rng& rng, std::int64_t p) {
    std::uniform_int_distribution<long> d(0, p - 1);
    for (;;) {
        long a = d(rng), b = d(rng), c = d(rng), e = d(rng);
        if (((a * e - b * c) % p + p) % p == 1) return fmat2(p, a, b, c, e);
    }
}

// --- Independent irreducibility oracle over F_25 = F_5(w), w^2 = 2 ------
// A pair of 2x2 matrices over F_5 is absolutely reducible exactly when
// all images share an eigenline over the quadratic extension, so we just
// enumerate the 26 projective lines of F_25^2.
struct G25 {
    long x = 0, y = 0;
};
G25 g25(long x, long y) { return {((x % 5) + 5) % 5, ((y % 5) + 5) % 5}; }
G25 add25(G25 a, G25 b) { return g25(a.x + b.x, a.y + b.y); }
G25 sub25(G25 a, G25 b) { return g25(a.x - b.x, a.y - b.y); }
G25 mul25(G25 a, G25 b) { return g25(a.x * b.x + 2 * a.y * b.y, a.x * b.y + a.y * b.x); }
bool zero25(G25 a) { return a.x == 0 && a.y == 0; }

bool eigenline_irreducible(const std::vector<std::array<long, 4>>& mats) {
    std::vector<std::array<G25, 2>> lines;
    for (long x = 0; x < 5; ++x)
        for (long y = 0; y < 5; ++y) lines.push_back({g25(1, 0), g25(x, y)});
    lines.push_back({g25(0, 0), g25(1, 0)});
    for (const auto& v : lines) {
        bool common = true;
        for (const auto& m : mats) {
            G25 w0 = add25(mul25(g25(m[0], 0), v[0]), mul25(g25(m[1], 0), v[1]));
            G25 w1 = add25(mul25(g25(m[2], 0), v[0]), mul25(g25(m[3], 0), v[1]));
            if (!zero25(sub25(mul25(w0, v[1]), mul25(w1, v[0])))) {
                common = false;
                break;
            }
        }
        if (common) return false; // shared eigenline => reducible
    }
    return true;
}

} // namespace

TEST_SUITE("reps") {

    TEST_CASE("validation accepts the parabolic trefoil pair and names violated relators") {
        GroupPresentation trefoil = knot_table("trefoil");
        Representation<Rational> good = parabolic_trefoil();
        CHECK_NOTHROW(good.validate(trefoil));

        Representation<Rational> bad = good;
        bad.images[1] = qmat2(Rational(1), Rational(0), Rational(0), Rational(1));
        bool named = false;
        try {
            bad.validate(trefoil);
        } catch (const HypothesisError& e) {
            named = std::string(e.what()).find("abaBAB") != std::string::npos;
        }
        CHECK(named);

        Representation<Rational> singular = good;
        singular.images[0](0, 0) = Rational(0);
        singular.images[0](1, 0) = Rational(0);
        CHECK_THROWS_AS(singular.validate(trefoil), SingularMatrixError);

        Representation<Rational> short_list = good;
        short_list.images.pop_back();
        CHECK_THROWS_AS(short_list.validate(trefoil), ShapeError);

        Representation<Rational> bad_dim = good;
        bad_dim.dim = 3;
        CHECK_THROWS_AS(bad_dim.validate(trefoil), ShapeError);
    }

    TEST_CASE("dual representation matches the explicit formulas and is an involution") {
        // 1-dim over Q: (u) -> (1/u).
        auto u2 = one_dim<Rational>({FieldKind::rationals, 0}, {Rational(2)});
        auto du2 = dual_representation(u2);
        CHECK(du2.images[0](0, 0) == Rational(1, 2));
        CHECK(matrices_equal(dual_representation(du2).images[0], u2.images[0]));

        // Over Q(i) the involution conjugates: (1+2i) -> (1+2i)/5.
        GaussianRational u(Rational(1), Rational(2));
        auto gu = one_dim<GaussianRational>({FieldKind::gaussian_rationals, 0}, {u});
        auto dgu = dual_representation(gu);
        CHECK(dgu.images[0](0, 0) == GaussianRational(Rational(1, 5), Rational(2, 5)));
        CHECK(matrices_equal(dual_representation(dgu).images[0], gu.images[0]));

        // For det-1 matrices, conjugation by J = [[0,1],[-1,0]] gives the dual.
        testsupport::Rng rng(2024);
        Mat<Fp> j = fmat2(7, 0, 1, 6, 0);
        Mat<Fp> jinv = fmat2(7, 0, 6, 1, 0);
        for (int i = 0; i < 50; ++i) {
            Mat<Fp> a = random_sl2(rng, 7);
            Mat<Fp> dual = conj_transpose(inverse_field(a));
            CHECK(matrices_equal(Mat<Fp>(j * a * jinv), dual));
        }

        // Involution on a 2-dim rational representation.
        auto tref = parabolic_trefoil();
        auto dd = dual_representation(dual_representation(tref));
        CHECK(matrices_equal(dd.images[0], tref.images[0]));
        CHECK(matrices_equal(dd.images[1], tref.images[1]));
    }

    TEST_CASE("conjugation-to-dual search certifies witnesses and absences") {
        // Trivial 1-dim representation: witness found (any nonzero scalar).
        auto triv = one_dim<Rational>({FieldKind::rationals, 0}, {Rational(1)});
        auto rt = find_conjugation_to_dual(triv);
        REQUIRE(rt.witness.has_value());
        check_witness(triv, rt.witness->P);
        CHECK(!rt.probabilistic_absence);

        // a -> (2) over Q: the intertwiner space is {0}; certified absent.
        auto u2 = one_dim<Rational>({FieldKind::rationals, 0}, {Rational(2)});
        auto r2 = find_conjugation_to_dual(u2);
        CHECK(!r2.witness.has_value());
        CHECK(!r2.probabilistic_absence);

        // Same over F_5: certified absent by exhaustion.
        auto f2 = one_dim<Fp>({FieldKind::prime_field, 5}, {Fp::make(2, 5)});
        auto rf = find_conjugation_to_dual(f2);
        CHECK(!rf.witness.has_value());
        CHECK(!rf.probabilistic_absence);

        // SL(2) representations always admit a witness (J works).
        auto tref = parabolic_trefoil();
        auto rp = find_conjugation_to_dual(tref);
        REQUIRE(rp.witness.has_value());
        check_witness(tref, rp.witness->P);

        auto tf5 = sample_rep(5, {0, 1, 4, 0}, {2, 0, 1, 3});
        auto rf5 = find_conjugation_to_dual(tf5);
        REQUIRE(rf5.witness.has_value());
        check_witness(tf5, rf5.witness->P);

        // diag(2, 1/2): self-dual via the antidiagonal swap; both kernel
        // basis vectors are singular so the combination search must fire.
        Representation<Rational> sw;
        sw.dim = 2;
        sw.field = {FieldKind::rationals, 0};
        sw.images = {qmat2(Rational(2), Rational(0), Rational(0), Rational(1, 2))};
        auto rsw = find_conjugation_to_dual(sw);
        REQUIRE(rsw.witness.has_value());
        check_witness(sw, rsw.witness->P);

        // a -> [[1,1],[0,2]] over Q: alpha and its dual share only the
        // eigenvalue 1, so every intertwiner has rank <= 1.  The sampled
        // search cannot certify absence over an infinite field.
        Representation<Rational> rk1;
        rk1.dim = 2;
        rk1.field = {FieldKind::rationals, 0};
        rk1.images = {qmat2(Rational(1), Rational(1), Rational(0), Rational(2))};
        auto rr = find_conjugation_to_dual(rk1);
        CHECK(!rr.witness.has_value());
        CHECK(rr.probabilistic_absence);
    }

    TEST_CASE("tensor with the abelianization obeys the determinant identity") {
        using L = Laurent<Rational>;
        GroupPresentation trefoil = knot_table("trefoil");
        AbelianizationMap phi = abelianization(trefoil);

        // Trivial 1-dim alpha on a knot group: a -> (t).
        auto triv = one_dim<Rational>({FieldKind::rationals, 0}, {Rational(1), Rational(1)});
        auto tens = tensor_with_phi(triv, phi);
        CHECK(tens.images[0](0, 0) == L::monomial(Rational(1), {1}));
        CHECK(tens.images[1](0, 0) == L::monomial(Rational(1), {1}));
        CHECK_NOTHROW(tens.validate(2));

        auto det2 = [](const Mat<L>& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); };

        // Parabolic trefoil: det alpha = 1, so det((alpha x phi)(x_j)) = t^2.
        auto tref = parabolic_trefoil();
        auto tt = tensor_with_phi(tref, phi);
        CHECK_NOTHROW(tt.validate(2));
        for (int g = 0; g < 2; ++g) {
            ExpVec e{detail::checked_exp(2 * phi.images(0, g))};
            CHECK(det2(tt.images[static_cast<std::size_t>(g)]) == L::monomial(Rational(1), e));
        }

        // General identity det = phi(g)^d det(alpha(g)) with det != 1.
        Representation<Rational> mixed;
        mixed.dim = 2;
        mixed.field = {FieldKind::rationals, 0};
        mixed.images = {qmat2(Rational(2), Rational(1), Rational(0), Rational(3)),
                        qmat2(Rational(2), Rational(1), Rational(0), Rational(3))};
        auto mt = tensor_with_phi(mixed, phi);
        for (int g = 0; g < 2; ++g) {
            L expected = L(det(mixed.images[static_cast<std::size_t>(g)])) *
                         L::monomial(Rational(1), {detail::checked_exp(2 * phi.images(0, g))});
            CHECK(det2(mt.images[static_cast<std::size_t>(g)]) == expected);
        }

        // Multivariable case: hopf link, trivial alpha -> a -> (t1), b -> (t2).
        GroupPresentation hopf = knot_table("hopf");
        AbelianizationMap hphi = abelianization(hopf);
        auto htriv = one_dim<Rational>({FieldKind::rationals, 0}, {Rational(1), Rational(1)});
        auto ht = tensor_with_phi(htriv, hphi);
        CHECK(ht.images[0](0, 0) == L::monomial(Rational(1), {1, 0}));
        CHECK(ht.images[1](0, 0) == L::monomial(Rational(1), {0, 1}));

        // Prime-field coefficients through the same identity.
        using LF = Laurent<Fp>;
        auto fig8 = knot_table("figure8");
        auto fphi = abelianization(fig8);
        auto f5 = sample_rep(5, {0, 1, 4, 1}, {0, 2, 2, 1});
        auto ft = tensor_with_phi(f5, fphi);
        CHECK_NOTHROW(ft.validate(2));
        auto fdet2 = [](const Mat<LF>& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); };
        for (int g = 0; g < 2; ++g) {
            LF expected = LF(det(f5.images[static_cast<std::size_t>(g)])) *
                          LF::monomial(Fp::make(1, 5), {detail::checked_exp(2 * fphi.images(0, g))});
            CHECK(fdet2(ft.images[static_cast<std::size_t>(g)]) == expected);
        }

        // Generator count mismatch is rejected.
        auto lone = one_dim<Rational>({FieldKind::rationals, 0}, {Rational(1)});
        CHECK_THROWS_AS(tensor_with_phi(lone, phi), ShapeError);
    }

    TEST_CASE("symmetric powers act on the monomial basis") {
        // sym^2 diag(3, 1/3) = diag(9, 1, 1/9).
        Representation<Rational> dia;
        dia.dim = 2;
        dia.field = {FieldKind::rationals, 0};
        dia.images = {qmat2(Rational(3), Rational(0), Rational(0), Rational(1, 3))};
        auto s2 = sym_power(dia, 2);
        REQUIRE(s2.dim == 3);
        Mat<Rational> expect = Mat<Rational>::Zero(3, 3);
        expect(0, 0) = Rational(9);
        expect(1, 1) = Rational(1);
        expect(2, 2) = Rational(1, 9);
        CHECK(matrices_equal(s2.images[0], expect));

        // k = 1 is the identity operation; dimensions follow binomial(n+k-1, k).
        auto tref = parabolic_trefoil();
        auto s1 = sym_power(tref, 1);
        CHECK(matrices_equal(s1.images[0], tref.images[0]));
        CHECK(matrices_equal(s1.images[1], tref.images[1]));
        for (int k = 1; k <= 4; ++k) CHECK(sym_power(tref, k).dim == k + 1);
        CHECK(sym_power(sym_power(tref, 2), 2).dim == 6); // n=3, k=2

        // Functoriality on random SL(2, F_7) pairs for k = 2, 3.
        testsupport::Rng rng(77);
        for (int i = 0; i < 30; ++i) {
            Representation<Fp> pair;
            pair.dim = 2;
            pair.field = {FieldKind::prime_field, 7};
            pair.images = {random_sl2(rng, 7), random_sl2(rng, 7)};
            Representation<Fp> prod = pair;
            prod.images = {Mat<Fp>(pair.images[0] * pair.images[1])};
            for (int k = 2; k <= 3; ++k) {
                auto sp = sym_power(pair, k);
                auto spp = sym_power(prod, k);
                CHECK(matrices_equal(Mat<Fp>(sp.images[0] * sp.images[1]), spp.images[0]));
            }
        }

        // sym^2 of a valid representation stays valid, and over a
        // characteristic-0 field it is conjugate to its dual.
        GroupPresentation trefoil = knot_table("trefoil");
        auto st = sym_power(tref, 2);
        CHECK_NOTHROW(st.validate(trefoil));
        auto w = find_conjugation_to_dual(st);
        REQUIRE(w.witness.has_value());
        check_witness(st, w.witness->P);

        CHECK_THROWS_AS(sym_power(tref, 0), InputError);
    }

    TEST_CASE("irreducibility by the generated matrix algebra, against an eigenline oracle") {
        // Any 1-dim representation is irreducible.
        auto u2 = one_dim<Rational>({FieldKind::rationals, 0}, {Rational(2)});
        CHECK(is_irreducible(u2));

        // A shared upper-triangular shape fixes the line e1.
        auto upper = sample_rep(5, {1, 1, 0, 1}, {2, 3, 0, 3});
        CHECK(!is_irreducible(upper));

        // The parabolic trefoil pair has no common eigenline anywhere.
        auto tref = parabolic_trefoil();
        CHECK(is_irreducible(tref));
        // ... and its symmetric square is an irreducible 3-dim representation.
        CHECK(is_irreducible(sym_power(tref, 2)));

        // Block sum with a trivial line is reducible in dimension 3.
        Representation<Fp> block;
        block.dim = 3;
        block.field = {FieldKind::prime_field, 5};
        Mat<Fp> b0 = Mat<Fp>::Zero(3, 3), b1 = Mat<Fp>::Zero(3, 3);
        b0(0, 0) = Fp::make(1, 5);
        b1(0, 0) = Fp::make(1, 5);
        auto i0 = fmat2(5, 0, 1, 4, 0), i1 = fmat2(5, 2, 0, 1, 3);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) {
                b0(r + 1, c + 1) = i0(r, c);
                b1(r + 1, c + 1) = i1(r, c);
            }
        block.images = {b0, b1};
        CHECK(!is_irreducible(block));

        Representation<Rational> big;
        big.dim = 4;
        big.field = {FieldKind::rationals, 0};
        big.images = {Mat<Rational>(Mat<Rational>::Identity(4, 4))};
        CHECK_THROWS_AS(is_irreducible(big), InputError);

        // Cross-check against the F_25 eigenline search on random pairs.
        testsupport::Rng rng(525);
        std::uniform_int_distribution<long> d(0, 4);
        int agree = 0;
        for (int i = 0; i < 150; ++i) {
            std::array<long, 4> a, b;
            Mat<Fp> ma = random_sl2(rng, 5), mb = random_sl2(rng, 5);
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c) {
                    a[static_cast<std::size_t>(2 * r + c)] = ma(r, c).value();
                    b[static_cast<std::size_t>(2 * r + c)] = mb(r, c).value();
                }
            Representation<Fp> rep;
            rep.dim = 2;
            rep.field = {FieldKind::prime_field, 5};
            rep.images = {ma, mb};
            bool burnside = is_irreducible(rep);
            bool oracle = eigenline_irreducible({a, b});
            CHECK(burnside == oracle);
            if (burnside == oracle) ++agree;
        }
        CHECK(agree == 150);
    }

    TEST_CASE("kernel nontriviality: certificates, conclusive trivialities, inconclusive flag") {
        GroupPresentation trefoil = knot_table("trefoil");
        AbelianizationMap phi = abelianization(trefoil);

        // Parabolic trefoil: a b^{-1} lies in ker(phi) and acts nontrivially.
        auto tref = parabolic_trefoil();
        auto kc = nontrivial_on_kernel(tref, phi, trefoil);
        CHECK(kc.nontrivial);
        CHECK(!kc.inconclusive);

        // Trivial alpha: conclusively trivial on the kernel.
        auto triv = one_dim<Rational>({FieldKind::rationals, 0}, {Rational(1), Rational(1)});
        auto kt = nontrivial_on_kernel(triv, phi, trefoil);
        CHECK(!kt.nontrivial);
        CHECK(!kt.inconclusive);

        // Abelian-image representation factoring through phi: both
        // meridians share one matrix, so ker(phi) dies by construction.
        Representation<Rational> fact;
        fact.dim = 2;
        fact.field = {FieldKind::rationals, 0};
        fact.images = {qmat2(Rational(2), Rational(0), Rational(0), Rational(3)),
                       qmat2(Rational(2), Rational(0), Rational(0), Rational(3))};
        CHECK_NOTHROW(fact.validate(trefoil));
        auto kf = nontrivial_on_kernel(fact, phi, trefoil);
        CHECK(!kf.nontrivial);
        CHECK(!kf.inconclusive);

        // Free 2-generator group, noncommuting images: the commutator
        // [a,b] has zero phi-image and acts nontrivially.
        GroupPresentation free2;
        free2.generators = 2;
        AbelianizationMap fphi = abelianization(free2);
        auto pair = sample_rep(5, {1, 1, 0, 1}, {1, 0, 1, 1});
        auto kp = nontrivial_on_kernel(pair, fphi, free2);
        CHECK(kp.nontrivial);
        CHECK(!kp.inconclusive);

        // Hopf link with commuting diagonal images: H_1 is torsion-free,
        // so commuting images are conclusively trivial on the kernel.
        GroupPresentation hopf = knot_table("hopf");
        AbelianizationMap hphi = abelianization(hopf);
        Representation<Rational> diag;
        diag.dim = 2;
        diag.field = {FieldKind::rationals, 0};
        diag.images = {qmat2(Rational(2), Rational(0), Rational(0), Rational(1)),
                       qmat2(Rational(1), Rational(0), Rational(0), Rational(3))};
        CHECK_NOTHROW(diag.validate(hopf));
        auto kh = nontrivial_on_kernel(diag, hphi, hopf);
        CHECK(!kh.nontrivial);
        CHECK(!kh.inconclusive);

        // <a, b | a^2>: H_1 has 2-torsion and phi kills a.  With
        // alpha(a) = I every bounded certificate vanishes, but no
        // structural argument applies: inconclusive.
        GroupPresentation tor;
        tor.generators = 2;
        tor.relators = {Word::parse("aa", 2)};
        AbelianizationMap tphi = abelianization(tor);
        Representation<Rational> torrep;
        torrep.dim = 2;
        torrep.field = {FieldKind::rationals, 0};
        torrep.images = {qmat2(Rational(1), Rational(0), Rational(0), Rational(1)),
                         qmat2(Rational(1), Rational(1), Rational(0), Rational(1))};
        CHECK_NOTHROW(torrep.validate(tor));
        auto kq = nontrivial_on_kernel(torrep, tphi, tor);
        CHECK(!kq.nontrivial);
        CHECK(kq.inconclusive);

        // ... while a visible certificate through the torsion generator
        // is still found by the bounded search.
        Representation<Rational> torvis;
        torvis.dim = 2;
        torvis.field = {FieldKind::rationals, 0};
        torvis.images = {qmat2(Rational(1), Rational(0), Rational(0), Rational(-1)),
                         qmat2(Rational(1), Rational(1), Rational(0), Rational(1))};
        CHECK_NOTHROW(torvis.validate(tor));
        auto kv = nontrivial_on_kernel(torvis, tphi, tor);
        CHECK(kv.nontrivial);
        CHECK(!kv.inconclusive);

        auto wrong = one_dim<Rational>({FieldKind::rationals, 0}, {Rational(1)});
        CHECK_THROWS_AS(nontrivial_on_kernel(wrong, phi, trefoil), ShapeError);
    }

    TEST_CASE("determinant subgroup data") {
        // SL(2) representation: determinant subgroup is {1}.
        auto tf5 = sample_rep(5, {0, 1, 4, 0}, {2, 0, 1, 3});
        auto ds = det_subgroup(tf5);
        REQUIRE(ds.generators.size() == 2);
        CHECK(ds.generators[0] == Fp::make(1, 5));
        CHECK(ds.generators[1] == Fp::make(1, 5));
        REQUIRE(ds.elements.size() == 1);
        CHECK(ds.elements[0] == Fp::make(1, 5));

        // 2 generates all of F_5^x.
        auto f2 = one_dim<Fp>({FieldKind::prime_field, 5}, {Fp::make(2, 5)});
        auto d2 = det_subgroup(f2);
        CHECK(d2.elements.size() == 4);

        // 4 generates the index-2 subgroup {1, 4}.
        auto f4 = one_dim<Fp>({FieldKind::prime_field, 5}, {Fp::make(4, 5)});
        CHECK(det_subgroup(f4).elements.size() == 2);

        // Infinite fields record the generators but no closure.
        auto q2 = one_dim<Rational>({FieldKind::rationals, 0}, {Rational(2)});
        auto dq = det_subgroup(q2);
        REQUIRE(dq.generators.size() == 1);
        CHECK(dq.generators[0] == Rational(2));
        CHECK(dq.elements.empty());
    }

    TEST_CASE("SL(2, F_p) enumeration matches independently frozen counts") {
        GroupPresentation trefoil = knot_table("trefoil");

        auto t5 = enumerate_sl2_reps(trefoil, 5);
        CHECK(t5.size() == 720);
        int irr = 0;
        bool sample_found = false;
        Mat<Fp> sa = fmat2(5, 0, 1, 4, 0), sb = fmat2(5, 2, 0, 1, 3);
        for (const auto& r : t5) {
            if (r.irreducible) ++irr;
            // Defining filter: a b a = b a b.
            const Mat<Fp>&a = r.rep.images[0], &b = r.rep.images[1];
            CHECK(matrices_equal(Mat<Fp>(a * b * a), Mat<Fp>(b * a * b)));
            if (matrices_equal(a, sa) && matrices_equal(b, sb)) {
                sample_found = true;
                CHECK(r.irreducible);
            }
        }
        CHECK(irr == 600);
        CHECK(sample_found);
        for (const auto& r : t5) CHECK_NOTHROW(r.rep.validate(trefoil));

        auto f5 = enumerate_sl2_reps(knot_table("figure8"), 5);
        CHECK(f5.size() == 600);
        irr = 0;
        for (const auto& r : f5)
            if (r.irreducible) ++irr;
        CHECK(irr == 240);

        auto k52 = enumerate_sl2_reps(knot_table("5_2"), 5);
        CHECK(k52.size() == 360);
        irr = 0;
        for (const auto& r : k52)
            if (r.irreducible) ++irr;
        CHECK(irr == 240);

        CHECK(enumerate_sl2_reps(trefoil, 3).size() == 72);
        auto t7 = enumerate_sl2_reps(trefoil, 7);
        CHECK(t7.size() == 2688);
        for (std::size_t i = 0; i < t7.size(); i += 100)
            CHECK_NOTHROW(t7[i].rep.validate(trefoil));

        CHECK_THROWS_AS(enumerate_sl2_reps(trefoil, 11), InputError);
        CHECK_THROWS_AS(enumerate_sl2_reps(knot_table("unknot"), 5), InputError);
    }
}
