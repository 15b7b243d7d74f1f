#include "talex/acceptance.hpp"

#include <chrono>
#include <sstream>

#include "talex/invariants.hpp"
#include "talex/random_complex.hpp"
#include "talex/sl2_enumerate.hpp"

namespace talex {

namespace {

using Clock = std::chrono::steady_clock;

long ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

using LQ = Laurent<Rational>;
using RQ = RationalFunc<Rational>;
using LF = Laurent<Fp>;
using RF = RationalFunc<Fp>;

const InvolutiveField kQ{FieldKind::rationals, 0};

// --- self-contained fixtures -----------------------------------------------

// Twisted cellular complex of the torus over Q(x, y):
// 0 -> F --[y-1; 1-x]--> F^2 --[1-x, 1-y]--> F -> 0.
BasedChainComplex<RQ> torus_complex() {
    LQ one(1), x = LQ::variable(1), y = LQ::variable(2);
    BasedChainComplex<RQ> c;
    c.dims = {1, 2, 1};
    Mat<RQ> d0(1, 2), d1(2, 1);
    d0(0, 0) = RQ(one - x);
    d0(0, 1) = RQ(one - y);
    d1(0, 0) = RQ(y - one);
    d1(1, 0) = RQ(one - x);
    c.boundaries = {d0, d1};
    return c;
}

// Parabolic pair a -> [[1,1],[0,1]], b -> [[1,0],[-1,1]] satisfying the
// trefoil relator over Q; irreducible.
Representation<Rational> parabolic_trefoil() {
    Representation<Rational> r;
    r.dim = 2;
    r.field = kQ;
    Mat<Rational> a(2, 2), b(2, 2);
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

template <class K>
Representation<K> trivial_rank_one(const InvolutiveField& f, int n) {
    Representation<K> r;
    r.dim = 1;
    r.field = f;
    for (int i = 0; i < n; ++i) r.images.push_back(Mat<K>(Mat<K>::Identity(1, 1)));
    return r;
}

CoeffGen<Fp> fp_gen(long p) {
    return [p](Rng& rng) {
        std::uniform_int_distribution<long> pick(0, p - 1);
        return Fp::make(pick(rng), p);
    };
}

CoeffGen<Rational> q_gen() {
    return [](Rng& rng) {
        std::uniform_int_distribution<long> num(-4, 4);
        std::uniform_int_distribution<long> den(1, 3);
        return Rational(num(rng)) / Rational(den(rng));
    };
}

std::string count_detail(int passed, int total, long ms) {
    std::ostringstream os;
    os << passed << "/" << total << " checks passed (" << ms << " ms)";
    return os.str();
}

// --- criteria ---------------------------------------------------------------

CriterionResult criterion_torus() {
    CriterionResult r{1, "torus-fixture-torsion", false, ""};
    auto t0 = Clock::now();
    auto v = torsion(torus_complex());
    r.pass = v.acyclic && v.value == RQ(LQ(-1));
    std::ostringstream os;
    os << "torsion of the torus complex over Q(x,y) is " << v.value.num().str() << "/"
       << v.value.den().str() << ", expected -1 (" << ms_since(t0) << " ms)";
    r.detail = os.str();
    return r;
}

template <class F>
int duality_round(Rng& rng, int count, const CoeffGen<F>& gen) {
    int ok = 0;
    std::uniform_int_distribution<int> len_pick(1, 5);
    std::uniform_int_distribution<int> beta_pick(0, 3); // 3 maps to beta 2
    for (int i = 0; i < count; ++i) {
        int m = len_pick(rng);
        std::vector<int> betas(static_cast<std::size_t>(m) + 1, 0);
        for (int& b : betas) {
            int raw = beta_pick(rng);
            b = raw <= 1 ? 0 : raw - 1; // half the degrees acyclic
        }
        auto c = random_complex_with_homology(rng, betas, 2, gen);
        if (check_duality_lemma(c)) ++ok;
    }
    return ok;
}

CriterionResult criterion_duality() {
    CriterionResult r{2, "duality-lemma-random-complexes", false, ""};
    auto t0 = Clock::now();
    Rng rng(20260101);
    int ok = duality_round<Fp>(rng, 100, fp_gen(101));
    ok += duality_round<Rational>(rng, 100, q_gen());
    r.pass = ok == 200;
    r.detail = count_detail(ok, 200, ms_since(t0)) + " [100 over F101, 100 over Q]";
    return r;
}

CriterionResult criterion_ses() {
    CriterionResult r{3, "ses-multiplicativity", false, ""};
    auto t0 = Clock::now();
    Rng rng(20260202);
    auto gen = fp_gen(7);
    std::uniform_int_distribution<int> len_pick(1, 3);
    std::uniform_int_distribution<int> beta_pick(0, 1);
    int ok = 0;
    for (int i = 0; i < 100; ++i) {
        int m = len_pick(rng);
        std::vector<int> bs(static_cast<std::size_t>(m) + 1, 0);
        std::vector<int> bq(static_cast<std::size_t>(m) + 1, 0);
        for (int& b : bs) b = beta_pick(rng);
        for (int& b : bq) b = beta_pick(rng);
        auto triple = random_ses(rng, bs, bq, 2, gen);
        if (ses_torsion_check(triple.sub, triple.total, triple.quot)) ++ok;
    }
    r.pass = ok == 100;
    r.detail = count_detail(ok, 100, ms_since(t0)) + " [random short exact sequences over F7]";
    return r;
}

template <class F>
int base_change_round(Rng& rng, int count, const CoeffGen<F>& gen) {
    int ok = 0;
    std::uniform_int_distribution<int> len_pick(2, 4);
    for (int i = 0; i < count; ++i) {
        BasedChainComplex<F> c;
        std::vector<int> swap_candidates;
        for (int tries = 0; tries < 50; ++tries) {
            c = random_acyclic_complex(rng, len_pick(rng), 2, gen);
            swap_candidates.clear();
            for (std::size_t d = 0; d < c.dims.size(); ++d)
                if (c.dims[d] >= 2) swap_candidates.push_back(static_cast<int>(d));
            if (!swap_candidates.empty()) break;
        }
        if (swap_candidates.empty()) continue;
        F tau = torsion(c).value;

        std::uniform_int_distribution<std::size_t> deg_pick(0, swap_candidates.size() - 1);
        int deg = swap_candidates[deg_pick(rng)];
        int n = c.dims[static_cast<std::size_t>(deg)];
        std::uniform_int_distribution<int> col_pick(0, n - 1);
        int a = col_pick(rng), b = col_pick(rng);
        if (a == b) b = (a + 1) % n;
        Mat<F> swap_p = Mat<F>::Identity(n, n);
        swap_p(a, a) = F(0);
        swap_p(b, b) = F(0);
        swap_p(a, b) = F(1);
        swap_p(b, a) = F(1);
        bool swap_ok = torsion(base_change(c, deg, swap_p)).value == -tau;

        F f = random_nonzero(rng, gen);
        Mat<F> scale_p = Mat<F>::Identity(n, n);
        scale_p(a, a) = f;
        F expected = deg % 2 == 0 ? tau * f : tau / f;
        bool scale_ok = torsion(base_change(c, deg, scale_p)).value == expected;

        if (swap_ok && scale_ok) ++ok;
    }
    return ok;
}

CriterionResult criterion_base_change() {
    CriterionResult r{4, "base-change-laws", false, ""};
    auto t0 = Clock::now();
    Rng rng(20260303);
    int ok = base_change_round<Fp>(rng, 50, fp_gen(7));
    ok += base_change_round<Rational>(rng, 50, q_gen());
    r.pass = ok == 100;
    r.detail = count_detail(ok, 100, ms_since(t0)) +
               " [swap negates torsion; scaling by f in degree i multiplies by f^((-1)^i)]";
    return r;
}

CriterionResult criterion_classical() {
    CriterionResult r{5, "classical-alexander-values", false, ""};
    auto t0 = Clock::now();
    int ok = 0;
    const struct {
        const char* knot;
        const char* delta1;
    } table[] = {{"trefoil", "t^2+-t+1"}, {"figure8", "t^2+-3t+1"}};
    for (const auto& row : table) {
        GroupPresentation p = knot_table(row.knot);
        auto triv = trivial_rank_one<Rational>(kQ, p.generators);
        AbelianizationMap phi = abelianization(p);
        auto d1 = alexander_order(p, triv, phi, 1);
        if (d1.polynomial == unit_normalize(LQ::parse(row.delta1, kQ)).canonical) ++ok;
    }
    {
        GroupPresentation p = knot_table("unknot");
        auto triv = trivial_rank_one<Rational>(kQ, p.generators);
        auto inv = wada_invariant(p, triv, abelianization(p));
        if (inv.acyclic && inv.representative == RQ(LQ(1), LQ::parse("t+-1", kQ))) ++ok;
    }
    r.pass = ok == 3;
    r.detail = count_detail(ok, 3, ms_since(t0)) +
               " [trefoil t^2-t+1, figure8 t^2-3t+1, unknot 1/(t-1)]";
    return r;
}

// One triangle instance: the engine invariant already cross-checks every
// column minor ratio internally; here we add the order-ratio leg.
template <class K>
bool triangle_holds(const GroupPresentation& p, const Representation<K>& alpha,
                    const AbelianizationMap& phi) {
    auto inv = wada_invariant(p, alpha, phi);
    auto d1 = alexander_order(p, alpha, phi, 1);
    if (inv.acyclic == d1.polynomial.is_zero()) return false;
    if (!inv.acyclic) return true; // zero invariant, zero order: consistent
    RationalFunc<K> ratio = torsion_via_orders(p, alpha, phi);
    return is_monomial_unit(ratio / inv.representative).has_value();
}

CriterionResult criterion_triangle() {
    CriterionResult r{6, "wada-torsion-orders-triangle", false, ""};
    auto t0 = Clock::now();
    int ok = 0, total = 0;
    for (const char* name : {"trefoil", "figure8"}) {
        GroupPresentation p = knot_table(name);
        AbelianizationMap phi = abelianization(p);
        for (const Sl2Rep& s : enumerate_sl2_reps(p, 5)) {
            ++total;
            if (triangle_holds(p, s.rep, phi)) ++ok;
        }
    }
    {
        GroupPresentation p = knot_table("trefoil");
        ++total;
        if (triangle_holds(p, parabolic_trefoil(), abelianization(p))) ++ok;
    }
    r.pass = ok == total;
    r.detail = count_detail(ok, total, ms_since(t0)) +
               " [all SL(2,F5) representations of trefoil and figure8 plus the trefoil SL(2,Q) "
               "representation; minor-ratio leg checked inside the invariant engine]";
    return r;
}

CriterionResult criterion_symmetry() {
    CriterionResult r{7, "symmetry-theorem-corpus", false, ""};
    auto t0 = Clock::now();
    int held = 0, checked = 0, zero_skips = 0, no_witness = 0;
    auto check_rep = [&](const GroupPresentation& p, const AbelianizationMap& phi,
                         const auto& alpha) {
        auto dual = find_conjugation_to_dual(alpha);
        if (!dual.witness) {
            ++no_witness;
            return;
        }
        auto inv = wada_invariant(p, alpha, phi);
        if (!inv.acyclic) {
            ++zero_skips;
            return;
        }
        ++checked;
        auto rep = symmetry_check(inv, alpha, phi, p.boundary_components.value_or(1), p.linking);
        if (rep.holds && !rep.inconclusive) ++held;
    };
    for (const char* name : {"trefoil", "figure8", "5_2"}) {
        GroupPresentation p = knot_table(name);
        AbelianizationMap phi = abelianization(p);
        for (const Sl2Rep& s : enumerate_sl2_reps(p, 5))
            if (s.irreducible) check_rep(p, phi, s.rep);
    }
    {
        GroupPresentation p = knot_table("trefoil");
        check_rep(p, abelianization(p), parabolic_trefoil());
    }
    r.pass = checked > 0 && held == checked;
    std::ostringstream os;
    os << held << "/" << checked
       << " irreducible conjugate-to-dual representations satisfy the symmetry unit equation (no "
          "inconclusive); "
       << no_witness << " without duality witness and " << zero_skips
       << " with zero invariant skipped (" << ms_since(t0) << " ms)";
    r.detail = os.str();
    return r;
}

CriterionResult criterion_parity() {
    CriterionResult r{8, "degree-parity", false, ""};
    auto t0 = Clock::now();
    int ok = 0, checked = 0;
    for (const char* name : {"trefoil", "figure8", "5_2"}) {
        GroupPresentation p = knot_table(name);
        AbelianizationMap phi = abelianization(p);
        long x = p.thurston_norm.value_or(1);
        for (const Sl2Rep& s : enumerate_sl2_reps(p, 5)) {
            auto inv = wada_invariant(p, s.rep, phi);
            if (!inv.acyclic) continue;
            ++checked;
            if (degree_parity_check(inv, 2, x) && degree_rational(inv.representative) % 2 == 0)
                ++ok;
        }
    }
    {
        GroupPresentation p = knot_table("trefoil");
        AbelianizationMap phi = abelianization(p);
        auto inv = wada_invariant(p, parabolic_trefoil(), phi);
        ++checked;
        if (inv.acyclic && degree_parity_check(inv, 2, p.thurston_norm.value_or(1)) &&
            degree_rational(inv.representative) % 2 == 0)
            ++ok;
        auto triv = wada_invariant(p, trivial_rank_one<Rational>(kQ, p.generators), phi);
        ++checked;
        if (triv.acyclic && degree_rational(triv.representative) == 1 &&
            degree_parity_check(triv, 1, p.thurston_norm.value_or(1)))
            ++ok;
    }
    r.pass = checked > 0 && ok == checked;
    r.detail = count_detail(ok, checked, ms_since(t0)) +
               " [every acyclic d=2 corpus invariant has even degree (x=1); the d=1 trivial "
               "trefoil invariant has degree 1]";
    return r;
}

template <class K>
bool polynomiality_holds(const GroupPresentation& p, const Representation<K>& alpha,
                         const AbelianizationMap& phi, int& zero_invariants) {
    auto d0 = alexander_order(p, alpha, phi, 0);
    if (d0.polynomial.is_zero() || d0.polynomial.terms().size() != 1)
        return false; // zeroth order must be a monomial unit
    auto inv = wada_invariant(p, alpha, phi);
    if (!inv.acyclic) {
        ++zero_invariants; // zero invariant is trivially a Laurent polynomial
        return true;
    }
    // Laurent-polynomiality: the (rank-1) denominator divides the numerator.
    auto [q, rem] = divmod_rank1(inv.representative.num(), inv.representative.den());
    (void)q;
    return rem.is_zero();
}

CriterionResult criterion_polynomiality() {
    CriterionResult r{9, "polynomiality", false, ""};
    auto t0 = Clock::now();
    int ok = 0, checked = 0, skips = 0, zero_invariants = 0;
    auto consider = [&](const GroupPresentation& p, const AbelianizationMap& phi,
                        const auto& alpha, bool irreducible) {
        if (!irreducible) return;
        KernelCheck kc = nontrivial_on_kernel(alpha, phi, p);
        if (kc.inconclusive) {
            ++skips;
            return;
        }
        if (!kc.nontrivial) return;
        ++checked;
        if (polynomiality_holds(p, alpha, phi, zero_invariants)) ++ok;
    };
    for (const char* name : {"trefoil", "figure8", "5_2"}) {
        GroupPresentation p = knot_table(name);
        AbelianizationMap phi = abelianization(p);
        for (const Sl2Rep& s : enumerate_sl2_reps(p, 5)) consider(p, phi, s.rep, s.irreducible);
    }
    {
        GroupPresentation p = knot_table("trefoil");
        auto alpha = parabolic_trefoil();
        consider(p, abelianization(p), alpha, is_irreducible(alpha));
    }
    r.pass = checked > 0 && ok == checked;
    std::ostringstream os;
    os << ok << "/" << checked
       << " irreducible nontrivial-on-kernel representations have unit zeroth order and Laurent "
          "polynomial invariant; "
       << skips << " inconclusive kernel checks skipped, " << zero_invariants
       << " zero invariants (" << ms_since(t0) << " ms)";
    r.detail = os.str();
    return r;
}

CriterionResult criterion_palindrome() {
    CriterionResult r{10, "palindrome-normalization", false, ""};
    auto t0 = Clock::now();
    bool trefoil_ok = false;
    {
        GroupPresentation p = knot_table("trefoil");
        auto alpha = parabolic_trefoil();
        auto inv = wada_invariant(p, alpha, abelianization(p));
        auto form = palindromic_normalize(inv);
        trefoil_ok = is_irreducible(alpha) && form.has_value() && !form->coeffs.empty();
    }
    // The figure-eight half has no witness to run: the knot group admits no
    // irreducible representation into SL(2,Q).  Solving the SL(2) character
    // equations for its relator over Q forces (x^2-1)(x^2-5) to be a rational
    // square (x the meridian trace), and every rational solution yields a
    // reducible image; the geometric (parabolic) representation lives over
    // Q(sqrt(-3)).  No rational representation can be shipped, so this half
    // fails by fiat rather than by weakened checking.
    bool fig8_ok = false;
    r.pass = trefoil_ok && fig8_ok;
    std::ostringstream os;
    os << "trefoil SL(2,Q) palindromic form " << (trefoil_ok ? "confirmed" : "FAILED")
       << "; figure8 half unsatisfiable: no irreducible SL(2,Q)-representation of the "
          "figure-eight knot group exists (rational character equations force (x^2-1)(x^2-5) to "
          "be a square and all rational solutions are reducible; the parabolic representation "
          "lives over Q(sqrt(-3))) ("
       << ms_since(t0) << " ms)";
    r.detail = os.str();
    return r;
}

CriterionResult criterion_sym_power() {
    CriterionResult r{11, "sym-power-sanity", false, ""};
    auto t0 = Clock::now();
    GroupPresentation p = knot_table("trefoil");
    AbelianizationMap phi = abelianization(p);
    auto alpha = parabolic_trefoil();
    bool dims_ok = true;
    for (int k = 1; k <= 5; ++k)
        if (sym_power(alpha, k).dim != k + 1) dims_ok = false;
    auto s2 = sym_power(alpha, 2);
    bool valid = true;
    try {
        s2.validate(p);
    } catch (const Error&) {
        valid = false;
    }
    bool witness = find_conjugation_to_dual(s2).witness.has_value();
    auto inv = wada_invariant(p, s2, phi);
    bool odd_degree = inv.acyclic && degree_rational(inv.representative) % 2 != 0 &&
                      degree_parity_check(inv, 3, p.thurston_norm.value_or(1));
    r.pass = dims_ok && valid && s2.dim == 3 && witness && odd_degree;
    std::ostringstream os;
    os << "sym^k dims k+1 for k<=5: " << (dims_ok ? "yes" : "NO")
       << "; sym^2 valid 3-dim with duality witness: " << ((valid && witness) ? "yes" : "NO")
       << "; invariant degree " << (inv.acyclic ? degree_rational(inv.representative) : -1)
       << " (odd expected for d=3, x=1) (" << ms_since(t0) << " ms)";
    r.detail = os.str();
    return r;
}

CriterionResult criterion_fox() {
    CriterionResult r{12, "fox-identities", false, ""};
    auto t0 = Clock::now();
    Rng rng(20260404);
    auto gen = fp_gen(7);
    const int n = 3, d = 3;
    std::vector<Mat<Fp>> images;
    for (int g = 0; g < n; ++g) images.push_back(random_invertible(rng, d, gen));
    RingRep<Fp> rep = make_field_rep(images);
    rep.validate(n);

    std::uniform_int_distribution<int> len_pick(0, 12);
    std::uniform_int_distribution<int> letter_pick(0, 2 * n - 1);
    auto random_word = [&] {
        std::string text;
        int len = len_pick(rng);
        for (int i = 0; i < len; ++i) {
            int l = letter_pick(rng);
            char c = static_cast<char>((l < n ? 'a' : 'A') + l % n);
            text.push_back(c);
        }
        return Word::parse(text, n);
    };

    Mat<Fp> id = Mat<Fp>::Identity(d, d);
    int ok = 0, total = 0;
    // Fundamental identity: rho(w) - I = sum_j (dw/dx_j) (rho(x_j) - I).
    for (int i = 0; i < 100; ++i) {
        ++total;
        Word w = random_word();
        Mat<Fp> lhs = eval_word(rep, w) - id;
        Mat<Fp> rhs = Mat<Fp>::Zero(d, d);
        for (int j = 0; j < n; ++j)
            rhs = rhs + fox_derivative_eval(w, j, rep) * Mat<Fp>(rep.image(j) - id);
        if (matrices_equal(Mat<Fp>(lhs), Mat<Fp>(rhs))) ++ok;
    }
    // Product rule: d(uv)/dx_j = du/dx_j + rho(u) dv/dx_j.
    for (int i = 0; i < 50; ++i) {
        ++total;
        Word u = random_word(), v = random_word();
        Word uv = u * v;
        bool all = true;
        for (int j = 0; j < n; ++j) {
            Mat<Fp> lhs = fox_derivative_eval(uv, j, rep);
            Mat<Fp> rhs = fox_derivative_eval(u, j, rep) +
                          Mat<Fp>(eval_word(rep, u) * fox_derivative_eval(v, j, rep));
            if (!matrices_equal(Mat<Fp>(lhs), Mat<Fp>(rhs))) all = false;
        }
        if (all) ++ok;
    }
    r.pass = ok == total;
    r.detail = count_detail(ok, total, ms_since(t0)) +
               " [fundamental identity and product rule over random GL(3,F7) images; 200 random "
               "words total]";
    return r;
}

CriterionResult guarded(CriterionResult (*fn)(), int id, const char* name) {
    try {
        return fn();
    } catch (const std::exception& e) {
        return {id, name, false, std::string("unexpected exception: ") + e.what()};
    }
}

} // namespace

std::vector<CriterionResult> run_acceptance(std::optional<int> only) {
    struct Entry {
        int id;
        const char* name;
        CriterionResult (*fn)();
    };
    const Entry entries[] = {
        {1, "torus-fixture-torsion", criterion_torus},
        {2, "duality-lemma-random-complexes", criterion_duality},
        {3, "ses-multiplicativity", criterion_ses},
        {4, "base-change-laws", criterion_base_change},
        {5, "classical-alexander-values", criterion_classical},
        {6, "wada-torsion-orders-triangle", criterion_triangle},
        {7, "symmetry-theorem-corpus", criterion_symmetry},
        {8, "degree-parity", criterion_parity},
        {9, "polynomiality", criterion_polynomiality},
        {10, "palindrome-normalization", criterion_palindrome},
        {11, "sym-power-sanity", criterion_sym_power},
        {12, "fox-identities", criterion_fox},
    };
    std::vector<CriterionResult> out;
    for (const Entry& e : entries) {
        if (only && *only != e.id) continue;
        out.push_back(guarded(e.fn, e.id, e.name));
    }
    return out;
}

} // namespace talex
