#pragma once

#include "talex/representation.hpp"
#include "talex/smith.hpp"
#include "talex/torsion.hpp"

namespace talex {

// Indeterminacy of a twisted invariant: two representatives differ by
// eps * f^d * a with eps in {1, (-1)^d}, f a coefficient-free monomial and
// a in the determinant subgroup det(alpha(pi)).
template <class K>
struct Indeterminacy {
    int d = 1;
    DetSubgroupData<K> det_data;
    bool sign_allowed = true; // -1 available exactly when d is odd
};

template <class K>
struct TwistedAlexInvariant {
    RationalFunc<K> representative; // zero exactly when the complex is not acyclic
    Indeterminacy<K> indeterminacy;
    bool acyclic = false;
};

namespace detail {

// Membership of c in the subgroup of K^x generated by data.generators:
// exact over finite fields (the closure is enumerated); over infinite
// fields a bounded exponent search with |e_i| <= 8 per generator.
template <class K>
bool det_subgroup_member(const K& c, const DetSubgroupData<K>& data) {
    if (!data.elements.empty()) {
        for (const K& e : data.elements)
            if (e == c) return true;
        return false;
    }
    std::vector<K> gens;
    for (const K& g : data.generators)
        if (!(g == K(1))) gens.push_back(g);
    if (gens.empty()) return c == K(1);
    if (gens.size() > 4) return c == K(1); // keep the search bounded
    std::vector<long> e(gens.size(), -8);
    for (;;) {
        K prod(1);
        for (std::size_t i = 0; i < gens.size(); ++i)
            prod = prod * scalar_traits<K>::pow(gens[i], e[i]);
        if (prod == c) return true;
        std::size_t at = 0;
        while (at < e.size() && ++e[at] > 8) {
            e[at] = -8;
            ++at;
        }
        if (at == e.size()) return false;
    }
}

template <class K>
RingRep<RationalFunc<K>> fraction_rep(const RingRep<Laurent<K>>& r) {
    auto lift = [](const Laurent<K>& v) { return RationalFunc<K>(v); };
    RingRep<RationalFunc<K>> out;
    out.dim = r.dim;
    for (const auto& m : r.images) out.images.push_back(map_matrix<RationalFunc<K>>(m, lift));
    for (const auto& m : r.inverses) out.inverses.push_back(map_matrix<RationalFunc<K>>(m, lift));
    return out;
}

} // namespace detail

// True when t1 / t2 lies in the unit group the indeterminacy permits:
// a monomial eps * c * t^e with every exponent divisible by d, eps a sign
// only when allowed, and c in the determinant subgroup.
template <class K>
bool unit_equiv(const RationalFunc<K>& t1, const RationalFunc<K>& t2,
                const Indeterminacy<K>& ind) {
    if (t1.is_zero() || t2.is_zero()) return t1.is_zero() == t2.is_zero();
    auto mono = is_monomial_unit(t1 / t2);
    if (!mono) return false;
    auto [c, e] = *mono;
    for (std::int32_t x : e)
        if (x % ind.d != 0) return false;
    if (detail::det_subgroup_member(c, ind.det_data)) return true;
    if (ind.sign_allowed && detail::det_subgroup_member(K(-c), ind.det_data)) return true;
    return false;
}

// Wada's invariant of a deficiency-1 presentation, computed as the torsion
// of the twisted presentation complex.  Every column minor ratio
// det(A_j) / det((alpha x phi)(x_j) - I) with nonzero denominator is also
// computed and must agree with the torsion up to the indeterminacy units;
// disagreement means a convention bug, not bad input.
template <class K>
TwistedAlexInvariant<K> wada_invariant(const GroupPresentation& p, const Representation<K>& alpha,
                                       const AbelianizationMap& phi) {
    using RF = RationalFunc<K>;
    if (p.generators - static_cast<int>(p.relators.size()) != 1)
        throw HypothesisError("Wada's invariant needs a deficiency-1 presentation");
    RingRep<Laurent<K>> tens = tensor_with_phi(alpha, phi);
    BasedChainComplex<RF> complex = presentation_complex(p, detail::fraction_rep(tens));

    TwistedAlexInvariant<K> out;
    out.indeterminacy =
        Indeterminacy<K>{alpha.dim, det_subgroup(alpha), alpha.dim % 2 == 1};
    TorsionValue<RF> tv = torsion_invariant(complex);
    out.acyclic = tv.acyclic;
    out.representative = tv.value;
    if (!tv.acyclic) return out; // zero invariant, nothing to cross-check

    PresentationBoundaries<Laurent<K>> b = presentation_boundaries(p, tens);
    auto lift = [](const Laurent<K>& v) { return RF(v); };
    Mat<RF> d1 = map_matrix<RF>(b.d1, lift);
    Mat<RF> d2 = map_matrix<RF>(b.d2, lift);
    const int d = alpha.dim;
    const int n = p.generators;
    for (int j = 0; j < n; ++j) {
        RF den = det(Mat<RF>(d1.middleCols(static_cast<Eigen::Index>(j) * d, d)));
        if (den.is_zero()) continue;
        Mat<RF> minor(d2.rows() - d, d2.cols());
        Eigen::Index r = 0;
        for (int g = 0; g < n; ++g) {
            if (g == j) continue;
            minor.middleRows(r, d) = d2.middleRows(static_cast<Eigen::Index>(g) * d, d);
            r += d;
        }
        RF ratio = det(minor) / den;
        if (!unit_equiv(ratio, out.representative, out.indeterminacy))
            throw InternalError("column minor ratio disagrees with the torsion engine");
    }
    return out;
}

// The i-th twisted Alexander order (i in {0, 1}) over K[t^{1}]: the
// product of the elementary divisors of a presentation matrix of
// H_i of the twisted chain complex; zero when the module has positive
// rank.  The stored polynomial is unit-normalized.
template <class K>
struct OrderValue {
    Laurent<K> polynomial;
    int index = 0;
};

template <class K>
OrderValue<K> alexander_order(const GroupPresentation& p, const Representation<K>& alpha,
                              const AbelianizationMap& phi, int i) {
    if (phi.rank() != 1)
        throw HypothesisError("Alexander orders are defined for rank-1 abelianizations");
    if (i != 0 && i != 1) throw InputError("order index must be 0 or 1");
    RingRep<Laurent<K>> tens = tensor_with_phi(alpha, phi);
    PresentationBoundaries<Laurent<K>> b = presentation_boundaries(p, tens);
    const int d = alpha.dim;

    OrderValue<K> out;
    out.index = i;
    SmithResult<K> s1 = snf_univariate(b.d1);
    auto product = [](const std::vector<Laurent<K>>& divs) {
        Laurent<K> prod(K(1));
        for (const auto& f : divs) prod = prod * f;
        return prod;
    };
    if (i == 0) {
        // H_0 is presented by d1 itself (cokernel of d x nd).
        if (s1.rank < d) return out; // positive rank: zero order
        out.polynomial = unit_normalize(product(s1.divisors)).canonical;
        return out;
    }
    // H_1 = ker(d1) / im(d2).  The zero columns of D = U d1 V single out a
    // free basis V e_j of the kernel; d2 expressed in that basis gives an
    // honest presentation matrix of H_1.
    const Eigen::Index total = b.d1.cols();
    const Eigen::Index k = total - s1.rank;
    Mat<Laurent<K>> coords = s1.Vinv * b.d2;
    for (Eigen::Index r = 0; r < s1.rank; ++r)
        for (Eigen::Index c = 0; c < coords.cols(); ++c)
            if (!coords(r, c).is_zero())
                throw InternalError("relator columns leave the kernel of d1");
    Mat<Laurent<K>> r1 = coords.bottomRows(k);
    SmithResult<K> s2 = snf_univariate(r1);
    if (s2.rank < k) return out; // positive rank: zero order
    out.polynomial = unit_normalize(product(s2.divisors)).canonical;
    return out;
}

// tau = Delta_1 / Delta_0 for manifolds with boundary; the closed-manifold
// variant divides additionally by Delta_0 of the dual representation.  The
// ratio is only defined up to full monomial units (each order is).
template <class K>
RationalFunc<K> torsion_via_orders(const GroupPresentation& p, const Representation<K>& alpha,
                                   const AbelianizationMap& phi, bool closed = false) {
    OrderValue<K> d1 = alexander_order(p, alpha, phi, 1);
    OrderValue<K> d0 = alexander_order(p, alpha, phi, 0);
    if (d0.polynomial.is_zero())
        throw HypothesisError("zeroth Alexander order vanishes; torsion ratio undefined");
    RationalFunc<K> tau(d1.polynomial, d0.polynomial);
    if (closed) {
        OrderValue<K> dual0 = alexander_order(p, dual_representation(alpha), phi, 0);
        if (dual0.polynomial.is_zero())
            throw HypothesisError("dual zeroth Alexander order vanishes");
        tau = tau / RationalFunc<K>(dual0.polynomial);
    }
    return tau;
}

// Outcome of the duality/symmetry theorem check: whether some group
// element g explains involute(tau) = (-1)^{d b0} det(alpha(g)) phi(g)^d tau.
template <class K>
struct SymmetryReport {
    bool holds = false;
    K unit_coefficient = K(0); // c in u = c * t^e (set whenever u is a unit)
    ExpVec unit_exponents;
    std::optional<bool> charge_valid; // links only: n_i = 1 + sum lk mod 2
    bool inconclusive = false;        // bounded factor search exhausted
};

template <class K>
SymmetryReport<K> symmetry_check(const TwistedAlexInvariant<K>& inv, const Representation<K>& alpha,
                                 const AbelianizationMap& phi, int b0,
                                 const std::optional<MatI>& linking = std::nullopt) {
    if (!inv.acyclic || inv.representative.is_zero())
        throw HypothesisError("symmetry check requires a nonzero invariant");
    const int d = inv.indeterminacy.d;
    const RationalFunc<K>& tau = inv.representative;
    RationalFunc<K> signed_tau = (d * b0) % 2 != 0 ? -tau : tau;
    SymmetryReport<K> report;
    auto mono = is_monomial_unit(involute(tau) / signed_tau);
    if (!mono) return report; // exact disproof: the ratio is not a unit
    report.unit_coefficient = mono->first;
    report.unit_exponents = mono->second;

    for (std::int32_t x : mono->second)
        if (x % d != 0) return report; // unit not of the form phi(g)^d

    const int rank = phi.rank();
    std::vector<long> w(static_cast<std::size_t>(rank), 0);
    for (std::size_t i = 0; i < mono->second.size(); ++i)
        w[i] = mono->second[i] / d;

    // Bounded search for g: exponent vector a over the generators with
    // |a_i| <= 8, phi-image w and determinant product c.
    const int n = phi.generators();
    bool found = false;
    if (n <= 5) {
        std::vector<long> a(static_cast<std::size_t>(n), -8);
        for (;;) {
            bool phi_match = true;
            for (int r = 0; r < rank && phi_match; ++r) {
                long s = 0;
                for (int g = 0; g < n; ++g) s += a[static_cast<std::size_t>(g)] * phi.images(r, g);
                if (s != w[static_cast<std::size_t>(r)]) phi_match = false;
            }
            if (phi_match) {
                K prod(1);
                for (int g = 0; g < n; ++g)
                    prod = prod * scalar_traits<K>::pow(
                                      det(alpha.images[static_cast<std::size_t>(g)]),
                                      a[static_cast<std::size_t>(g)]);
                if (prod == mono->first) {
                    found = true;
                    break;
                }
            }
            std::size_t at = 0;
            while (at < a.size() && ++a[at] > 8) {
                a[at] = -8;
                ++at;
            }
            if (at == a.size()) break;
        }
    }
    if (found)
        report.holds = true;
    else
        report.inconclusive = true;

    // Charge congruence for links: n_i = 1 + sum_{j != i} lk(L_i, L_j) mod 2.
    if (rank >= 2 && linking.has_value()) {
        const MatI& lk = *linking;
        bool ok = true;
        for (int i = 0; i < rank; ++i) {
            long expected = 1;
            for (int j = 0; j < rank; ++j)
                if (j != i) expected += lk(i, j);
            long lhs = ((w[static_cast<std::size_t>(i)] % 2) + 2) % 2;
            if (lhs != ((expected % 2) + 2) % 2) ok = false;
        }
        report.charge_valid = ok;
    }
    return report;
}

// Degree parity theorem: deg tau = d * x(phi) mod 2 (rank 1; the degree of
// a fraction is span(num) - span(den), representative independent).
template <class K>
bool degree_parity_check(const TwistedAlexInvariant<K>& inv, int d, long x_phi) {
    if (!inv.acyclic || inv.representative.is_zero())
        throw HypothesisError("degree parity requires a nonzero invariant");
    long deg = degree_rational(inv.representative);
    return ((deg - static_cast<long>(d) * x_phi) % 2 + 2) % 2 == 0;
}

// Palindromic normal form: a shift k with t^k tau = a_0 + sum a_i (t^-i + t^i)
// (constant term 2 a_0).  Absent when no symmetric shift exists.
template <class K>
struct PalindromeForm {
    long shift = 0;
    std::vector<K> coeffs; // a_0 .. a_l
};

template <class K>
std::optional<PalindromeForm<K>> palindromic_normalize(const TwistedAlexInvariant<K>& inv) {
    if (!inv.acyclic || inv.representative.is_zero())
        throw HypothesisError("palindromic normalization requires a nonzero invariant");
    const RationalFunc<K>& f = inv.representative;
    if (f.num().rank() > 1 || f.den().rank() > 1)
        throw HypothesisError("palindromic normalization is a rank-1 operation");
    if (f.den().terms().size() != 1)
        throw HypothesisError("representative is not a Laurent polynomial");
    auto [ed, cd] = f.den().lowest_term();
    Laurent<K> p = f.num() * Laurent<K>::monomial(K(1) / cd, detail::negated(ed));
    long lo = p.lowest_exponent(), hi = p.highest_exponent();
    if (((lo + hi) % 2 + 2) % 2 != 0) return std::nullopt; // odd span: no candidate shift
    long k = -(lo + hi) / 2;
    Laurent<K> q = p.shifted(k);
    if (!(involute(q) == q)) return std::nullopt;

    long l = q.highest_exponent();
    K top = q.coeff_at(detail::checked_exp(l)); // nonzero: leading coefficient
    K constant = q.coeff_at(0);
    K two = (top + top) / top; // 1 + 1 in the concrete coefficient field
    PalindromeForm<K> form;
    form.shift = k;
    if (is_zero(two)) {
        // Characteristic 2: the doubled constant term must vanish.
        if (!is_zero(constant))
            throw ArithmeticError("characteristic 2: constant term is not of the form 2 a_0");
        form.coeffs.push_back(top - top);
    } else {
        form.coeffs.push_back(constant / two);
    }
    for (long i = 1; i <= l; ++i) form.coeffs.push_back(q.coeff_at(detail::checked_exp(i)));
    return form;
}

} // namespace talex
