#pragma once

#include <algorithm>
#include <optional>
#include <random>

#include "talex/fox.hpp"
#include "talex/presentation.hpp"

namespace talex {

// Linear representation of a presented group over an involutive field K:
// one invertible d x d matrix per generator.
template <class K>
struct Representation {
    int dim = 0;
    InvolutiveField field;
    std::vector<Mat<K>> images;

    // Shape, invertibility and relator checks; names the offending relator.
    void validate(const GroupPresentation& p) const {
        if (dim <= 0) throw ShapeError("representation dimension must be positive");
        if (static_cast<int>(images.size()) != p.generators)
            throw ShapeError("representation must cover every generator");
        for (const Mat<K>& m : images) {
            if (m.rows() != dim || m.cols() != dim)
                throw ShapeError("representation matrices must be dim x dim");
            if (is_zero(det(m))) throw SingularMatrixError("representation image is singular");
        }
        RingRep<K> rr = ring_rep();
        Mat<K> id = Mat<K>::Identity(dim, dim);
        for (const Word& r : p.relators)
            if (!matrices_equal(eval_word(rr, r), id))
                throw HypothesisError("representation does not respect relator \"" + r.str() +
                                      "\"");
    }

    RingRep<K> ring_rep() const {
        RingRep<K> rr;
        rr.dim = dim;
        rr.images = images;
        for (const Mat<K>& m : images) rr.inverses.push_back(inverse_field(m));
        return rr;
    }
};

// Dual representation g -> conj(alpha(g^{-1}))^T under the field involution.
template <class K>
Representation<K> dual_representation(const Representation<K>& a) {
    Representation<K> d;
    d.dim = a.dim;
    d.field = a.field;
    for (const Mat<K>& m : a.images) d.images.push_back(conj_transpose(inverse_field(m)));
    return d;
}

// An invertible P with P alpha(x_i) P^{-1} = dual(alpha)(x_i) for all i.
template <class K>
struct DualityWitness {
    Mat<K> P;
};

template <class K>
struct DualitySearchResult {
    std::optional<DualityWitness<K>> witness;
    // True when the solution space was only sampled (infinite or large
    // field) and no invertible element turned up: absence is then
    // probabilistic rather than certified.
    bool probabilistic_absence = false;
};

// Searches for a conjugation from alpha to its dual: the intertwiner
// equations P a_i - a_i^dagger P = 0 are linear in P, so the candidates
// form the nullspace of a stacked system; invertibility is decided by
// exact determinant over the nullspace (exhaustively over small prime
// fields, by sampling otherwise).
template <class K>
DualitySearchResult<K> find_conjugation_to_dual(const Representation<K>& a, unsigned seed = 1) {
    int d = a.dim;
    int n = static_cast<int>(a.images.size());
    Representation<K> dual = dual_representation(a);
    Mat<K> system = Mat<K>::Zero(static_cast<Eigen::Index>(n) * d * d, static_cast<Eigen::Index>(d) * d);
    for (int g = 0; g < n; ++g) {
        const Mat<K>& A = a.images[static_cast<std::size_t>(g)];
        const Mat<K>& B = dual.images[static_cast<std::size_t>(g)];
        // Row (r, c) of P A - B P = 0; unknown P[u, v] appears with
        // coefficient delta_{ru} A[v, c] - delta_{vc} B[r, u].
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) {
                Eigen::Index eq = (static_cast<Eigen::Index>(g) * d + r) * d + c;
                for (int v = 0; v < d; ++v) system(eq, r * d + v) = system(eq, r * d + v) + A(v, c);
                for (int u = 0; u < d; ++u) system(eq, u * d + c) = system(eq, u * d + c) - B(r, u);
            }
    }
    Mat<K> null = kernel_basis(system);
    int k = static_cast<int>(null.cols());
    DualitySearchResult<K> out;
    if (k == 0) return out; // certified absent

    auto unvec = [d](const Mat<K>& v) {
        Mat<K> p(d, d);
        for (int u = 0; u < d; ++u)
            for (int w = 0; w < d; ++w) p(u, w) = v(u * d + w, 0);
        return p;
    };
    auto try_candidate = [&](const Mat<K>& coeffs) -> bool {
        Mat<K> p = unvec(Mat<K>(null * coeffs));
        if (is_zero(det(p))) return false;
        out.witness = DualityWitness<K>{p};
        return true;
    };

    InvolutiveField f = a.images.empty() ? a.field : scalar_traits<K>::field(a.images[0](0, 0));
    if (f.kind == FieldKind::prime_field) {
        // Exhaustive over the nullspace when feasible: decides existence.
        double total = 1;
        for (int i = 0; i < k; ++i) total *= static_cast<double>(f.p);
        if (total <= 20000.0) {
            std::vector<long> idx(static_cast<std::size_t>(k), 0);
            while (true) {
                Mat<K> coeffs(k, 1);
                bool nonzero = false;
                for (int i = 0; i < k; ++i) {
                    coeffs(i, 0) = K(idx[static_cast<std::size_t>(i)]);
                    if (idx[static_cast<std::size_t>(i)] != 0) nonzero = true;
                }
                if (nonzero && try_candidate(coeffs)) return out;
                int at = 0;
                while (at < k && ++idx[static_cast<std::size_t>(at)] == f.p) {
                    idx[static_cast<std::size_t>(at)] = 0;
                    ++at;
                }
                if (at == k) break;
            }
            return out; // certified absent
        }
    }
    // Sampled search: basis vectors first, then random small combinations.
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> pick(-3, 3);
    for (int i = 0; i < k; ++i) {
        Mat<K> coeffs = Mat<K>::Zero(k, 1);
        coeffs(i, 0) = K(1);
        if (try_candidate(coeffs)) return out;
    }
    for (int iter = 0; iter < 100; ++iter) {
        Mat<K> coeffs(k, 1);
        for (int i = 0; i < k; ++i) coeffs(i, 0) = K(pick(rng));
        if (try_candidate(coeffs)) return out;
    }
    out.probabilistic_absence = true;
    return out;
}

// Tensor with the abelianization: (alpha (x) phi)(g) = t^{phi(g)} alpha(g)
// as a matrix over the Laurent polynomial ring, with the inverse matrices
// supplied for Fox calculus.
template <class K>
RingRep<Laurent<K>> tensor_with_phi(const Representation<K>& a, const AbelianizationMap& phi) {
    if (static_cast<int>(a.images.size()) != phi.generators())
        throw ShapeError("representation and abelianization disagree on generators");
    RingRep<Laurent<K>> out;
    out.dim = a.dim;
    for (int g = 0; g < phi.generators(); ++g) {
        ExpVec e, einv;
        for (int r = 0; r < phi.rank(); ++r) {
            e.push_back(detail::checked_exp(phi.images(r, g)));
            einv.push_back(detail::checked_exp(-phi.images(r, g)));
        }
        Laurent<K> tpos = Laurent<K>::monomial(K(1), e);
        Laurent<K> tneg = Laurent<K>::monomial(K(1), einv);
        Mat<K> inv = inverse_field(a.images[static_cast<std::size_t>(g)]);
        out.images.push_back(map_matrix<Laurent<K>>(a.images[static_cast<std::size_t>(g)],
                                                    [&](const K& v) { return Laurent<K>(v) * tpos; }));
        out.inverses.push_back(
            map_matrix<Laurent<K>>(inv, [&](const K& v) { return Laurent<K>(v) * tneg; }));
    }
    return out;
}

namespace detail {

inline void sorted_tuples(int n, int k, int low, std::vector<int>& cur,
                          std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int e = low; e < n; ++e) {
        cur.push_back(e);
        sorted_tuples(n, k, e, cur, out);
        cur.pop_back();
    }
}

// Nondecreasing k-tuples over {0..n-1} in lexicographic order: the
// monomial basis of the k-th symmetric power.
inline std::vector<std::vector<int>> symmetric_basis(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    sorted_tuples(n, k, 0, cur, out);
    return out;
}

template <class K>
Mat<K> sym_power_matrix(const Mat<K>& a, int k, const std::vector<std::vector<int>>& basis) {
    int n = static_cast<int>(a.rows());
    std::size_t dim = basis.size();
    auto index_of = [&basis](std::vector<int> t) {
        std::sort(t.begin(), t.end());
        auto it = std::lower_bound(basis.begin(), basis.end(), t);
        return static_cast<Eigen::Index>(it - basis.begin());
    };
    Mat<K> m = Mat<K>::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t j = 0; j < dim; ++j) {
        // Expand (a e_{J_1}) ... (a e_{J_k}) over all n^k index tuples and
        // accumulate each term into its sorted representative.
        std::vector<int> tuple(static_cast<std::size_t>(k), 0);
        while (true) {
            K coeff(1);
            for (int m_i = 0; m_i < k; ++m_i)
                coeff = coeff * a(tuple[static_cast<std::size_t>(m_i)],
                                  basis[j][static_cast<std::size_t>(m_i)]);
            if (!is_zero(coeff)) {
                Eigen::Index i = index_of(tuple);
                m(i, static_cast<Eigen::Index>(j)) = m(i, static_cast<Eigen::Index>(j)) + coeff;
            }
            int at = k - 1;
            while (at >= 0 && ++tuple[static_cast<std::size_t>(at)] == n) {
                tuple[static_cast<std::size_t>(at)] = 0;
                --at;
            }
            if (at < 0) break;
        }
    }
    return m;
}

} // namespace detail

// k-th symmetric power in the monomial basis indexed by nondecreasing
// tuples in lexicographic order; dimension binomial(n + k - 1, k).
template <class K>
Representation<K> sym_power(const Representation<K>& a, int k) {
    if (k < 1) throw InputError("symmetric power exponent must be >= 1");
    Representation<K> out;
    out.field = a.field;
    auto basis = detail::symmetric_basis(a.dim, k);
    out.dim = static_cast<int>(basis.size());
    for (const Mat<K>& m : a.images)
        out.images.push_back(detail::sym_power_matrix(m, k, basis));
    return out;
}

namespace detail {

// Incremental row-echelon basis of vectorized matrices, used to track the
// dimension of the matrix algebra generated by a set of images.
template <class K>
class SpanTracker {
  public:
    explicit SpanTracker(int len) : len_(len) {}

    // Returns true when the vector enlarged the span.
    bool insert(std::vector<K> v) {
        for (const auto& row : rows_) {
            int p = row.pivot;
            if (is_zero(v[static_cast<std::size_t>(p)])) continue;
            K f = v[static_cast<std::size_t>(p)];
            for (int i = 0; i < len_; ++i)
                v[static_cast<std::size_t>(i)] =
                    v[static_cast<std::size_t>(i)] - f * row.data[static_cast<std::size_t>(i)];
        }
        int pivot = -1;
        for (int i = 0; i < len_; ++i)
            if (!is_zero(v[static_cast<std::size_t>(i)])) {
                pivot = i;
                break;
            }
        if (pivot < 0) return false;
        K inv = K(1) / v[static_cast<std::size_t>(pivot)];
        for (int i = 0; i < len_; ++i) v[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i)] * inv;
        rows_.push_back({pivot, std::move(v)});
        return true;
    }

    int dim() const { return static_cast<int>(rows_.size()); }

  private:
    struct Row {
        int pivot;
        std::vector<K> data;
    };
    int len_;
    std::vector<Row> rows_;
};

template <class K>
std::vector<K> vectorize(const Mat<K>& m) {
    std::vector<K> v;
    v.reserve(static_cast<std::size_t>(m.rows() * m.cols()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    return v;
}

} // namespace detail

// Absolute irreducibility for d <= 3 via Burnside's criterion: the matrix
// algebra generated by the images is all of M_d exactly when no invariant
// line or plane exists over any field extension.  (Inverses are already in
// the generated algebra by Cayley-Hamilton, so words in positive powers
// suffice.)
template <class K>
bool is_irreducible(const Representation<K>& a) {
    if (a.dim > 3) throw InputError("irreducibility test supports dimension <= 3 only");
    int target = a.dim * a.dim;
    detail::SpanTracker<K> span(target);
    std::vector<Mat<K>> worklist;
    Mat<K> id = Mat<K>::Identity(a.dim, a.dim);
    span.insert(detail::vectorize(id));
    worklist.push_back(id);
    while (!worklist.empty() && span.dim() < target) {
        Mat<K> m = worklist.back();
        worklist.pop_back();
        for (const Mat<K>& g : a.images) {
            Mat<K> prod = g * m;
            if (span.insert(detail::vectorize(prod))) worklist.push_back(prod);
        }
    }
    return span.dim() == target;
}

struct KernelCheck {
    bool nontrivial = false;
    // True when the bounded word search was exhausted without a
    // certificate and no structural argument settled the question.
    bool inconclusive = false;
};

// Decides (when possible) whether alpha restricted to ker(phi) is
// non-trivial.  Certificates of nontriviality come from a bounded search
// over freely reduced words of length <= 4 with zero phi-image.  Two
// structural facts yield conclusive triviality: if every generator has
// phi-image 1 (meridional knot case) then ker(phi) is normally generated
// by the x_i x_j^{-1}, so equal images force triviality; if H_1 is
// torsion-free then ker(phi) is normally generated by the commutators
// [x_i, x_j], so pairwise commuting images force triviality.
template <class K>
KernelCheck nontrivial_on_kernel(const Representation<K>& a, const AbelianizationMap& phi,
                                 const GroupPresentation& p) {
    int n = p.generators;
    if (static_cast<int>(a.images.size()) != n || phi.generators() != n)
        throw ShapeError("representation, abelianization and presentation disagree");
    RingRep<K> rr = a.ring_rep();
    Mat<K> id = Mat<K>::Identity(a.dim, a.dim);

    // Bounded certificate search.
    std::vector<std::vector<Letter>> frontier;
    for (int len = 1; len <= 4; ++len) {
        std::vector<std::vector<Letter>> next;
        if (len == 1) {
            for (int g = 0; g < n; ++g)
                for (int e : {1, -1}) next.push_back({Letter{g, e}});
        } else {
            for (const auto& w : frontier)
                for (int g = 0; g < n; ++g)
                    for (int e : {1, -1}) {
                        if (w.back().gen == g && w.back().exp == -e) continue;
                        auto ext = w;
                        ext.push_back(Letter{g, e});
                        next.push_back(std::move(ext));
                    }
        }
        for (const auto& letters : next) {
            Word w(letters);
            bool zero = true;
            for (long v : phi.apply(w))
                if (v != 0) zero = false;
            if (!zero || w.empty()) continue;
            if (!matrices_equal(eval_word(rr, w), id)) return {true, false};
        }
        frontier = std::move(next);
    }

    // Structural triviality.
    bool meridional = phi.rank() == 1;
    for (int g = 0; g < n && meridional; ++g)
        if (phi.images(0, g) != 1) meridional = false;
    if (meridional) {
        bool all_equal = true;
        for (int g = 1; g < n; ++g)
            if (!matrices_equal(a.images[static_cast<std::size_t>(g)], a.images[0])) all_equal = false;
        if (all_equal) return {false, false};
    }
    bool torsion_free = true;
    {
        int q = static_cast<int>(p.relators.size());
        MatI e = MatI::Zero(n, q);
        for (int k = 0; k < q; ++k) {
            auto sums = p.relators[static_cast<std::size_t>(k)].exponent_sums(n);
            for (int i = 0; i < n; ++i) e(i, k) = sums[static_cast<std::size_t>(i)];
        }
        for (long d : int_smith(e).divisors)
            if (d != 1 && d != -1) torsion_free = false;
    }
    if (torsion_free) {
        bool commuting = true;
        for (int i = 0; i < n && commuting; ++i)
            for (int j = i + 1; j < n && commuting; ++j)
                if (!matrices_equal(Mat<K>(a.images[i] * a.images[j]),
                                    Mat<K>(a.images[j] * a.images[i])))
                    commuting = false;
        if (commuting) return {false, false};
    }
    return {false, true};
}

// Determinants of the generator images and, over a prime field, the full
// multiplicative subgroup they generate (used to decide membership in
// det(alpha(pi)) exactly).
template <class K>
struct DetSubgroupData {
    std::vector<K> generators;
    std::vector<K> elements; // closure over finite fields; empty otherwise
};

template <class K>
DetSubgroupData<K> det_subgroup(const Representation<K>& a) {
    DetSubgroupData<K> out;
    for (const Mat<K>& m : a.images) out.generators.push_back(det(m));
    bool finite = !a.images.empty() &&
                  scalar_traits<K>::field(a.images[0](0, 0)).kind == FieldKind::prime_field;
    if (finite && !out.generators.empty()) {
        // Seed with 1 carrying the right modulus, then close under the
        // generators; the subgroup of a finite cyclic group is small.
        std::vector<K> elems{out.generators[0] / out.generators[0]};
        bool grew = true;
        while (grew) {
            grew = false;
            for (const K& g : out.generators)
                for (std::size_t i = 0; i < elems.size(); ++i) {
                    K cand = elems[i] * g;
                    bool found = false;
                    for (const K& e : elems)
                        if (e == cand) found = true;
                    if (!found) {
                        elems.push_back(cand);
                        grew = true;
                    }
                }
        }
        out.elements = std::move(elems);
    }
    return out;
}

} // namespace talex
