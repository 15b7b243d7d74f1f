#pragma once

#include <algorithm>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "talex/errors.hpp"
#include "talex/scalar_traits.hpp"

namespace talex {

// Exponent vector of a Laurent monomial.  Keys are stored with trailing
// zeros removed, so a polynomial does not carry an ambient variable count:
// "t1^2" is the same object whether it later meets rank-1 or rank-3 data.
// The effective rank is the longest stored key.
using ExpVec = std::vector<std::int32_t>;

namespace detail {

inline void trim_exps(ExpVec& e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
}

inline std::int32_t checked_exp(std::int64_t v) {
    if (v < std::numeric_limits<std::int32_t>::min() || v > std::numeric_limits<std::int32_t>::max())
        throw ArithmeticError("Laurent exponent overflow");
    return static_cast<std::int32_t>(v);
}

inline ExpVec padded_add(const ExpVec& a, const ExpVec& b) {
    ExpVec r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::int64_t s = (i < a.size() ? a[i] : 0);
        s += (i < b.size() ? b[i] : 0);
        r[i] = checked_exp(s);
    }
    trim_exps(r);
    return r;
}

inline ExpVec padded_sub(const ExpVec& a, const ExpVec& b) {
    ExpVec r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::int64_t s = (i < a.size() ? a[i] : 0);
        s -= (i < b.size() ? b[i] : 0);
        r[i] = checked_exp(s);
    }
    trim_exps(r);
    return r;
}

inline ExpVec negated(const ExpVec& a) {
    ExpVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_exp(-std::int64_t(a[i]));
    trim_exps(r);
    return r;
}

// Lexicographic comparison after zero-padding to a common length.  This is
// the term order used everywhere a distinguished term is needed; it is
// translation invariant, so monomial shifts do not reorder terms.
inline bool padded_lex_less(const ExpVec& a, const ExpVec& b) {
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        std::int32_t x = i < a.size() ? a[i] : 0;
        std::int32_t y = i < b.size() ? b[i] : 0;
        if (x != y) return x < y;
    }
    return false;
}

inline ExpVec componentwise_min(const ExpVec& a, const ExpVec& b) {
    ExpVec r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::int32_t x = i < a.size() ? a[i] : 0;
        std::int32_t y = i < b.size() ? b[i] : 0;
        r[i] = std::min(x, y);
    }
    trim_exps(r);
    return r;
}

// True when b divides a as monomials of honest (exponent >= 0) polynomials.
inline bool componentwise_geq(const ExpVec& a, const ExpVec& b) {
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        std::int32_t x = i < a.size() ? a[i] : 0;
        std::int32_t y = i < b.size() ? b[i] : 0;
        if (x < y) return false;
    }
    return true;
}

} // namespace detail

// Sparse multivariable Laurent polynomial over a coefficient field K.
// Stored coefficients are never zero.
template <class K>
class Laurent {
public:
    using Terms = std::map<ExpVec, K>;

    Laurent() = default;
    Laurent(int n) : Laurent(K(n)) {}
    Laurent(K constant) {
        if (!talex::is_zero(constant)) terms_.emplace(ExpVec{}, std::move(constant));
    }

    static Laurent monomial(K coeff, ExpVec exps) {
        Laurent p;
        detail::trim_exps(exps);
        if (!talex::is_zero(coeff)) p.terms_.emplace(std::move(exps), std::move(coeff));
        return p;
    }

    // Variable t_index (1-based) to the given power; index 1 is the rank-1
    // variable "t".
    static Laurent variable(int index, std::int64_t exp = 1) {
        if (index < 1) throw InputError("Laurent variable index must be >= 1");
        ExpVec e(static_cast<std::size_t>(index), 0);
        e.back() = detail::checked_exp(exp);
        return monomial(K(1), std::move(e));
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first.empty() &&
               terms_.begin()->second == K(1);
    }
    std::size_t term_count() const { return terms_.size(); }

    // Longest used variable index; 0 for constants (including zero).
    int rank() const {
        std::size_t r = 0;
        for (const auto& [e, c] : terms_) r = std::max(r, e.size());
        return static_cast<int>(r);
    }

    K coeff(const ExpVec& e) const {
        ExpVec k = e;
        detail::trim_exps(k);
        auto it = terms_.find(k);
        return it == terms_.end() ? K(0) : it->second;
    }
    K constant_term() const { return coeff({}); }

    Laurent operator-() const {
        Laurent r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    Laurent& operator+=(const Laurent& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Laurent& operator-=(const Laurent& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(detail::padded_add(ea, eb), ca * cb);
        return r;
    }

    friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

    // Integer power; negative exponents require a single-term (unit) base.
    Laurent pow(long e) const {
        if (e == 0) return Laurent(K(1));
        Laurent base = *this;
        if (e < 0) {
            if (terms_.size() != 1)
                throw ArithmeticError("negative power of a non-monomial Laurent polynomial");
            const auto& [exps, c] = *terms_.begin();
            base = monomial(K(1) / c, detail::negated(exps));
        }
        unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
        Laurent acc(K(1));
        while (n > 0) {
            if (n & 1UL) acc *= base;
            base *= base;
            n >>= 1UL;
        }
        return acc;
    }

    // Padded-lex smallest / largest term.  Throws on the zero polynomial.
    std::pair<ExpVec, K> lowest_term() const {
        require_nonzero("lowest term");
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (detail::padded_lex_less(it->first, best->first)) best = it;
        return {best->first, best->second};
    }
    std::pair<ExpVec, K> highest_term() const {
        require_nonzero("highest term");
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (detail::padded_lex_less(best->first, it->first)) best = it;
        return {best->first, best->second};
    }

    // Componentwise minimum of all exponent vectors (the common monomial
    // factor); the empty vector for constants and zero.
    ExpVec content_exponents() const {
        if (terms_.empty()) return {};
        auto it = terms_.begin();
        ExpVec m = it->first;
        for (++it; it != terms_.end(); ++it) m = detail::componentwise_min(m, it->first);
        detail::trim_exps(m);
        return m;
    }

    // Rank-1 accessors (constants count as rank <= 1).
    std::int32_t lowest_exponent() const {
        require_rank1("lowest_exponent");
        require_nonzero("lowest exponent");
        std::int32_t m = std::numeric_limits<std::int32_t>::max();
        for (const auto& [e, c] : terms_) m = std::min(m, e.empty() ? 0 : e[0]);
        return m;
    }
    std::int32_t highest_exponent() const {
        require_rank1("highest_exponent");
        require_nonzero("highest exponent");
        std::int32_t m = std::numeric_limits<std::int32_t>::min();
        for (const auto& [e, c] : terms_) m = std::max(m, e.empty() ? 0 : e[0]);
        return m;
    }
    K coeff_at(std::int32_t e) const {
        require_rank1("coeff_at");
        return e == 0 ? coeff({}) : coeff(ExpVec{e});
    }

    // Multiplies by the monomial t^shift (rank-1).
    Laurent shifted(std::int64_t shift) const {
        require_rank1("shifted");
        Laurent r;
        for (const auto& [e, c] : terms_) {
            std::int64_t n = (e.empty() ? 0 : e[0]) + shift;
            ExpVec k;
            if (n != 0) k.push_back(detail::checked_exp(n));
            r.terms_.emplace(std::move(k), c);
        }
        return r;
    }

    std::string str() const;
    static Laurent parse(std::string_view s, const InvolutiveField& field);

    template <class K2>
    friend std::ostream& operator<<(std::ostream& os, const Laurent<K2>& p);

private:
    void require_nonzero(const char* what) const {
        if (terms_.empty()) throw ArithmeticError(std::string(what) + " of the zero polynomial");
    }
    void require_rank1(const char* what) const {
        if (rank() > 1)
            throw ArithmeticError(std::string(what) + " requires a rank-1 Laurent polynomial");
    }

    void add_term(ExpVec e, K c) {
        if (talex::is_zero(c)) return;
        auto [it, inserted] = terms_.emplace(std::move(e), c);
        if (!inserted) {
            it->second += c;
            if (talex::is_zero(it->second)) terms_.erase(it);
        }
    }

    Terms terms_;
};

// --- free functions ------------------------------------------------------

// Ring involution: conjugate every coefficient and invert every group
// element (negate every exponent vector).
template <class K>
Laurent<K> involute(const Laurent<K>& p) {
    Laurent<K> r;
    for (const auto& [e, c] : p.terms())
        r += Laurent<K>::monomial(scalar_traits<K>::conj(c), detail::negated(e));
    return r;
}

// Span degree of a rank-1 polynomial: highest minus lowest exponent.
template <class K>
long degree(const Laurent<K>& p) {
    return static_cast<long>(p.highest_exponent()) - static_cast<long>(p.lowest_exponent());
}

template <class K>
struct UnitNormalized {
    Laurent<K> canonical; // lowest term has exponent vector 0 and coefficient 1
    Laurent<K> unit;      // monomial with p = unit * canonical
};

// Canonical representative of p under multiplication by monomial units
// c * t^e: divides out the padded-lex-lowest term.  Two polynomials are
// monomial-unit equivalent iff their canonical forms are equal.
template <class K>
UnitNormalized<K> unit_normalize(const Laurent<K>& p) {
    if (p.is_zero()) throw ArithmeticError("unit_normalize of the zero polynomial");
    auto [e0, c0] = p.lowest_term();
    Laurent<K> inv_unit = Laurent<K>::monomial(K(1) / c0, detail::negated(e0));
    return {p * inv_unit, Laurent<K>::monomial(c0, e0)};
}

// Exact division a / b; throws if b does not divide a.
template <class K>
Laurent<K> exact_div(const Laurent<K>& a, const Laurent<K>& b) {
    if (b.is_zero()) throw ArithmeticError("Laurent division by zero");
    if (a.is_zero()) return Laurent<K>();
    // Shift both operands to honest polynomials (all exponents >= 0 with
    // componentwise-zero content); the quotient of honest polynomials with
    // zero-content divisor is again honest, so lex leading-term division
    // terminates (lex is a well-order on nonnegative exponents).
    ExpVec ca = a.content_exponents();
    ExpVec cb = b.content_exponents();
    Laurent<K> ah = a * Laurent<K>::monomial(K(1), detail::negated(ca));
    Laurent<K> bh = b * Laurent<K>::monomial(K(1), detail::negated(cb));
    auto [lead_b, lead_bc] = bh.highest_term();
    Laurent<K> q;
    Laurent<K> rem = ah;
    while (!rem.is_zero()) {
        auto [lead_r, lead_rc] = rem.highest_term();
        if (!detail::componentwise_geq(lead_r, lead_b))
            throw ArithmeticError("inexact Laurent polynomial division");
        Laurent<K> m = Laurent<K>::monomial(lead_rc / lead_bc, detail::padded_sub(lead_r, lead_b));
        q += m;
        rem -= m * bh;
    }
    return q * Laurent<K>::monomial(K(1), detail::padded_sub(ca, cb));
}

// Rank-1 Euclidean division: a = q*b + r with span(r) < span(b) or r = 0.
template <class K>
std::pair<Laurent<K>, Laurent<K>> divmod_rank1(const Laurent<K>& a, const Laurent<K>& b) {
    if (b.is_zero()) throw ArithmeticError("Laurent division by zero");
    if (a.is_zero()) return {Laurent<K>(), Laurent<K>()};
    std::int32_t la = a.lowest_exponent();
    std::int32_t lb = b.lowest_exponent();
    Laurent<K> ah = a.shifted(-std::int64_t(la)); // honest polynomial, constant term != 0
    Laurent<K> bh = b.shifted(-std::int64_t(lb));
    long db = static_cast<long>(bh.highest_exponent());
    K lc_b = bh.coeff_at(bh.highest_exponent());
    Laurent<K> q;
    Laurent<K> rem = ah;
    while (!rem.is_zero() && static_cast<long>(rem.highest_exponent()) >= db) {
        std::int32_t dr = rem.highest_exponent();
        Laurent<K> m = Laurent<K>::monomial(rem.coeff_at(dr) / lc_b, ExpVec{dr})
                           .shifted(-db); // (lc_r/lc_b) * t^(dr-db)
        q += m;
        rem -= m * bh;
    }
    return {q.shifted(std::int64_t(la) - lb), rem.shifted(la)};
}

// Monic-normalized gcd of rank-1 Laurent polynomials (canonical under
// units); gcd(0, 0) = 0.
template <class K>
Laurent<K> gcd_rank1(Laurent<K> a, Laurent<K> b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod_rank1(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return unit_normalize(a).canonical;
}

// --- text form ------------------------------------------------------------

namespace detail {

inline bool coeff_needs_parens(const std::string& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] == '+' || (s[i] == '-' && i > 0)) return true;
    return false;
}

std::vector<std::string> split_polynomial_terms(std::string_view s);
// Splits one term into coefficient text (empty when absent) and variable
// factors (index, exponent).
std::pair<std::string, std::vector<std::pair<int, std::int64_t>>> parse_term(std::string_view term);

} // namespace detail

template <class K>
std::string Laurent<K>::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool multi = rank() > 1;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += "+";
        std::string cs = scalar_traits<K>::str(c);
        if (detail::coeff_needs_parens(cs)) cs = "(" + cs + ")";
        out += cs;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            out += "*t";
            if (multi) out += std::to_string(i + 1);
            out += "^" + std::to_string(e[i]);
        }
    }
    return out;
}

template <class K>
Laurent<K> Laurent<K>::parse(std::string_view s, const InvolutiveField& field) {
    Laurent<K> p;
    for (const std::string& term : detail::split_polynomial_terms(s)) {
        auto [coeff_text, factors] = detail::parse_term(term);
        K c = coeff_text.empty() ? K(1)
                                 : scalar_traits<K>::parse(coeff_text, field);
        ExpVec e;
        for (auto [index, exp] : factors) {
            if (index < 1) throw InputError("bad variable index in polynomial text");
            if (e.size() < static_cast<std::size_t>(index)) e.resize(index, 0);
            e[index - 1] = detail::checked_exp(std::int64_t(e[index - 1]) + exp);
        }
        p += monomial(std::move(c), std::move(e));
    }
    return p;
}

template <class K>
std::ostream& operator<<(std::ostream& os, const Laurent<K>& p) {
    return os << p.str();
}

// --- scalar_traits so matrices over Laurent entries can be conjugated ----

template <class K>
struct scalar_traits<Laurent<K>> {
    static constexpr bool trivial_involution = false;
    static Laurent<K> conj(const Laurent<K>& x) { return involute(x); }
    static bool is_zero(const Laurent<K>& x) { return x.is_zero(); }
    static Laurent<K> pow(const Laurent<K>& x, long e) { return x.pow(e); }
    static InvolutiveField field(const Laurent<K>& x) {
        K sample = x.terms().empty() ? K(0) : x.terms().begin()->second;
        return scalar_traits<K>::field(sample);
    }
    static std::string str(const Laurent<K>& x) { return x.str(); }
    static Laurent<K> parse(std::string_view s, const InvolutiveField& f) {
        return Laurent<K>::parse(s, f);
    }
};

} // namespace talex
