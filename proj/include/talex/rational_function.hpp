#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

#include "talex/errors.hpp"
#include "talex/laurent.hpp"

namespace talex {

// Fraction of Laurent polynomials over a field K.
//
// Rank <= 1 fractions are kept fully reduced with a canonical denominator
// (lowest exponent 0, lowest coefficient 1), so the stored pair is a unique
// representative.  Multivariable fractions are only lightly normalized
// (common monomial factor and a denominator scale); equality is always
// cross-multiplication and never depends on the representative.
template <class K>
class RationalFunc {
public:
    RationalFunc() : den_(K(1)) {}
    RationalFunc(int n) : num_(K(n)), den_(K(1)) {}
    RationalFunc(K c) : num_(std::move(c)), den_(K(1)) {}
    RationalFunc(Laurent<K> p) : num_(std::move(p)), den_(K(1)) {}
    RationalFunc(Laurent<K> num, Laurent<K> den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw ArithmeticError("rational function with zero denominator");
        normalize();
    }

    const Laurent<K>& num() const { return num_; }
    const Laurent<K>& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }

    RationalFunc operator-() const { return compose(-num_, den_); }

    friend RationalFunc operator+(const RationalFunc& a, const RationalFunc& b) {
        return RationalFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunc operator-(const RationalFunc& a, const RationalFunc& b) {
        return RationalFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunc operator*(const RationalFunc& a, const RationalFunc& b) {
        return RationalFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunc operator/(const RationalFunc& a, const RationalFunc& b) {
        if (b.is_zero()) throw ArithmeticError("rational function division by zero");
        return RationalFunc(a.num_ * b.den_, a.den_ * b.num_);
    }

    RationalFunc& operator+=(const RationalFunc& o) { return *this = *this + o; }
    RationalFunc& operator-=(const RationalFunc& o) { return *this = *this - o; }
    RationalFunc& operator*=(const RationalFunc& o) { return *this = *this * o; }
    RationalFunc& operator/=(const RationalFunc& o) { return *this = *this / o; }

    friend bool operator==(const RationalFunc& a, const RationalFunc& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const RationalFunc& a, const RationalFunc& b) { return !(a == b); }

    RationalFunc inverse() const {
        if (is_zero()) throw ArithmeticError("inverse of the zero rational function");
        return RationalFunc(den_, num_);
    }

    RationalFunc pow(long e) const {
        if (e == 0) return RationalFunc(1);
        RationalFunc base = e > 0 ? *this : inverse();
        unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
        RationalFunc acc(1);
        while (n > 0) {
            if (n & 1UL) acc *= base;
            base *= base;
            n >>= 1UL;
        }
        return acc;
    }

    std::string str() const {
        if (den_.is_one()) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

    template <class K2>
    friend std::ostream& operator<<(std::ostream& os, const RationalFunc<K2>& f);

private:
    static RationalFunc compose(Laurent<K> n, Laurent<K> d) {
        RationalFunc f;
        f.num_ = std::move(n);
        f.den_ = std::move(d); // already normalized together with n
        return f;
    }

    void normalize() {
        if (num_.is_zero()) {
            den_ = Laurent<K>(K(1));
            return;
        }
        if (num_.rank() <= 1 && den_.rank() <= 1) {
            Laurent<K> g = gcd_rank1(num_, den_);
            if (!g.is_one()) {
                num_ = exact_div(num_, g);
                den_ = exact_div(den_, g);
            }
            auto un = unit_normalize(den_);
            den_ = un.canonical;
            num_ = exact_div(num_, un.unit);
            return;
        }
        // Multivariable: strip the shared monomial factor and scale the
        // denominator's lowest coefficient to 1.
        ExpVec m = detail::componentwise_min(num_.content_exponents(), den_.content_exponents());
        if (!m.empty()) {
            Laurent<K> inv = Laurent<K>::monomial(K(1), detail::negated(m));
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
        K c = den_.lowest_term().second;
        if (!(c == K(1))) {
            Laurent<K> inv(K(1) / c);
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }

    Laurent<K> num_;
    Laurent<K> den_;
};

template <class K>
std::ostream& operator<<(std::ostream& os, const RationalFunc<K>& f) {
    return os << f.str();
}

// Field involution of K(F): conjugate coefficients, invert variables.
template <class K>
RationalFunc<K> involute(const RationalFunc<K>& f) {
    return RationalFunc<K>(involute(f.num()), involute(f.den()));
}

// Degree of a nonzero rank-1 fraction: deg(num) - deg(den); independent of
// the representative since degree is additive on products.
template <class K>
long degree_rational(const RationalFunc<K>& f) {
    if (f.is_zero()) throw ArithmeticError("degree of the zero rational function");
    return degree(f.num()) - degree(f.den());
}

// Detects f = c * t^e; returns (c, e) when so.  Works for any rank without
// polynomial gcds: a candidate monomial is read off the lowest terms and
// verified by exact comparison.
template <class K>
std::optional<std::pair<K, ExpVec>> is_monomial_unit(const RationalFunc<K>& f) {
    if (f.is_zero()) return std::nullopt;
    if (f.num().term_count() != f.den().term_count()) return std::nullopt;
    auto [en, cn] = f.num().lowest_term();
    auto [ed, cd] = f.den().lowest_term();
    K c = cn / cd;
    ExpVec e = detail::padded_sub(en, ed);
    if (f.num() == Laurent<K>::monomial(c, e) * f.den()) return std::make_pair(c, e);
    return std::nullopt;
}

template <class K>
struct scalar_traits<RationalFunc<K>> {
    static constexpr bool trivial_involution = false;
    static RationalFunc<K> conj(const RationalFunc<K>& x) { return involute(x); }
    static bool is_zero(const RationalFunc<K>& x) { return x.is_zero(); }
    static RationalFunc<K> pow(const RationalFunc<K>& x, long e) { return x.pow(e); }
    static InvolutiveField field(const RationalFunc<K>& x) {
        return scalar_traits<Laurent<K>>::field(x.num().is_zero() ? x.den() : x.num());
    }
    static std::string str(const RationalFunc<K>& x) { return x.str(); }
    static RationalFunc<K> parse(std::string_view s, const InvolutiveField& f) {
        return RationalFunc<K>(Laurent<K>::parse(s, f));
    }
};

} // namespace talex
