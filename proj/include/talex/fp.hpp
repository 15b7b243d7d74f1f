#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "talex/errors.hpp"

namespace talex {

// Prime-field element with a runtime modulus (p < 2^31, prime).
//
// Generic code (Eigen, polynomial templates) constructs scalars from plain
// integer literals without knowing the modulus, so an element with p == 0
// denotes an integer literal that has not met a modulus yet.  Any binary
// operation involving an element with a concrete modulus reduces the
// literal side; two concrete moduli must agree.
class Fp {
public:
    Fp() = default;
    Fp(int n) : v_(n) {}
    Fp(long n) : v_(n) {}
    Fp(long long n) : v_(n) {}

    static Fp make(std::int64_t value, std::int64_t p) {
        if (p <= 1) throw ArithmeticError("prime field modulus must be at least 2");
        Fp r;
        r.p_ = p;
        r.v_ = mod(value, p);
        return r;
    }

    std::int64_t value() const { return v_; }
    std::int64_t modulus() const { return p_; }
    bool is_literal() const { return p_ == 0; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Fp operator-() const {
        Fp r = *this;
        r.v_ = p_ == 0 ? -v_ : mod(-v_, p_);
        return r;
    }

    friend Fp operator+(Fp a, Fp b) {
        unify(a, b);
        return compose(a.v_ + b.v_, a.p_);
    }
    friend Fp operator-(Fp a, Fp b) {
        unify(a, b);
        return compose(a.v_ - b.v_, a.p_);
    }
    friend Fp operator*(Fp a, Fp b) {
        unify(a, b);
        return compose(a.v_ * b.v_, a.p_);
    }
    friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }

    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    Fp& operator/=(const Fp& o) { return *this = *this / o; }

    friend bool operator==(Fp a, Fp b) {
        unify(a, b);
        return a.v_ == b.v_;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    Fp inverse() const {
        if (p_ == 0) {
            if (v_ == 1 || v_ == -1) {
                Fp r;
                r.v_ = v_;
                return r;
            }
            throw ArithmeticError("inverse of an unreduced integer literal");
        }
        if (v_ == 0) throw ArithmeticError("inverse of zero in prime field");
        // Extended Euclid: find x with v*x = 1 mod p.
        std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
        while (b != 0) {
            std::int64_t q = a / b;
            std::int64_t t = a - q * b;
            a = b;
            b = t;
            t = x0 - q * x1;
            x0 = x1;
            x1 = t;
        }
        return make(x0, p_);
    }

    Fp pow(long e) const {
        Fp base = e >= 0 ? *this : inverse();
        unsigned long n = static_cast<unsigned long>(e >= 0 ? e : -e);
        Fp acc(1);
        acc = unify_with(acc);
        Fp b = base;
        while (n > 0) {
            if (n & 1UL) acc *= b;
            b *= b;
            n >>= 1UL;
        }
        return acc;
    }

    std::string str() const { return std::to_string(v_); }
    static Fp parse(std::string_view s, std::int64_t p);

    friend std::ostream& operator<<(std::ostream& os, const Fp& x);

private:
    static std::int64_t mod(std::int64_t v, std::int64_t p) {
        std::int64_t r = v % p;
        return r < 0 ? r + p : r;
    }
    static Fp compose(std::int64_t v, std::int64_t p) {
        Fp r;
        r.p_ = p;
        r.v_ = p == 0 ? v : mod(v, p);
        return r;
    }
    static void unify(Fp& a, Fp& b) {
        if (a.p_ == b.p_) return;
        if (a.p_ != 0 && b.p_ != 0)
            throw ArithmeticError("mixed prime field moduli: " + std::to_string(a.p_) + " vs " +
                                  std::to_string(b.p_));
        std::int64_t p = a.p_ != 0 ? a.p_ : b.p_;
        a = compose(a.v_, p);
        b = compose(b.v_, p);
    }
    Fp unify_with(Fp literal) const { return compose(literal.v_, p_); }

    std::int64_t v_ = 0;
    std::int64_t p_ = 0;
};

} // namespace talex
