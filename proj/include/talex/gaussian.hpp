#pragma once

#include <iosfwd>
#include <string>

#include "talex/rational.hpp"

namespace talex {

// Gaussian rational a + b*i with exact rational coordinates.
// The field involution is complex conjugation.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(int n) : re_(n) {}
    GaussianRational(long n) : re_(n) {}
    GaussianRational(Rational re) : re_(std::move(re)) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }

    GaussianRational conj() const { return GaussianRational(re_, -im_); }

    GaussianRational operator-() const { return GaussianRational(-re_, -im_); }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    GaussianRational inverse() const {
        if (is_zero()) throw ArithmeticError("inverse of zero gaussian rational");
        Rational n = re_ * re_ + im_ * im_;
        return GaussianRational(re_ / n, -im_ / n);
    }

    GaussianRational pow(long e) const {
        if (e == 0) return GaussianRational(1);
        GaussianRational base = e > 0 ? *this : inverse();
        unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
        GaussianRational acc(1);
        while (n > 0) {
            if (n & 1UL) acc *= base;
            base *= base;
            n >>= 1UL;
        }
        return acc;
    }

    // Text form: "3", "-1/2+2i", "i", "-i", "3-i".
    std::string str() const;
    static GaussianRational parse(std::string_view s);

    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

private:
    Rational re_, im_;
};

} // namespace talex
