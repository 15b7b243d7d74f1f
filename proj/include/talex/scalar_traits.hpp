#pragma once

#include <string>

#include "talex/fp.hpp"
#include "talex/gaussian.hpp"
#include "talex/rational.hpp"

namespace talex {

// Runtime description of a coefficient field with involution.
enum class FieldKind { rationals, prime_field, gaussian_rationals };

struct InvolutiveField {
    FieldKind kind = FieldKind::rationals;
    long p = 0; // modulus for prime fields, 0 otherwise

    std::string spec() const {
        switch (kind) {
            case FieldKind::rationals: return "Q";
            case FieldKind::prime_field: return "Fp:" + std::to_string(p);
            case FieldKind::gaussian_rationals: return "Qi";
        }
        return "?";
    }
};

// Compile-time hooks every coefficient field scalar provides.
//
// 'conj' is the field involution: identity on rationals and prime fields,
// complex conjugation on gaussian rationals.
template <class K>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr bool trivial_involution = true;
    static Rational conj(const Rational& x) { return x; }
    static bool is_zero(const Rational& x) { return x.is_zero(); }
    static Rational pow(const Rational& x, long e) { return x.pow(e); }
    static InvolutiveField field(const Rational&) { return {FieldKind::rationals, 0}; }
    static std::string str(const Rational& x) { return x.str(); }
    static Rational parse(std::string_view s, const InvolutiveField&) { return Rational::parse(s); }
};

template <>
struct scalar_traits<GaussianRational> {
    static constexpr bool trivial_involution = false;
    static GaussianRational conj(const GaussianRational& x) { return x.conj(); }
    static bool is_zero(const GaussianRational& x) { return x.is_zero(); }
    static GaussianRational pow(const GaussianRational& x, long e) { return x.pow(e); }
    static InvolutiveField field(const GaussianRational&) { return {FieldKind::gaussian_rationals, 0}; }
    static std::string str(const GaussianRational& x) { return x.str(); }
    static GaussianRational parse(std::string_view s, const InvolutiveField&) {
        return GaussianRational::parse(s);
    }
};

template <>
struct scalar_traits<Fp> {
    static constexpr bool trivial_involution = true;
    static Fp conj(const Fp& x) { return x; }
    static bool is_zero(const Fp& x) { return x.is_zero(); }
    static Fp pow(const Fp& x, long e) { return x.pow(e); }
    static InvolutiveField field(const Fp& x) {
        return {FieldKind::prime_field, static_cast<long>(x.modulus())};
    }
    static std::string str(const Fp& x) { return x.str(); }
    static Fp parse(std::string_view s, const InvolutiveField& f) { return Fp::parse(s, f.p); }
};

// Convenience wrappers.
template <class K>
K conj_scalar(const K& x) {
    return scalar_traits<K>::conj(x);
}

template <class K>
bool is_zero(const K& x) {
    return scalar_traits<K>::is_zero(x);
}

template <class K>
K scalar_pow(const K& x, long e) {
    return scalar_traits<K>::pow(x, e);
}

// True when 1 + 1 = 0 for this concrete value's field.
template <class K>
bool has_characteristic_two(const K& sample) {
    K one = sample - sample + K(1); // inherits any runtime modulus from 'sample'
    return is_zero(one + one);
}

} // namespace talex
