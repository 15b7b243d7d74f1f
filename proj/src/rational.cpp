#include "talex/rational.hpp"

#include <cctype>
#include <ostream>

namespace talex {

Rational::Rational(long num, long den) {
    if (den == 0) throw ArithmeticError("rational with zero denominator");
    mpq_init(q_);
    mpq_set_si(q_, num, 1);
    Rational d;
    mpq_set_si(d.q_, den, 1);
    mpq_div(q_, q_, d.q_);
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    Rational base = e > 0 ? *this : inverse();
    unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
    Rational acc(1);
    while (n > 0) {
        if (n & 1UL) acc *= base;
        base *= base;
        n >>= 1UL;
    }
    return acc;
}

std::string Rational::str() const {
    char* raw = mpq_get_str(nullptr, 10, q_);
    std::string s(raw);
    void (*freefunc)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefunc);
    freefunc(raw, s.size() + 1);
    return s;
}

Rational Rational::parse(std::string_view s) {
    if (s.empty()) throw InputError("empty rational literal");
    std::string buf(s);
    if (buf.front() == '+') buf.erase(buf.begin());
    for (std::size_t i = 0; i < buf.size(); ++i) {
        char c = buf[i];
        bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' ||
                  (c == '-' && (i == 0 || buf[i - 1] == '/'));
        if (!ok) throw InputError("malformed rational literal: '" + std::string(s) + "'");
    }
    Rational r;
    if (mpq_set_str(r.q_, buf.c_str(), 10) != 0)
        throw InputError("malformed rational literal: '" + std::string(s) + "'");
    if (mpz_sgn(mpq_denref(r.q_)) == 0)
        throw ArithmeticError("rational with zero denominator: '" + std::string(s) + "'");
    mpq_canonicalize(r.q_);
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace talex
