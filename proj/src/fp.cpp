#include "talex/fp.hpp"

#include <cctype>
#include <ostream>

namespace talex {

Fp Fp::parse(std::string_view s, std::int64_t p) {
    if (s.empty()) throw InputError("empty prime field literal");
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) throw InputError("malformed prime field literal: '" + std::string(s) + "'");
    std::int64_t v = 0;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw InputError("malformed prime field literal: '" + std::string(s) + "'");
        v = v * 10 + (s[i] - '0');
        v %= p; // keep the accumulator small
    }
    return make(neg ? -v : v, p);
}

std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.value(); }

} // namespace talex
