#include "talex/gaussian.hpp"

#include <ostream>

namespace talex {

std::string GaussianRational::str() const {
    if (im_.is_zero()) return re_.str();
    std::string imag;
    if (im_.is_one())
        imag = "i";
    else if (im_ == Rational(-1))
        imag = "-i";
    else
        imag = im_.str() + "i";
    if (re_.is_zero()) return imag;
    if (im_.sign() > 0) return re_.str() + "+" + imag;
    return re_.str() + imag;
}

GaussianRational GaussianRational::parse(std::string_view s) {
    if (s.empty()) throw InputError("empty gaussian rational literal");
    // Split at the last '+' or '-' that is not the leading sign and not a
    // denominator sign following '/'.
    std::size_t split = std::string_view::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/') {
            split = i;
            break;
        }
    }
    auto parse_part = [](std::string_view part) -> Rational {
        if (part == "i" || part == "+i") return Rational(1);
        if (part == "-i") return Rational(-1);
        if (!part.empty() && part.back() == 'i') part.remove_suffix(1);
        return Rational::parse(part);
    };
    bool has_i = !s.empty() && s.back() == 'i';
    if (split == std::string_view::npos) {
        if (has_i) return GaussianRational(Rational(0), parse_part(s));
        return GaussianRational(Rational::parse(s));
    }
    std::string_view left = s.substr(0, split);
    std::string_view right = s.substr(split);
    if (!has_i) throw InputError("malformed gaussian rational literal: '" + std::string(s) + "'");
    return GaussianRational(Rational::parse(left), parse_part(right));
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.str(); }

} // namespace talex
