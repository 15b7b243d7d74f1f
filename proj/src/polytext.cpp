#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "talex/errors.hpp"
#include "talex/laurent.hpp"

namespace talex::detail {

namespace {

std::string strip_spaces(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

std::int64_t parse_int(std::string_view s, const char* what) {
    if (s.empty()) throw InputError(std::string("missing ") + what + " in polynomial text");
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) throw InputError(std::string("missing ") + what + " in polynomial text");
    std::int64_t v = 0;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw InputError(std::string("bad ") + what + " in polynomial text: '" +
                             std::string(s) + "'");
        v = v * 10 + (s[i] - '0');
        if (v > (std::int64_t(1) << 40))
            throw InputError(std::string("oversized ") + what + " in polynomial text");
    }
    return neg ? -v : v;
}

} // namespace

// Splits "3*t1^-2*t2^1+(2+i)*t^1+-1" on '+' characters at parenthesis depth
// zero.  '+' never appears inside a term except inside a parenthesized
// coefficient, so this is unambiguous.
std::vector<std::string> split_polynomial_terms(std::string_view raw) {
    std::string s = strip_spaces(raw);
    if (s.empty()) throw InputError("empty polynomial text");
    std::vector<std::string> terms;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') {
            if (--depth < 0) throw InputError("unbalanced ')' in polynomial text");
        }
        if (c == '+' && depth == 0) {
            if (!cur.empty()) terms.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (depth != 0) throw InputError("unbalanced '(' in polynomial text");
    if (!cur.empty()) terms.push_back(std::move(cur));
    if (terms.empty()) throw InputError("empty polynomial text");
    return terms;
}

// A term is [coefficient]['*' t[N]^E ['*' t[N]^E ...]] where the coefficient
// may be parenthesized.  Coefficient text never contains the letter 't', so
// the first 't' at depth zero starts the variable factors.
std::pair<std::string, std::vector<std::pair<int, std::int64_t>>> parse_term(
    std::string_view term) {
    std::size_t var_start = term.size();
    int depth = 0;
    for (std::size_t i = 0; i < term.size(); ++i) {
        if (term[i] == '(') ++depth;
        if (term[i] == ')') --depth;
        if (term[i] == 't' && depth == 0) {
            var_start = i;
            break;
        }
    }

    std::string coeff(term.substr(0, var_start));
    if (!coeff.empty() && coeff.back() == '*') coeff.pop_back();
    if (coeff.size() >= 2 && coeff.front() == '(' && coeff.back() == ')')
        coeff = coeff.substr(1, coeff.size() - 2);
    if (coeff == "-") coeff = "-1";

    std::vector<std::pair<int, std::int64_t>> factors;
    std::string_view rest = term.substr(var_start);
    while (!rest.empty()) {
        if (rest[0] != 't') throw InputError("bad variable factor in polynomial term");
        rest.remove_prefix(1);
        std::size_t i = 0;
        while (i < rest.size() && std::isdigit(static_cast<unsigned char>(rest[i]))) ++i;
        int index = i == 0 ? 1 : static_cast<int>(parse_int(rest.substr(0, i), "variable index"));
        rest.remove_prefix(i);
        std::int64_t exp = 1;
        if (!rest.empty() && rest[0] == '^') {
            rest.remove_prefix(1);
            std::size_t j = 0;
            if (j < rest.size() && (rest[j] == '+' || rest[j] == '-')) ++j;
            while (j < rest.size() && std::isdigit(static_cast<unsigned char>(rest[j]))) ++j;
            exp = parse_int(rest.substr(0, j), "exponent");
            rest.remove_prefix(j);
        }
        factors.emplace_back(index, exp);
        if (!rest.empty()) {
            if (rest[0] != '*') throw InputError("expected '*' between factors in polynomial term");
            rest.remove_prefix(1);
            if (rest.empty()) throw InputError("dangling '*' in polynomial term");
        }
    }
    return {std::move(coeff), std::move(factors)};
}

} // namespace talex::detail
