#include "talex/word.hpp"

#include <cctype>

namespace talex {

namespace {

std::vector<Letter> freely_reduce(const std::vector<Letter>& in) {
    std::vector<Letter> out;
    for (const Letter& l : in) {
        if (l.exp != 1 && l.exp != -1) throw InputError("word letters must have exponent +1 or -1");
        if (l.gen < 0) throw InputError("negative generator index in word");
        if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

} // namespace

Word::Word(std::vector<Letter> letters) : letters_(freely_reduce(letters)) {}

Word Word::parse(const std::string& text, int num_generators) {
    std::vector<Letter> letters;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        int gen;
        int exp;
        if (c >= 'a' && c <= 'z') {
            gen = c - 'a';
            exp = 1;
        } else if (c >= 'A' && c <= 'Z') {
            gen = c - 'A';
            exp = -1;
        } else {
            throw InputError(std::string("invalid character '") + c + "' in word");
        }
        if (gen >= num_generators)
            throw InputError(std::string("generator '") + c + "' out of range");
        letters.push_back({gen, exp});
    }
    return Word(std::move(letters));
}

Word Word::inverse() const {
    std::vector<Letter> rev;
    rev.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) rev.push_back({it->gen, -it->exp});
    return Word(std::move(rev));
}

Word Word::operator*(const Word& rhs) const {
    std::vector<Letter> cat = letters_;
    cat.insert(cat.end(), rhs.letters_.begin(), rhs.letters_.end());
    return Word(std::move(cat));
}

std::string Word::str() const {
    std::string s;
    s.reserve(letters_.size());
    for (const Letter& l : letters_) {
        if (l.gen > 25) throw InputError("cannot print generator index beyond 'z'");
        s += static_cast<char>((l.exp > 0 ? 'a' : 'A') + l.gen);
    }
    return s;
}

std::vector<long> Word::exponent_sums(int n) const {
    std::vector<long> sums(static_cast<std::size_t>(n), 0);
    for (const Letter& l : letters_) {
        if (l.gen >= n) throw InputError("word uses a generator outside the presentation");
        sums[static_cast<std::size_t>(l.gen)] += l.exp;
    }
    return sums;
}

int Word::max_generator() const {
    int m = -1;
    for (const Letter& l : letters_) m = std::max(m, l.gen);
    return m;
}

} // namespace talex
