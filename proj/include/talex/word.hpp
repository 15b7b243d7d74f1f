#pragma once

#include <string>
#include <vector>

#include "talex/errors.hpp"

namespace talex {

// One letter of a free-group word: a generator index together with an
// exponent of +1 or -1.
struct Letter {
    int gen = 0;
    int exp = 1;
    friend bool operator==(const Letter& a, const Letter& b) {
        return a.gen == b.gen && a.exp == b.exp;
    }
};

// Freely reduced word in a free group.  Construction reduces; the empty
// word is the identity.
class Word {
  public:
    Word() = default;
    explicit Word(std::vector<Letter> letters);

    // Parses letter text: lowercase 'a'..'z' are generators 0..25,
    // uppercase their inverses; whitespace is ignored, so "abaBAB" and
    // "a b a B A B" are the same word.  Indices must be < num_generators.
    static Word parse(const std::string& text, int num_generators);

    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    std::size_t size() const { return letters_.size(); }

    Word inverse() const;
    Word operator*(const Word& rhs) const;
    friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

    // Letter-by-letter text, uppercase for inverses.
    std::string str() const;

    // Exponent sum of each of the first n generators.
    std::vector<long> exponent_sums(int n) const;

    int max_generator() const; // largest index used, -1 if empty

  private:
    std::vector<Letter> letters_;
};

} // namespace talex
