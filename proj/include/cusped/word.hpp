#pragma once

#include <string>
#include <vector>

#include "cusped/common.hpp"

namespace cusped {

// A word in the generators of a group.  Letter k > 0 means generator k-1,
// letter -k means its inverse.  Printed with inverses as uppercase: the word
// a b a^-1 b^-1 renders as "abAB".
struct Word {
    std::vector<int> letters;

    Word() = default;
    explicit Word(std::vector<int> ls) : letters(std::move(ls)) {}

    static Word parse(const std::string& s);
    std::string str() const;

    bool empty() const { return letters.empty(); }
    std::size_t size() const { return letters.size(); }
    Word inverse() const;
    Word operator*(const Word& other) const;  // concatenation, no reduction

    friend bool operator==(const Word& a, const Word& b) { return a.letters == b.letters; }
    friend bool operator!=(const Word& a, const Word& b) { return a.letters != b.letters; }
};

// Shortlex order used for canonical representatives: shorter first, then
// letterwise with a < a^-1 < b < b^-1 < ...
bool shortlex_less(const Word& a, const Word& b);

// Free reduction (cancel adjacent x x^-1 pairs).
Word free_reduce(const Word& w);

}  // namespace cusped
