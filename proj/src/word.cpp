#include "cusped/word.hpp"

#include <algorithm>

namespace cusped {

Word Word::parse(const std::string& s) {
    Word w;
    w.letters.reserve(s.size());
    for (char c : s) {
        if (c == ' ' || c == '\t') continue;
        if (c >= 'a' && c <= 'z') {
            w.letters.push_back(c - 'a' + 1);
        } else if (c >= 'A' && c <= 'Z') {
            w.letters.push_back(-(c - 'A' + 1));
        } else {
            throw input_error(std::string("bad letter '") + c + "' in word \"" + s + "\"");
        }
    }
    return w;
}

std::string Word::str() const {
    std::string out;
    out.reserve(letters.size());
    for (int l : letters) {
        if (l > 0)
            out.push_back(static_cast<char>('a' + l - 1));
        else
            out.push_back(static_cast<char>('A' - l - 1));
    }
    return out;
}

Word Word::inverse() const {
    Word w;
    w.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back(-*it);
    return w;
}

Word Word::operator*(const Word& other) const {
    Word w = *this;
    w.letters.insert(w.letters.end(), other.letters.begin(), other.letters.end());
    return w;
}

// Letter order a < A < b < B < ...: key = 2*(gen index) + (inverse ? 1 : 0).
static int letter_key(int l) { return l > 0 ? 2 * (l - 1) : 2 * (-l - 1) + 1; }

bool shortlex_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        int ka = letter_key(a.letters[i]), kb = letter_key(b.letters[i]);
        if (ka != kb) return ka < kb;
    }
    return false;
}

Word free_reduce(const Word& w) {
    Word out;
    out.letters.reserve(w.size());
    for (int l : w.letters) {
        if (l == 0) throw input_error("zero letter in word");
        if (!out.letters.empty() && out.letters.back() == -l)
            out.letters.pop_back();
        else
            out.letters.push_back(l);
    }
    return out;
}

}  // namespace cusped
