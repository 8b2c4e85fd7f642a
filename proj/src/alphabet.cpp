#include "subreg/alphabet.hpp"

#include <cctype>
#include <stdexcept>

namespace subreg {

Alphabet::Alphabet(std::string_view letters) {
    index_.fill(-1);
    for (char c : letters) {
        unsigned char u = static_cast<unsigned char>(c);
        if (u >= 128 || !std::isalnum(u))
            throw std::invalid_argument(std::string("alphabet symbol '") + c +
                                        "' is not an ASCII letter or digit");
        if (index_[u] >= 0)
            throw std::invalid_argument(std::string("duplicate alphabet symbol '") + c + "'");
        index_[u] = static_cast<int>(letters_.size());
        letters_.push_back(c);
    }
}

Alphabet Alphabet::from_letter_list(const std::vector<std::string>& letters) {
    std::string s;
    for (const auto& l : letters) {
        if (l.size() != 1)
            throw std::invalid_argument("alphabet entries must be single characters, got \"" + l + "\"");
        s += l;
    }
    return Alphabet(s);
}

bool Alphabet::contains_word(std::string_view w) const noexcept {
    for (char c : w)
        if (!contains(c)) return false;
    return true;
}

bool Alphabet::subset_of(const Alphabet& other) const noexcept {
    for (char c : letters_)
        if (!other.contains(c)) return false;
    return true;
}

Alphabet merge_alphabets(const Alphabet& a, const Alphabet& b) {
    std::string s = a.letters();
    for (char c : b.letters())
        if (!a.contains(c)) s.push_back(c);
    return Alphabet(s);
}

Shortlex::Shortlex(const Alphabet& a) {
    // Unknown symbols sort after all declared ones, by code point; they only
    // appear in words that failed validation upstream.
    for (int i = 0; i < 128; ++i) rank_[static_cast<std::size_t>(i)] = 128 + i;
    for (int i = 0; i < a.size(); ++i)
        rank_[static_cast<unsigned char>(a.letter(i))] = i;
}

bool Shortlex::operator()(std::string_view x, std::string_view y) const {
    if (x.size() != y.size()) return x.size() < y.size();
    for (std::size_t i = 0; i < x.size(); ++i) {
        int rx = rank_[static_cast<unsigned char>(x[i]) & 127];
        int ry = rank_[static_cast<unsigned char>(y[i]) & 127];
        if (rx != ry) return rx < ry;
    }
    return false;
}

} // namespace subreg
