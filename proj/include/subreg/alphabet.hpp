#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace subreg {

/// A word is a sequence of symbols; the empty string denotes the empty word.
using Word = std::string;

/// Ordered set of single-character symbols (printable ASCII letters and
/// digits). Iteration order is the declared order, which fixes the
/// lexicographic component of all word orderings.
class Alphabet {
public:
    Alphabet() { index_.fill(-1); }

    /// Declared order is the order of `letters`. Throws std::invalid_argument
    /// on duplicates or on symbols that are not ASCII letters/digits.
    explicit Alphabet(std::string_view letters);

    /// Builds from a JSON-style list of one-character strings.
    static Alphabet from_letter_list(const std::vector<std::string>& letters);

    int size() const noexcept { return static_cast<int>(letters_.size()); }
    bool empty() const noexcept { return letters_.empty(); }
    char letter(int i) const { return letters_[static_cast<std::size_t>(i)]; }
    const std::string& letters() const noexcept { return letters_; }

    bool contains(char c) const noexcept { return index(c) >= 0; }
    /// Position of `c` in the declared order, -1 when absent.
    int index(char c) const noexcept {
        unsigned char u = static_cast<unsigned char>(c);
        return u < 128 ? index_[u] : -1;
    }

    bool contains_word(std::string_view w) const noexcept;
    bool subset_of(const Alphabet& other) const noexcept;

    bool operator==(const Alphabet& o) const noexcept { return letters_ == o.letters_; }

private:
    std::string letters_;
    std::array<int, 128> index_{};
};

/// Union of two alphabets; keeps `a`'s order, then appends `b`'s new letters.
Alphabet merge_alphabets(const Alphabet& a, const Alphabet& b);

/// (length, lexicographic-in-declared-order) comparison. Output ordering
/// everywhere in this project.
class Shortlex {
public:
    explicit Shortlex(const Alphabet& a);
    bool operator()(std::string_view x, std::string_view y) const;

private:
    std::array<int, 128> rank_{};
};

} // namespace subreg
