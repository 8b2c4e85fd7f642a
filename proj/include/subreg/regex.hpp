#pragma once

#include <string_view>
#include <vector>

#include "subreg/alphabet.hpp"

namespace subreg {

/// Regular-expression syntax tree. Surface syntax:
///
///   expr := alt
///   alt  := cat ("|" cat)*
///   cat  := rep+
///   rep  := atom ("*" | "+" | "?")?
///   atom := literal | "~" | "(" expr ")"
///
/// `~` is the empty word. The empty set has no surface token; an EmptySet
/// node can only be built programmatically (or via a non-matching finite
/// language spec).
struct Regex {
    enum class Kind { EmptySet, Epsilon, Literal, Concat, Alternation, Star, Plus, Optional };

    Kind kind = Kind::EmptySet;
    char symbol = 0;            // Literal only
    std::vector<Regex> parts;   // Concat/Alternation: >= 1 child; unary: exactly 1

    static Regex empty_set() { return Regex{}; }
    static Regex epsilon() { return Regex{Kind::Epsilon, 0, {}}; }
    static Regex literal(char c) { return Regex{Kind::Literal, c, {}}; }
    static Regex concat(std::vector<Regex> rs) { return Regex{Kind::Concat, 0, std::move(rs)}; }
    static Regex alternation(std::vector<Regex> rs) { return Regex{Kind::Alternation, 0, std::move(rs)}; }
    static Regex star(Regex r) { return Regex{Kind::Star, 0, {std::move(r)}}; }
    static Regex plus(Regex r) { return Regex{Kind::Plus, 0, {std::move(r)}}; }
    static Regex optional(Regex r) { return Regex{Kind::Optional, 0, {std::move(r)}}; }
};

/// Parses `text` against the grammar above. Literals must belong to
/// `alphabet`. Throws ParseError with the offending position.
Regex parse_regex(std::string_view text, const Alphabet& alphabet);

/// The ASCII letters/digits occurring literally in `text`, in code-point
/// order. Used to infer a minimal alphabet for specs that do not declare one.
Alphabet letters_used_in_regex(std::string_view text);

} // namespace subreg
