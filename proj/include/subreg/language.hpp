#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "subreg/alphabet.hpp"
#include "subreg/dfa.hpp"

namespace subreg {

/// User-facing language description with a declared alphabet. The JSON form is
///
///   {"alphabet":["a","b"], "kind":"regex",  "expr":"(a|b)*b"}
///   {"alphabet":["a","b"], "kind":"finite", "words":["ab","a",""]}
///   {"alphabet":[...], "kind":"dfa", "states":N, "initial":0,
///    "accepting":[...], "delta":{"0":{"a":1,...},...}}
///
/// The empty string denotes the empty word in word lists. When "alphabet" is
/// omitted, the minimal alphabet of the payload is used (letters occurring in
/// the expression / the words / the delta keys, in code-point order).
struct LanguageSpec {
    enum class Kind { Regex, Dfa, Finite };

    Kind kind = Kind::Finite;
    Alphabet alphabet;
    std::string expr;                // Kind::Regex
    std::vector<Word> words;         // Kind::Finite
    subreg::Dfa dfa;                 // Kind::Dfa

    static LanguageSpec regex(std::string expr, Alphabet alphabet);
    static LanguageSpec finite(std::vector<Word> words, Alphabet alphabet);
    static LanguageSpec automaton(subreg::Dfa dfa);
};

/// Minimal complete DFA of the described language, in canonical form: two
/// compilations of equal languages over the same alphabet are structurally
/// identical.
Dfa compile(const LanguageSpec& spec);

LanguageSpec language_from_json(const nlohmann::json& j);
nlohmann::json language_to_json(const LanguageSpec& spec);

Dfa dfa_from_json(const nlohmann::json& j);
nlohmann::json dfa_to_json(const Dfa& d);

} // namespace subreg
