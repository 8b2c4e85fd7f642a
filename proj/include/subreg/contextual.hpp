#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "subreg/alphabet.hpp"
#include "subreg/dfa.hpp"
#include "subreg/language.hpp"

namespace subreg {

/// A context (u, v); at least one side is non-empty.
struct Context {
    Word left, right;
};

/// Selection language S gating a finite, non-empty set of contexts. S is
/// declared over its own alphabet U, a subset of the grammar alphabet.
struct SelectionPair {
    LanguageSpec selection;
    std::vector<Context> contexts;
};

/// Contextual grammar (V, selections, axioms).
struct ContextualGrammar {
    Alphabet alphabet;
    std::vector<SelectionPair> selections;  // ordered
    std::vector<Word> axioms;               // finite, non-empty
};

enum class DerivationMode { External, Internal };

/// Empty when the grammar satisfies all invariants; otherwise one message per
/// violation, naming the offending component.
std::vector<std::string> validate(const ContextualGrammar& g);

struct GrammarLengths {
    int axioms;    // longest axiom
    int contexts;  // longest |uv| over all contexts
    int total;     // axioms + contexts + 1
};
GrammarLengths lengths(const ContextualGrammar& g);

struct GenerationLimits {
    std::size_t word_cap = 1'000'000;  // generated-word cap before ResourceError
};

/// Derivation engine. Selection languages are compiled once, here.
/// All queries are pure; words are returned deduplicated in (length, lex)
/// order of the grammar alphabet.
class GrammarEngine {
public:
    /// Throws std::invalid_argument when validate() reports violations.
    explicit GrammarEngine(ContextualGrammar g, GenerationLimits limits = {});

    const ContextualGrammar& grammar() const { return grammar_; }
    const Dfa& selection_dfa(std::size_t i) const { return selection_dfas_[i]; }

    /// One derivation step from `word`: external wraps a context around the
    /// whole word when it lies in a selection language; internal wraps around
    /// every infix that does.
    std::vector<Word> step(DerivationMode mode, std::string_view word) const;

    /// Exactly L(G) intersected with V^{<=max_len}. Derivation steps strictly
    /// grow words, so breadth-first search from the axioms, pruned at
    /// max_len, is exact for the slice.
    std::vector<Word> generate(DerivationMode mode, int max_len) const;

    /// Whether `to` is derivable from `from` (reflexive-transitive closure).
    bool derives(DerivationMode mode, std::string_view from, std::string_view to) const;

private:
    void require_word(std::string_view word) const;

    ContextualGrammar grammar_;
    GenerationLimits limits_;
    std::vector<Dfa> selection_dfas_;
};

/// Grammar file form:
///   {"alphabet":["a","b","c","d"], "axioms":["aab"],
///    "selections":[{"selection":{"kind":"finite","words":["ab","b",""]},
///                   "contexts":[["c","d"]]}]}
/// The empty string is the empty word in axioms, selection words and context
/// sides.
ContextualGrammar grammar_from_json(const nlohmann::json& j);
nlohmann::json grammar_to_json(const ContextualGrammar& g);

} // namespace subreg
