#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "subreg/alphabet.hpp"

namespace subreg {

/// Complete deterministic finite automaton. The transition function is total;
/// a sink state is materialized where needed. After `minimize` every state is
/// reachable, no two states are equivalent, and states are numbered by BFS
/// from the initial state in alphabet order — so structural equality on
/// minimized automata coincides with language equality (over equal alphabets).
struct Dfa {
    Alphabet alphabet;
    int state_count = 1;
    int initial = 0;
    std::vector<bool> accepting;  // size state_count
    std::vector<int> delta;       // row-major: delta[state * |alphabet| + symbol]

    int next(int state, int symbol_index) const {
        return delta[static_cast<std::size_t>(state) * alphabet.size() + symbol_index];
    }

    /// Membership. Words containing symbols outside the alphabet are never
    /// members (the language is a subset of V*).
    bool accepts(std::string_view word) const;

    /// State reached from `from` by reading `word`; -1 on a foreign symbol.
    int run(int from, std::string_view word) const;

    bool operator==(const Dfa&) const = default;
};

/// One-state automaton of the empty language over `alphabet`.
Dfa empty_language(const Alphabet& alphabet);
/// One-state automaton of V*.
Dfa universal_language(const Alphabet& alphabet);

/// Canonical minimal complete DFA: reachable trim, Hopcroft partition
/// refinement, BFS renumbering in alphabet order.
Dfa minimize(const Dfa& d);

enum class BoolOp { Union, Intersection, Difference };

/// Minimal DFA of the boolean combination. Throws std::invalid_argument when
/// the alphabets differ.
Dfa boolean_op(const Dfa& a, const Dfa& b, BoolOp op);
/// Complement with respect to the automaton's declared alphabet.
Dfa complement(const Dfa& a);

Dfa concatenate(const Dfa& a, const Dfa& b);
Dfa star(const Dfa& a);

/// Pre(L): every state that can reach an accepting state becomes accepting.
Dfa prefix_closure(const Dfa& a);
/// Suf(L): every useful state becomes an alternative start (via an NFA),
/// then determinize and minimize.
Dfa suffix_closure(const Dfa& a);
/// Inf(L) = Pre(Suf(L)).
Dfa infix_closure(const Dfa& a);

/// One-rotation image {vu : uv in L}, built as the union over states q of
/// L(q -> F) . L(initial -> q). Closure under all circular shifts follows by
/// iterating single rotations, so shift(L) subset-of L already characterizes
/// circular languages.
Dfa cyclic_shift(const Dfa& a);

/// Language equality via product-automaton emptiness of the symmetric
/// difference. Throws std::invalid_argument when the alphabets differ.
bool equivalent(const Dfa& a, const Dfa& b);
bool subset_of(const Dfa& a, const Dfa& b);
/// Shortlex-least word in L(a) \ L(b), or nullopt when none exists.
std::optional<Word> difference_witness(const Dfa& a, const Dfa& b);

/// Exactly L intersected with V^{<=max_len}, in (length, lexicographic)
/// order of the declared alphabet.
std::vector<Word> enumerate_words(const Dfa& a, int max_len);

/// Finite iff no cycle among useful (reachable and co-reachable) states.
bool is_finite_language(const Dfa& a);
/// Number of words when finite (DAG path counting); nullopt when infinite.
std::optional<std::uint64_t> word_count(const Dfa& a);

/// Letters that occur in at least one word of the language, in the declared
/// order of `a.alphabet`.
Alphabet minimal_alphabet(const Dfa& a);

/// Same language re-declared over a superset alphabet (new letters lead to a
/// sink). Result is minimized.
Dfa extend_alphabet(const Dfa& a, const Alphabet& bigger);

std::vector<bool> reachable_states(const Dfa& a);
std::vector<bool> co_reachable_states(const Dfa& a);

/// Shortlex-least word leading from the initial state to `target`, or nullopt
/// when unreachable.
std::optional<Word> access_word(const Dfa& a, int target);
/// Shortlex-least word accepted from `from`, or nullopt when none.
std::optional<Word> acceptance_word(const Dfa& a, int from);
/// Shortlex-least word on which states `p` and `q` disagree about acceptance;
/// nullopt when the states are equivalent.
std::optional<Word> distinguishing_word(const Dfa& a, int p, int q);

} // namespace subreg
