#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "subreg/alphabet.hpp"
#include "subreg/dfa.hpp"
#include "subreg/regex.hpp"

namespace subreg {

/// Nondeterministic finite automaton with epsilon moves and a set of initial
/// states. Internal carrier for the Thompson construction and the closure
/// operations; user-facing languages are always compiled down to a Dfa.
struct Nfa {
    static constexpr int kEpsilon = -1;

    Alphabet alphabet;
    int state_count = 0;
    std::vector<std::vector<std::pair<int, int>>> edges;  // per state: (symbol index | kEpsilon, target)
    std::vector<int> initial;
    std::vector<bool> accepting;

    int add_state();
    void add_edge(int from, int symbol_index, int to) { edges[from].emplace_back(symbol_index, to); }
    void add_epsilon(int from, int to) { edges[from].emplace_back(kEpsilon, to); }
};

/// Thompson construction.
Nfa thompson(const Regex& r, const Alphabet& alphabet);

Nfa nfa_from_dfa(const Dfa& d);

/// Subset construction; the result is complete (the empty subset is the sink)
/// and minimized.
Dfa determinize(const Nfa& n);

/// Direct NFA simulation (epsilon-closure stepping), used where an evaluation
/// path independent of the compiled DFA is wanted.
class NfaMatcher {
public:
    explicit NfaMatcher(Nfa n);
    bool matches(std::string_view word) const;

private:
    std::vector<bool> closure(std::vector<bool> states) const;

    Nfa nfa_;
};

} // namespace subreg
