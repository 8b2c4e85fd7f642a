#include "subreg/contextual.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

#include "subreg/errors.hpp"

namespace subreg {

std::vector<std::string> validate(const ContextualGrammar& g) {
    std::vector<std::string> out;
    if (g.alphabet.empty()) out.push_back("grammar alphabet is empty");
    if (g.axioms.empty()) out.push_back("grammar has no axiom");
    for (const Word& a : g.axioms)
        if (!g.alphabet.contains_word(a))
            out.push_back("axiom \"" + a + "\" uses symbols outside the alphabet");
    for (std::size_t i = 0; i < g.selections.size(); ++i) {
        const SelectionPair& p = g.selections[i];
        std::string where = "selection pair #" + std::to_string(i + 1);
        if (!p.selection.alphabet.subset_of(g.alphabet))
            out.push_back(where + ": selection alphabet {" + p.selection.alphabet.letters() +
                          "} is not a subset of the grammar alphabet");
        if (p.contexts.empty()) out.push_back(where + ": empty context set");
        for (const Context& c : p.contexts) {
            if (c.left.empty() && c.right.empty())
                out.push_back(where + ": empty context (both sides are ~)");
            if (!g.alphabet.contains_word(c.left) || !g.alphabet.contains_word(c.right))
                out.push_back(where + ": context (" + c.left + "," + c.right +
                              ") uses symbols outside the alphabet");
        }
    }
    return out;
}

GrammarLengths lengths(const ContextualGrammar& g) {
    GrammarLengths l{0, 0, 0};
    for (const Word& a : g.axioms) l.axioms = std::max(l.axioms, static_cast<int>(a.size()));
    for (const SelectionPair& p : g.selections)
        for (const Context& c : p.contexts)
            l.contexts = std::max(l.contexts, static_cast<int>(c.left.size() + c.right.size()));
    l.total = l.axioms + l.contexts + 1;
    return l;
}

GrammarEngine::GrammarEngine(ContextualGrammar g, GenerationLimits limits)
    : grammar_(std::move(g)), limits_(limits) {
    std::vector<std::string> violations = validate(grammar_);
    if (!violations.empty()) {
        std::string msg = "invalid grammar:";
        for (const std::string& v : violations) msg += "\n  - " + v;
        throw std::invalid_argument(msg);
    }
    selection_dfas_.reserve(grammar_.selections.size());
    for (const SelectionPair& p : grammar_.selections) selection_dfas_.push_back(compile(p.selection));
}

void GrammarEngine::require_word(std::string_view word) const {
    for (char c : word)
        if (!grammar_.alphabet.contains(c))
            throw std::invalid_argument(std::string("symbol '") + c + "' is outside the grammar alphabet");
}

std::vector<Word> GrammarEngine::step(DerivationMode mode, std::string_view word) const {
    require_word(word);
    std::set<Word, Shortlex> out{Shortlex(grammar_.alphabet)};
    const std::string w(word);

    for (std::size_t i = 0; i < grammar_.selections.size(); ++i) {
        const Dfa& sel = selection_dfas_[i];
        const auto& contexts = grammar_.selections[i].contexts;
        if (mode == DerivationMode::External) {
            if (!sel.accepts(w)) continue;
            for (const Context& c : contexts) out.insert(c.left + w + c.right);
        } else {
            // all O(|w|^2) splits w = x1 x2 x3 with x2 in the selection
            for (std::size_t begin = 0; begin <= w.size(); ++begin)
                for (std::size_t end = begin; end <= w.size(); ++end) {
                    if (!sel.accepts(std::string_view(w).substr(begin, end - begin))) continue;
                    for (const Context& c : contexts)
                        out.insert(w.substr(0, begin) + c.left + w.substr(begin, end - begin) +
                                   c.right + w.substr(end));
                }
        }
    }
    return {out.begin(), out.end()};
}

std::vector<Word> GrammarEngine::generate(DerivationMode mode, int max_len) const {
    if (max_len < 0) throw std::invalid_argument("max_len must be non-negative");
    std::set<Word, Shortlex> slice{Shortlex(grammar_.alphabet)};
    std::queue<Word> frontier;
    auto visit = [&](const Word& w) {
        if (static_cast<int>(w.size()) > max_len) return;
        if (!slice.insert(w).second) return;
        if (slice.size() > limits_.word_cap)
            throw ResourceError("generation exceeded the cap of " + std::to_string(limits_.word_cap) +
                                " words");
        frontier.push(w);
    };
    for (const Word& a : grammar_.axioms) visit(a);
    while (!frontier.empty()) {
        Word w = std::move(frontier.front());
        frontier.pop();
        for (const Word& next : step(mode, w)) visit(next);
    }
    return {slice.begin(), slice.end()};
}

bool GrammarEngine::derives(DerivationMode mode, std::string_view from, std::string_view to) const {
    require_word(from);
    require_word(to);
    if (from == to) return true;
    if (to.size() <= from.size()) return false;  // steps strictly increase length

    const Word target(to);
    std::set<Word> seen;
    std::queue<Word> frontier;
    seen.insert(Word(from));
    frontier.push(Word(from));
    while (!frontier.empty()) {
        Word w = std::move(frontier.front());
        frontier.pop();
        for (const Word& next : step(mode, w)) {
            if (next == target) return true;
            if (next.size() >= target.size()) continue;
            if (!seen.insert(next).second) continue;
            if (seen.size() > limits_.word_cap)
                throw ResourceError("derivation search exceeded the cap of " +
                                    std::to_string(limits_.word_cap) + " words");
            frontier.push(next);
        }
    }
    return false;
}

ContextualGrammar grammar_from_json(const nlohmann::json& j) {
    ContextualGrammar g;
    std::vector<std::string> letters;
    for (const auto& entry : j.at("alphabet")) letters.push_back(entry.get<std::string>());
    g.alphabet = Alphabet::from_letter_list(letters);
    for (const auto& entry : j.at("axioms")) g.axioms.push_back(entry.get<std::string>());
    for (const auto& sel : j.at("selections")) {
        SelectionPair p;
        p.selection = language_from_json(sel.at("selection"));
        for (const auto& ctx : sel.at("contexts")) {
            if (!ctx.is_array() || ctx.size() != 2)
                throw std::invalid_argument("each context must be a two-element array [u, v]");
            p.contexts.push_back(Context{ctx[0].get<std::string>(), ctx[1].get<std::string>()});
        }
        g.selections.push_back(std::move(p));
    }
    return g;
}

nlohmann::json grammar_to_json(const ContextualGrammar& g) {
    nlohmann::json j;
    nlohmann::json alphabet = nlohmann::json::array();
    for (char c : g.alphabet.letters()) alphabet.push_back(std::string(1, c));
    j["alphabet"] = alphabet;
    j["axioms"] = g.axioms;
    nlohmann::json sels = nlohmann::json::array();
    for (const SelectionPair& p : g.selections) {
        nlohmann::json sel;
        sel["selection"] = language_to_json(p.selection);
        nlohmann::json ctxs = nlohmann::json::array();
        for (const Context& c : p.contexts) ctxs.push_back(nlohmann::json::array({c.left, c.right}));
        sel["contexts"] = ctxs;
        sels.push_back(std::move(sel));
    }
    j["selections"] = sels;
    return j;
}

} // namespace subreg
