#include "subreg/language.hpp"

#include <set>
#include <stdexcept>

#include "subreg/nfa.hpp"
#include "subreg/regex.hpp"

namespace subreg {

LanguageSpec LanguageSpec::regex(std::string expr, Alphabet alphabet) {
    LanguageSpec s;
    s.kind = Kind::Regex;
    s.expr = std::move(expr);
    s.alphabet = std::move(alphabet);
    return s;
}

LanguageSpec LanguageSpec::finite(std::vector<Word> words, Alphabet alphabet) {
    LanguageSpec s;
    s.kind = Kind::Finite;
    s.words = std::move(words);
    s.alphabet = std::move(alphabet);
    for (const Word& w : s.words)
        if (!s.alphabet.contains_word(w))
            throw std::invalid_argument("finite language word \"" + w + "\" uses symbols outside the alphabet");
    return s;
}

LanguageSpec LanguageSpec::automaton(subreg::Dfa dfa) {
    LanguageSpec s;
    s.kind = Kind::Dfa;
    s.alphabet = dfa.alphabet;
    s.dfa = std::move(dfa);
    return s;
}

Dfa compile(const LanguageSpec& spec) {
    switch (spec.kind) {
        case LanguageSpec::Kind::Regex: {
            Regex r = parse_regex(spec.expr, spec.alphabet);
            return determinize(thompson(r, spec.alphabet));
        }
        case LanguageSpec::Kind::Dfa:
            return minimize(spec.dfa);
        case LanguageSpec::Kind::Finite: {
            Nfa n;
            n.alphabet = spec.alphabet;
            int start = n.add_state();
            n.initial = {start};
            for (const Word& w : spec.words) {
                int q = start;
                for (char c : w) {
                    int t = n.add_state();
                    int s = spec.alphabet.index(c);
                    if (s < 0)
                        throw std::invalid_argument("finite language word \"" + w +
                                                    "\" uses symbols outside the alphabet");
                    n.add_edge(q, s, t);
                    q = t;
                }
                n.accepting[static_cast<std::size_t>(q)] = true;
            }
            return determinize(n);
        }
    }
    throw std::logic_error("unknown spec kind");
}

namespace {

Alphabet alphabet_from_json(const nlohmann::json& j) {
    std::vector<std::string> letters;
    for (const auto& entry : j) letters.push_back(entry.get<std::string>());
    return Alphabet::from_letter_list(letters);
}

Alphabet letters_in_words(const std::vector<Word>& words) {
    std::set<char> used;
    for (const Word& w : words)
        for (char c : w) used.insert(c);
    return Alphabet(std::string(used.begin(), used.end()));
}

nlohmann::json alphabet_to_json(const Alphabet& a) {
    nlohmann::json arr = nlohmann::json::array();
    for (char c : a.letters()) arr.push_back(std::string(1, c));
    return arr;
}

} // namespace

Dfa dfa_from_json(const nlohmann::json& j) {
    Alphabet alphabet;
    if (j.contains("alphabet")) {
        alphabet = alphabet_from_json(j.at("alphabet"));
    } else {
        // infer from the delta symbol keys (code-point order via std::set)
        std::set<char> used;
        for (const auto& [state, row] : j.at("delta").items()) {
            (void)state;
            for (const auto& [sym, target] : row.items()) {
                (void)target;
                if (sym.size() != 1) throw std::invalid_argument("delta symbol keys must be single characters");
                used.insert(sym[0]);
            }
        }
        alphabet = Alphabet(std::string(used.begin(), used.end()));
    }

    int n = j.at("states").get<int>();
    if (n <= 0) throw std::invalid_argument("dfa needs at least one state");
    Dfa d;
    d.alphabet = alphabet;
    d.state_count = n + 1;  // reserve a sink; dropped again by minimize if unused
    int sink = n;
    d.initial = j.at("initial").get<int>();
    if (d.initial < 0 || d.initial >= n) throw std::invalid_argument("initial state out of range");
    d.accepting.assign(static_cast<std::size_t>(d.state_count), false);
    for (const auto& entry : j.at("accepting")) {
        int q = entry.get<int>();
        if (q < 0 || q >= n) throw std::invalid_argument("accepting state out of range");
        d.accepting[static_cast<std::size_t>(q)] = true;
    }
    d.delta.assign(static_cast<std::size_t>(d.state_count) * alphabet.size(), sink);
    if (j.contains("delta"))
        for (const auto& [state, row] : j.at("delta").items()) {
            int q = std::stoi(state);
            if (q < 0 || q >= n) throw std::invalid_argument("delta state out of range: " + state);
            for (const auto& [sym, target] : row.items()) {
                if (sym.size() != 1 || alphabet.index(sym[0]) < 0)
                    throw std::invalid_argument("delta symbol '" + sym + "' is not in the alphabet");
                int t = target.get<int>();
                if (t < 0 || t >= n) throw std::invalid_argument("delta target out of range");
                d.delta[static_cast<std::size_t>(q) * alphabet.size() + alphabet.index(sym[0])] = t;
            }
        }
    return minimize(d);
}

nlohmann::json dfa_to_json(const Dfa& d) {
    nlohmann::json j;
    j["kind"] = "dfa";
    j["alphabet"] = alphabet_to_json(d.alphabet);
    j["states"] = d.state_count;
    j["initial"] = d.initial;
    nlohmann::json acc = nlohmann::json::array();
    for (int q = 0; q < d.state_count; ++q)
        if (d.accepting[static_cast<std::size_t>(q)]) acc.push_back(q);
    j["accepting"] = acc;
    nlohmann::json delta = nlohmann::json::object();
    for (int q = 0; q < d.state_count; ++q) {
        nlohmann::json row = nlohmann::json::object();
        for (int s = 0; s < d.alphabet.size(); ++s)
            row[std::string(1, d.alphabet.letter(s))] = d.next(q, s);
        delta[std::to_string(q)] = row;
    }
    j["delta"] = delta;
    return j;
}

LanguageSpec language_from_json(const nlohmann::json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "regex") {
        std::string expr = j.at("expr").get<std::string>();
        Alphabet alphabet =
            j.contains("alphabet") ? alphabet_from_json(j.at("alphabet")) : letters_used_in_regex(expr);
        return LanguageSpec::regex(std::move(expr), std::move(alphabet));
    }
    if (kind == "finite") {
        std::vector<Word> words;
        for (const auto& entry : j.at("words")) words.push_back(entry.get<std::string>());
        Alphabet alphabet =
            j.contains("alphabet") ? alphabet_from_json(j.at("alphabet")) : letters_in_words(words);
        return LanguageSpec::finite(std::move(words), std::move(alphabet));
    }
    if (kind == "dfa") return LanguageSpec::automaton(dfa_from_json(j));
    throw std::invalid_argument("unknown language kind \"" + kind + "\"");
}

nlohmann::json language_to_json(const LanguageSpec& spec) {
    switch (spec.kind) {
        case LanguageSpec::Kind::Regex: {
            nlohmann::json j;
            j["kind"] = "regex";
            j["alphabet"] = alphabet_to_json(spec.alphabet);
            j["expr"] = spec.expr;
            return j;
        }
        case LanguageSpec::Kind::Finite: {
            nlohmann::json j;
            j["kind"] = "finite";
            j["alphabet"] = alphabet_to_json(spec.alphabet);
            j["words"] = spec.words;
            return j;
        }
        case LanguageSpec::Kind::Dfa:
            return dfa_to_json(spec.dfa);
    }
    throw std::logic_error("unknown spec kind");
}

} // namespace subreg
