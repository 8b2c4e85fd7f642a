#include "subreg/nfa.hpp"

#include <map>
#include <queue>

namespace subreg {

int Nfa::add_state() {
    edges.emplace_back();
    accepting.push_back(false);
    return state_count++;
}

namespace {

struct Fragment {
    int start;
    int accept;
};

Fragment build(Nfa& n, const Regex& r) {
    switch (r.kind) {
        case Regex::Kind::EmptySet: {
            // start and accept disconnected
            return {n.add_state(), n.add_state()};
        }
        case Regex::Kind::Epsilon: {
            Fragment f{n.add_state(), n.add_state()};
            n.add_epsilon(f.start, f.accept);
            return f;
        }
        case Regex::Kind::Literal: {
            Fragment f{n.add_state(), n.add_state()};
            n.add_edge(f.start, n.alphabet.index(r.symbol), f.accept);
            return f;
        }
        case Regex::Kind::Concat: {
            Fragment whole = build(n, r.parts.front());
            for (std::size_t i = 1; i < r.parts.size(); ++i) {
                Fragment next = build(n, r.parts[i]);
                n.add_epsilon(whole.accept, next.start);
                whole.accept = next.accept;
            }
            return whole;
        }
        case Regex::Kind::Alternation: {
            Fragment f{n.add_state(), n.add_state()};
            for (const Regex& part : r.parts) {
                Fragment b = build(n, part);
                n.add_epsilon(f.start, b.start);
                n.add_epsilon(b.accept, f.accept);
            }
            return f;
        }
        case Regex::Kind::Star: {
            Fragment inner = build(n, r.parts.front());
            Fragment f{n.add_state(), n.add_state()};
            n.add_epsilon(f.start, f.accept);
            n.add_epsilon(f.start, inner.start);
            n.add_epsilon(inner.accept, inner.start);
            n.add_epsilon(inner.accept, f.accept);
            return f;
        }
        case Regex::Kind::Plus: {
            Fragment inner = build(n, r.parts.front());
            Fragment f{n.add_state(), n.add_state()};
            n.add_epsilon(f.start, inner.start);
            n.add_epsilon(inner.accept, inner.start);
            n.add_epsilon(inner.accept, f.accept);
            return f;
        }
        case Regex::Kind::Optional: {
            Fragment inner = build(n, r.parts.front());
            Fragment f{n.add_state(), n.add_state()};
            n.add_epsilon(f.start, f.accept);
            n.add_epsilon(f.start, inner.start);
            n.add_epsilon(inner.accept, f.accept);
            return f;
        }
    }
    return {0, 0};  // unreachable
}

void close_over_epsilon(const Nfa& n, std::vector<bool>& states) {
    std::queue<int> work;
    for (int q = 0; q < n.state_count; ++q)
        if (states[q]) work.push(q);
    while (!work.empty()) {
        int q = work.front();
        work.pop();
        for (auto [sym, to] : n.edges[q])
            if (sym == Nfa::kEpsilon && !states[to]) {
                states[to] = true;
                work.push(to);
            }
    }
}

} // namespace

Nfa thompson(const Regex& r, const Alphabet& alphabet) {
    Nfa n;
    n.alphabet = alphabet;
    Fragment f = build(n, r);
    n.initial = {f.start};
    n.accepting[f.accept] = true;
    return n;
}

Nfa nfa_from_dfa(const Dfa& d) {
    Nfa n;
    n.alphabet = d.alphabet;
    for (int q = 0; q < d.state_count; ++q) n.add_state();
    for (int q = 0; q < d.state_count; ++q) {
        n.accepting[q] = d.accepting[q];
        for (int s = 0; s < d.alphabet.size(); ++s) n.add_edge(q, s, d.next(q, s));
    }
    n.initial = {d.initial};
    return n;
}

Dfa determinize(const Nfa& n) {
    const int k = n.alphabet.size();

    std::vector<bool> start(n.state_count, false);
    for (int q : n.initial) start[q] = true;
    close_over_epsilon(n, start);

    auto key_of = [](const std::vector<bool>& set) {
        std::vector<int> key;
        for (std::size_t i = 0; i < set.size(); ++i)
            if (set[i]) key.push_back(static_cast<int>(i));
        return key;
    };

    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<bool>> subsets;
    std::queue<int> work;

    auto intern = [&](std::vector<bool> set) {
        auto key = key_of(set);
        auto it = ids.find(key);
        if (it != ids.end()) return it->second;
        int id = static_cast<int>(subsets.size());
        ids.emplace(std::move(key), id);
        subsets.push_back(std::move(set));
        work.push(id);
        return id;
    };

    Dfa d;
    d.alphabet = n.alphabet;
    intern(std::move(start));

    std::vector<int> delta;
    std::vector<bool> accepting;
    while (!work.empty()) {
        int id = work.front();
        work.pop();
        std::vector<bool> current = subsets[static_cast<std::size_t>(id)];
        bool acc = false;
        for (int q = 0; q < n.state_count; ++q)
            if (current[q] && n.accepting[q]) acc = true;
        if (static_cast<int>(accepting.size()) <= id) accepting.resize(static_cast<std::size_t>(id) + 1);
        accepting[static_cast<std::size_t>(id)] = acc;
        delta.resize((static_cast<std::size_t>(id) + 1) * k, 0);
        for (int s = 0; s < k; ++s) {
            std::vector<bool> target(n.state_count, false);
            for (int q = 0; q < n.state_count; ++q)
                if (current[q])
                    for (auto [sym, to] : n.edges[q])
                        if (sym == s) target[to] = true;
            close_over_epsilon(n, target);
            int tid = intern(std::move(target));
            delta.resize(std::max(delta.size(), (static_cast<std::size_t>(id) + 1) * k), 0);
            delta[static_cast<std::size_t>(id) * k + s] = tid;
        }
    }

    d.state_count = static_cast<int>(subsets.size());
    d.initial = 0;
    accepting.resize(static_cast<std::size_t>(d.state_count));
    d.accepting = std::move(accepting);
    delta.resize(static_cast<std::size_t>(d.state_count) * k, 0);
    d.delta = std::move(delta);
    return minimize(d);
}

NfaMatcher::NfaMatcher(Nfa n) : nfa_(std::move(n)) {}

std::vector<bool> NfaMatcher::closure(std::vector<bool> states) const {
    close_over_epsilon(nfa_, states);
    return states;
}

bool NfaMatcher::matches(std::string_view word) const {
    std::vector<bool> current(nfa_.state_count, false);
    for (int q : nfa_.initial) current[q] = true;
    current = closure(std::move(current));
    for (char c : word) {
        int s = nfa_.alphabet.index(c);
        if (s < 0) return false;
        std::vector<bool> next(nfa_.state_count, false);
        bool any = false;
        for (int q = 0; q < nfa_.state_count; ++q)
            if (current[q])
                for (auto [sym, to] : nfa_.edges[q])
                    if (sym == s) { next[to] = true; any = true; }
        if (!any) return false;
        current = closure(std::move(next));
    }
    for (int q = 0; q < nfa_.state_count; ++q)
        if (current[q] && nfa_.accepting[q]) return true;
    return false;
}

} // namespace subreg
