#include "subreg/dfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

#include "subreg/nfa.hpp"

namespace subreg {

bool Dfa::accepts(std::string_view word) const {
    int q = run(initial, word);
    return q >= 0 && accepting[static_cast<std::size_t>(q)];
}

int Dfa::run(int from, std::string_view word) const {
    int q = from;
    for (char c : word) {
        int s = alphabet.index(c);
        if (s < 0) return -1;
        q = next(q, s);
    }
    return q;
}

Dfa empty_language(const Alphabet& alphabet) {
    Dfa d;
    d.alphabet = alphabet;
    d.state_count = 1;
    d.initial = 0;
    d.accepting = {false};
    d.delta.assign(static_cast<std::size_t>(alphabet.size()), 0);
    return d;
}

Dfa universal_language(const Alphabet& alphabet) {
    Dfa d = empty_language(alphabet);
    d.accepting[0] = true;
    return d;
}

std::vector<bool> reachable_states(const Dfa& a) {
    std::vector<bool> seen(static_cast<std::size_t>(a.state_count), false);
    std::queue<int> work;
    seen[static_cast<std::size_t>(a.initial)] = true;
    work.push(a.initial);
    while (!work.empty()) {
        int q = work.front();
        work.pop();
        for (int s = 0; s < a.alphabet.size(); ++s) {
            int t = a.next(q, s);
            if (!seen[static_cast<std::size_t>(t)]) {
                seen[static_cast<std::size_t>(t)] = true;
                work.push(t);
            }
        }
    }
    return seen;
}

std::vector<bool> co_reachable_states(const Dfa& a) {
    // BFS on reversed edges from the accepting states.
    std::vector<std::vector<int>> inv(static_cast<std::size_t>(a.state_count));
    for (int q = 0; q < a.state_count; ++q)
        for (int s = 0; s < a.alphabet.size(); ++s)
            inv[static_cast<std::size_t>(a.next(q, s))].push_back(q);
    std::vector<bool> seen(static_cast<std::size_t>(a.state_count), false);
    std::queue<int> work;
    for (int q = 0; q < a.state_count; ++q)
        if (a.accepting[static_cast<std::size_t>(q)]) {
            seen[static_cast<std::size_t>(q)] = true;
            work.push(q);
        }
    while (!work.empty()) {
        int q = work.front();
        work.pop();
        for (int p : inv[static_cast<std::size_t>(q)])
            if (!seen[static_cast<std::size_t>(p)]) {
                seen[static_cast<std::size_t>(p)] = true;
                work.push(p);
            }
    }
    return seen;
}

namespace {

// Restrict to reachable states; the automaton stays complete.
Dfa trim_unreachable(const Dfa& a) {
    std::vector<bool> reach = reachable_states(a);
    std::vector<int> remap(static_cast<std::size_t>(a.state_count), -1);
    int n = 0;
    for (int q = 0; q < a.state_count; ++q)
        if (reach[static_cast<std::size_t>(q)]) remap[static_cast<std::size_t>(q)] = n++;
    if (n == a.state_count) return a;
    Dfa d;
    d.alphabet = a.alphabet;
    d.state_count = n;
    d.initial = remap[static_cast<std::size_t>(a.initial)];
    d.accepting.assign(static_cast<std::size_t>(n), false);
    d.delta.assign(static_cast<std::size_t>(n) * a.alphabet.size(), 0);
    for (int q = 0; q < a.state_count; ++q) {
        int nq = remap[static_cast<std::size_t>(q)];
        if (nq < 0) continue;
        d.accepting[static_cast<std::size_t>(nq)] = a.accepting[static_cast<std::size_t>(q)];
        for (int s = 0; s < a.alphabet.size(); ++s)
            d.delta[static_cast<std::size_t>(nq) * a.alphabet.size() + s] =
                remap[static_cast<std::size_t>(a.next(q, s))];
    }
    return d;
}

// Hopcroft partition refinement on a complete, all-reachable DFA.
// Returns the block id of every state.
std::vector<int> refine(const Dfa& a) {
    const int n = a.state_count;
    const int k = a.alphabet.size();

    std::vector<std::vector<std::vector<int>>> inv(
        static_cast<std::size_t>(k), std::vector<std::vector<int>>(static_cast<std::size_t>(n)));
    for (int q = 0; q < n; ++q)
        for (int s = 0; s < k; ++s)
            inv[static_cast<std::size_t>(s)][static_cast<std::size_t>(a.next(q, s))].push_back(q);

    std::vector<int> block_of(static_cast<std::size_t>(n));
    std::vector<std::vector<int>> blocks;
    {
        std::vector<int> acc, rej;
        for (int q = 0; q < n; ++q)
            (a.accepting[static_cast<std::size_t>(q)] ? acc : rej).push_back(q);
        if (!acc.empty()) blocks.push_back(std::move(acc));
        if (!rej.empty()) blocks.push_back(std::move(rej));
        for (std::size_t b = 0; b < blocks.size(); ++b)
            for (int q : blocks[b]) block_of[static_cast<std::size_t>(q)] = static_cast<int>(b);
    }

    std::deque<std::pair<int, int>> worklist;  // (block, symbol)
    std::set<std::pair<int, int>> queued;
    auto push = [&](int b, int s) {
        if (queued.insert({b, s}).second) worklist.emplace_back(b, s);
    };
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (int s = 0; s < k; ++s) push(static_cast<int>(b), s);

    std::vector<int> hit_count(blocks.size());
    while (!worklist.empty()) {
        auto [splitter, sym] = worklist.front();
        worklist.pop_front();
        queued.erase({splitter, sym});

        // X = delta^{-1}(splitter) under sym, grouped by current block
        std::map<int, std::vector<int>> touched;
        for (int target : blocks[static_cast<std::size_t>(splitter)])
            for (int p : inv[static_cast<std::size_t>(sym)][static_cast<std::size_t>(target)])
                touched[block_of[static_cast<std::size_t>(p)]].push_back(p);

        for (auto& [b, inside] : touched) {
            auto& members = blocks[static_cast<std::size_t>(b)];
            if (inside.size() == members.size()) continue;  // nothing to split

            std::sort(inside.begin(), inside.end());
            std::vector<int> outside;
            for (int q : members)
                if (!std::binary_search(inside.begin(), inside.end(), q)) outside.push_back(q);

            int nb = static_cast<int>(blocks.size());
            members = inside;
            blocks.push_back(outside);
            for (int q : blocks.back()) block_of[static_cast<std::size_t>(q)] = nb;

            for (int s = 0; s < k; ++s) {
                if (queued.count({b, s})) {
                    push(nb, s);
                } else {
                    // queue the smaller half
                    push(inside.size() <= outside.size() ? b : nb, s);
                }
            }
        }
    }
    return block_of;
}

} // namespace

Dfa minimize(const Dfa& a) {
    Dfa t = trim_unreachable(a);
    std::vector<int> block_of = refine(t);
    const int k = t.alphabet.size();

    // Canonical numbering: BFS over blocks from the initial block, symbols in
    // alphabet order.
    std::vector<int> canon(block_of.size(), -1);
    std::vector<int> order;
    std::vector<int> rep;  // representative state per canonical id
    auto visit = [&](int block, int state) {
        if (canon[static_cast<std::size_t>(block)] >= 0) return;
        canon[static_cast<std::size_t>(block)] = static_cast<int>(order.size());
        order.push_back(block);
        rep.push_back(state);
    };
    visit(block_of[static_cast<std::size_t>(t.initial)], t.initial);
    for (std::size_t i = 0; i < order.size(); ++i) {
        int state = rep[i];
        for (int s = 0; s < k; ++s) {
            int target = t.next(state, s);
            visit(block_of[static_cast<std::size_t>(target)], target);
        }
    }

    Dfa d;
    d.alphabet = t.alphabet;
    d.state_count = static_cast<int>(order.size());
    d.initial = 0;
    d.accepting.assign(order.size(), false);
    d.delta.assign(order.size() * static_cast<std::size_t>(k), 0);
    for (std::size_t i = 0; i < order.size(); ++i) {
        int state = rep[i];
        d.accepting[i] = t.accepting[static_cast<std::size_t>(state)];
        for (int s = 0; s < k; ++s)
            d.delta[i * static_cast<std::size_t>(k) + s] =
                canon[static_cast<std::size_t>(block_of[static_cast<std::size_t>(t.next(state, s))])];
    }
    return d;
}

namespace {

void require_same_alphabet(const Dfa& a, const Dfa& b) {
    if (!(a.alphabet == b.alphabet))
        throw std::invalid_argument("alphabet mismatch: '" + a.alphabet.letters() + "' vs '" +
                                    b.alphabet.letters() + "'");
}

} // namespace

Dfa boolean_op(const Dfa& a, const Dfa& b, BoolOp op) {
    require_same_alphabet(a, b);
    const int k = a.alphabet.size();
    Dfa d;
    d.alphabet = a.alphabet;
    d.state_count = a.state_count * b.state_count;
    d.initial = a.initial * b.state_count + b.initial;
    d.accepting.assign(static_cast<std::size_t>(d.state_count), false);
    d.delta.assign(static_cast<std::size_t>(d.state_count) * k, 0);
    for (int p = 0; p < a.state_count; ++p)
        for (int q = 0; q < b.state_count; ++q) {
            int id = p * b.state_count + q;
            bool pa = a.accepting[static_cast<std::size_t>(p)];
            bool qa = b.accepting[static_cast<std::size_t>(q)];
            bool acc = false;
            switch (op) {
                case BoolOp::Union: acc = pa || qa; break;
                case BoolOp::Intersection: acc = pa && qa; break;
                case BoolOp::Difference: acc = pa && !qa; break;
            }
            d.accepting[static_cast<std::size_t>(id)] = acc;
            for (int s = 0; s < k; ++s)
                d.delta[static_cast<std::size_t>(id) * k + s] = a.next(p, s) * b.state_count + b.next(q, s);
        }
    return minimize(d);
}

Dfa complement(const Dfa& a) {
    Dfa d = a;
    for (std::size_t i = 0; i < d.accepting.size(); ++i) d.accepting[i] = !d.accepting[i];
    return minimize(d);
}

Dfa concatenate(const Dfa& a, const Dfa& b) {
    require_same_alphabet(a, b);
    Nfa n;
    n.alphabet = a.alphabet;
    for (int i = 0; i < a.state_count + b.state_count; ++i) n.add_state();
    auto bid = [&](int q) { return a.state_count + q; };
    for (int q = 0; q < a.state_count; ++q)
        for (int s = 0; s < a.alphabet.size(); ++s) n.add_edge(q, s, a.next(q, s));
    for (int q = 0; q < b.state_count; ++q)
        for (int s = 0; s < b.alphabet.size(); ++s) n.add_edge(bid(q), s, bid(b.next(q, s)));
    for (int q = 0; q < a.state_count; ++q)
        if (a.accepting[static_cast<std::size_t>(q)]) n.add_epsilon(q, bid(b.initial));
    for (int q = 0; q < b.state_count; ++q)
        n.accepting[static_cast<std::size_t>(bid(q))] = b.accepting[static_cast<std::size_t>(q)];
    n.initial = {a.initial};
    return determinize(n);
}

Dfa star(const Dfa& a) {
    Nfa n = nfa_from_dfa(a);
    int hub = n.add_state();
    n.accepting[static_cast<std::size_t>(hub)] = true;
    n.add_epsilon(hub, a.initial);
    for (int q = 0; q < a.state_count; ++q)
        if (a.accepting[static_cast<std::size_t>(q)]) n.add_epsilon(q, hub);
    for (int q = 0; q < a.state_count; ++q) n.accepting[static_cast<std::size_t>(q)] = false;
    n.initial = {hub};
    return determinize(n);
}

Dfa prefix_closure(const Dfa& a) {
    Dfa d = a;
    std::vector<bool> co = co_reachable_states(a);
    for (int q = 0; q < d.state_count; ++q) d.accepting[static_cast<std::size_t>(q)] = co[static_cast<std::size_t>(q)];
    return minimize(d);
}

Dfa suffix_closure(const Dfa& a) {
    std::vector<bool> reach = reachable_states(a);
    std::vector<bool> co = co_reachable_states(a);
    Nfa n = nfa_from_dfa(a);
    n.initial.clear();
    for (int q = 0; q < a.state_count; ++q)
        if (reach[static_cast<std::size_t>(q)] && co[static_cast<std::size_t>(q)]) n.initial.push_back(q);
    return determinize(n);
}

Dfa infix_closure(const Dfa& a) { return prefix_closure(suffix_closure(a)); }

Dfa cyclic_shift(const Dfa& a) {
    std::vector<bool> reach = reachable_states(a);
    std::vector<bool> co = co_reachable_states(a);
    Dfa result = empty_language(a.alphabet);
    for (int q = 0; q < a.state_count; ++q) {
        if (!reach[static_cast<std::size_t>(q)] || !co[static_cast<std::size_t>(q)]) continue;
        Dfa from_q = a;
        from_q.initial = q;
        from_q = minimize(from_q);
        Dfa to_q = a;
        to_q.accepting.assign(static_cast<std::size_t>(a.state_count), false);
        to_q.accepting[static_cast<std::size_t>(q)] = true;
        to_q = minimize(to_q);
        result = boolean_op(result, concatenate(from_q, to_q), BoolOp::Union);
    }
    return result;
}

namespace {

// BFS over the product of a and b; returns the shortlex-least word reaching a
// pair that satisfies `goal`, or nullopt.
template <typename Goal>
std::optional<Word> pair_search(const Dfa& a, const Dfa& b, Goal goal) {
    const int k = a.alphabet.size();
    std::vector<int> parent(static_cast<std::size_t>(a.state_count) * b.state_count, -2);
    std::vector<char> via(static_cast<std::size_t>(a.state_count) * b.state_count, 0);
    auto id = [&](int p, int q) { return static_cast<std::size_t>(p) * b.state_count + q; };
    std::queue<std::pair<int, int>> work;

    auto emit = [&](int p, int q) {
        Word w;
        std::size_t cur = id(p, q);
        while (parent[cur] >= 0) {
            w.push_back(via[cur]);
            cur = static_cast<std::size_t>(parent[cur]);
        }
        std::reverse(w.begin(), w.end());
        return w;
    };

    parent[id(a.initial, b.initial)] = -1;
    if (goal(a.initial, b.initial)) return emit(a.initial, b.initial);
    work.push({a.initial, b.initial});
    while (!work.empty()) {
        auto [p, q] = work.front();
        work.pop();
        for (int s = 0; s < k; ++s) {
            int np = a.next(p, s), nq = b.next(q, s);
            if (parent[id(np, nq)] != -2) continue;
            parent[id(np, nq)] = static_cast<int>(id(p, q));
            via[id(np, nq)] = a.alphabet.letter(s);
            if (goal(np, nq)) return emit(np, nq);
            work.push({np, nq});
        }
    }
    return std::nullopt;
}

} // namespace

bool equivalent(const Dfa& a, const Dfa& b) {
    require_same_alphabet(a, b);
    auto w = pair_search(a, b, [&](int p, int q) {
        return a.accepting[static_cast<std::size_t>(p)] != b.accepting[static_cast<std::size_t>(q)];
    });
    return !w.has_value();
}

bool subset_of(const Dfa& a, const Dfa& b) { return !difference_witness(a, b).has_value(); }

std::optional<Word> difference_witness(const Dfa& a, const Dfa& b) {
    require_same_alphabet(a, b);
    return pair_search(a, b, [&](int p, int q) {
        return a.accepting[static_cast<std::size_t>(p)] && !b.accepting[static_cast<std::size_t>(q)];
    });
}

std::vector<Word> enumerate_words(const Dfa& a, int max_len) {
    // Shortest accepted-word distance per state, for pruning dead prefixes.
    std::vector<int> dist(static_cast<std::size_t>(a.state_count), -1);
    {
        std::vector<std::vector<int>> inv(static_cast<std::size_t>(a.state_count));
        for (int q = 0; q < a.state_count; ++q)
            for (int s = 0; s < a.alphabet.size(); ++s)
                inv[static_cast<std::size_t>(a.next(q, s))].push_back(q);
        std::queue<int> work;
        for (int q = 0; q < a.state_count; ++q)
            if (a.accepting[static_cast<std::size_t>(q)]) {
                dist[static_cast<std::size_t>(q)] = 0;
                work.push(q);
            }
        while (!work.empty()) {
            int q = work.front();
            work.pop();
            for (int p : inv[static_cast<std::size_t>(q)])
                if (dist[static_cast<std::size_t>(p)] < 0) {
                    dist[static_cast<std::size_t>(p)] = dist[static_cast<std::size_t>(q)] + 1;
                    work.push(p);
                }
        }
    }

    std::vector<Word> out;
    Word prefix;
    auto walk = [&](auto&& self, int q) -> void {
        if (a.accepting[static_cast<std::size_t>(q)]) out.push_back(prefix);
        if (static_cast<int>(prefix.size()) == max_len) return;
        int budget = max_len - static_cast<int>(prefix.size()) - 1;
        for (int s = 0; s < a.alphabet.size(); ++s) {
            int t = a.next(q, s);
            if (dist[static_cast<std::size_t>(t)] < 0 || dist[static_cast<std::size_t>(t)] > budget) continue;
            prefix.push_back(a.alphabet.letter(s));
            self(self, t);
            prefix.pop_back();
        }
    };
    if (max_len >= 0) walk(walk, a.initial);
    std::sort(out.begin(), out.end(), Shortlex(a.alphabet));
    return out;
}

namespace {

std::vector<bool> useful_states(const Dfa& a) {
    std::vector<bool> reach = reachable_states(a);
    std::vector<bool> co = co_reachable_states(a);
    std::vector<bool> u(static_cast<std::size_t>(a.state_count), false);
    for (int q = 0; q < a.state_count; ++q)
        u[static_cast<std::size_t>(q)] = reach[static_cast<std::size_t>(q)] && co[static_cast<std::size_t>(q)];
    return u;
}

// Cycle detection among useful states (iterative three-color DFS).
bool has_useful_cycle(const Dfa& a, const std::vector<bool>& useful) {
    std::vector<int> color(static_cast<std::size_t>(a.state_count), 0);
    for (int start = 0; start < a.state_count; ++start) {
        if (!useful[static_cast<std::size_t>(start)] || color[static_cast<std::size_t>(start)] != 0) continue;
        std::vector<std::pair<int, int>> stack{{start, 0}};
        color[static_cast<std::size_t>(start)] = 1;
        while (!stack.empty()) {
            auto& [q, s] = stack.back();
            if (s == a.alphabet.size()) {
                color[static_cast<std::size_t>(q)] = 2;
                stack.pop_back();
                continue;
            }
            int t = a.next(q, s++);
            if (!useful[static_cast<std::size_t>(t)]) continue;
            if (color[static_cast<std::size_t>(t)] == 1) return true;
            if (color[static_cast<std::size_t>(t)] == 0) {
                color[static_cast<std::size_t>(t)] = 1;
                stack.push_back({t, 0});
            }
        }
    }
    return false;
}

} // namespace

bool is_finite_language(const Dfa& a) { return !has_useful_cycle(a, useful_states(a)); }

std::optional<std::uint64_t> word_count(const Dfa& a) {
    std::vector<bool> useful = useful_states(a);
    if (has_useful_cycle(a, useful)) return std::nullopt;
    if (!useful[static_cast<std::size_t>(a.initial)]) return 0;  // empty language

    // Accepted-path count from each useful state over the acyclic useful part.
    std::vector<std::uint64_t> memo(static_cast<std::size_t>(a.state_count), 0);
    std::vector<bool> done(static_cast<std::size_t>(a.state_count), false);
    auto count = [&](auto&& self, int q) -> std::uint64_t {
        if (done[static_cast<std::size_t>(q)]) return memo[static_cast<std::size_t>(q)];
        done[static_cast<std::size_t>(q)] = true;
        std::uint64_t total = a.accepting[static_cast<std::size_t>(q)] ? 1 : 0;
        for (int s = 0; s < a.alphabet.size(); ++s) {
            int t = a.next(q, s);
            if (useful[static_cast<std::size_t>(t)]) total += self(self, t);
        }
        memo[static_cast<std::size_t>(q)] = total;
        return total;
    };
    return count(count, a.initial);
}

Alphabet minimal_alphabet(const Dfa& a) {
    std::vector<bool> reach = reachable_states(a);
    std::vector<bool> co = co_reachable_states(a);
    std::string letters;
    for (int s = 0; s < a.alphabet.size(); ++s) {
        bool used = false;
        for (int q = 0; q < a.state_count && !used; ++q)
            if (reach[static_cast<std::size_t>(q)] && co[static_cast<std::size_t>(a.next(q, s))]) used = true;
        if (used) letters.push_back(a.alphabet.letter(s));
    }
    return Alphabet(letters);
}

Dfa extend_alphabet(const Dfa& a, const Alphabet& bigger) {
    if (!a.alphabet.subset_of(bigger))
        throw std::invalid_argument("extend_alphabet: target alphabet does not contain the source");
    if (a.alphabet == bigger) return minimize(a);
    Dfa d;
    d.alphabet = bigger;
    d.state_count = a.state_count + 1;  // fresh sink for the new letters
    int sink = a.state_count;
    d.initial = a.initial;
    d.accepting.assign(static_cast<std::size_t>(d.state_count), false);
    for (int q = 0; q < a.state_count; ++q)
        d.accepting[static_cast<std::size_t>(q)] = a.accepting[static_cast<std::size_t>(q)];
    d.delta.assign(static_cast<std::size_t>(d.state_count) * bigger.size(), sink);
    for (int q = 0; q < a.state_count; ++q)
        for (int s = 0; s < a.alphabet.size(); ++s)
            d.delta[static_cast<std::size_t>(q) * bigger.size() + bigger.index(a.alphabet.letter(s))] =
                a.next(q, s);
    return minimize(d);
}

std::optional<Word> access_word(const Dfa& a, int target) {
    Dfa b = a;
    b.accepting.assign(static_cast<std::size_t>(a.state_count), false);
    b.accepting[static_cast<std::size_t>(target)] = true;
    return pair_search(b, b, [&](int p, int) { return p == target; });
}

std::optional<Word> acceptance_word(const Dfa& a, int from) {
    Dfa b = a;
    b.initial = from;
    return pair_search(b, b, [&](int p, int) { return a.accepting[static_cast<std::size_t>(p)]; });
}

std::optional<Word> distinguishing_word(const Dfa& a, int p, int q) {
    Dfa from_p = a;
    from_p.initial = p;
    Dfa from_q = a;
    from_q.initial = q;
    return pair_search(from_p, from_q, [&](int x, int y) {
        return a.accepting[static_cast<std::size_t>(x)] != a.accepting[static_cast<std::size_t>(y)];
    });
}

} // namespace subreg
