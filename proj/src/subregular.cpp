#include "subreg/subregular.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

#include "subreg/errors.hpp"

namespace subreg {

std::string_view family_name(Family f) {
    switch (f) {
        case Family::MON: return "MON";
        case Family::FIN: return "FIN";
        case Family::NIL: return "NIL";
        case Family::COMB: return "COMB";
        case Family::DEF: return "DEF";
        case Family::SYDEF: return "SYDEF";
        case Family::INF: return "INF";
        case Family::PRE: return "PRE";
        case Family::SUF: return "SUF";
        case Family::ORD: return "ORD";
        case Family::COMM: return "COMM";
        case Family::CIRC: return "CIRC";
        case Family::NC: return "NC";
        case Family::SF: return "SF";
        case Family::PS: return "PS";
        case Family::UF: return "UF";
        case Family::STAR: return "STAR";
        case Family::LCOM: return "LCOM";
        case Family::RCOM: return "RCOM";
        case Family::TWOCOM: return "2COM";
    }
    return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
    for (Family f : all_families)
        if (family_name(f) == name) return f;
    if (name == "TWOCOM") return Family::TWOCOM;
    return std::nullopt;
}

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "yes";
        case Verdict::No: return "no";
        case Verdict::Unknown: return "unknown";
    }
    return "?";
}

int TransitionMonoid::compose(int first, int then) const {
    const auto& f = elements[static_cast<std::size_t>(first)];
    const auto& g = elements[static_cast<std::size_t>(then)];
    std::vector<int> h(f.size());
    for (std::size_t q = 0; q < f.size(); ++q) h[q] = g[static_cast<std::size_t>(f[q])];
    // linear scan is fine at desk scale; monoids here are small
    for (std::size_t i = 0; i < elements.size(); ++i)
        if (elements[i] == h) return static_cast<int>(i);
    return -1;
}

TransitionMonoid transition_monoid(const Dfa& d, std::size_t cap) {
    TransitionMonoid m;
    m.state_count = d.state_count;

    std::map<std::vector<int>, int> ids;
    std::queue<int> work;
    auto intern = [&](std::vector<int> fn, const Word& w) {
        auto it = ids.find(fn);
        if (it != ids.end()) return it->second;
        if (m.elements.size() >= cap)
            throw ResourceError("transition monoid exceeds the cap of " + std::to_string(cap) + " elements");
        int id = static_cast<int>(m.elements.size());
        ids.emplace(fn, id);
        m.elements.push_back(std::move(fn));
        m.witnesses.push_back(w);
        work.push(id);
        return id;
    };

    std::vector<int> identity(static_cast<std::size_t>(d.state_count));
    for (int q = 0; q < d.state_count; ++q) identity[static_cast<std::size_t>(q)] = q;
    intern(std::move(identity), "");

    // letter maps, in alphabet order, so BFS yields shortlex-least witnesses
    std::vector<std::vector<int>> letter(static_cast<std::size_t>(d.alphabet.size()));
    for (int s = 0; s < d.alphabet.size(); ++s) {
        letter[static_cast<std::size_t>(s)].resize(static_cast<std::size_t>(d.state_count));
        for (int q = 0; q < d.state_count; ++q) letter[static_cast<std::size_t>(s)][static_cast<std::size_t>(q)] = d.next(q, s);
    }

    while (!work.empty()) {
        int id = work.front();
        work.pop();
        std::vector<int> base = m.elements[static_cast<std::size_t>(id)];
        Word w = m.witnesses[static_cast<std::size_t>(id)];
        for (int s = 0; s < d.alphabet.size(); ++s) {
            std::vector<int> composed(static_cast<std::size_t>(d.state_count));
            for (int q = 0; q < d.state_count; ++q)
                composed[static_cast<std::size_t>(q)] =
                    letter[static_cast<std::size_t>(s)][static_cast<std::size_t>(base[static_cast<std::size_t>(q)])];
            intern(std::move(composed), w + d.alphabet.letter(s));
        }
    }
    return m;
}

namespace {

std::string show(const Word& w) { return w.empty() ? std::string("~") : w; }

// Extend to the declared alphabet and canonicalize; the deciders below assume
// a minimal complete DFA over exactly `alphabet`.
Dfa prepared(const Dfa& lang, const Alphabet& alphabet) {
    if (!lang.alphabet.subset_of(alphabet))
        throw std::invalid_argument("language alphabet is not a subset of the declared alphabet");
    return extend_alphabet(lang, alphabet);
}

FamilyVerdict verdict(Family f, Verdict v, std::string evidence, Method m = Method::Decider,
                      bool caveat = false) {
    return FamilyVerdict{f, v, std::move(evidence), m, caveat};
}

} // namespace

FamilyVerdict is_monoidal(const Dfa& lang, const Alphabet& alphabet) {
    if (alphabet.empty()) throw std::invalid_argument("MON check needs a non-empty alphabet");
    Dfa m = prepared(lang, alphabet);
    Alphabet used = minimal_alphabet(m);
    if (used.empty())
        return verdict(Family::MON, Verdict::No, "no letter occurs in L (L is empty or {~})");

    // U* over the declared alphabet: accepting state looping on U, rest to sink
    Dfa ustar = empty_language(alphabet);
    ustar.state_count = 2;
    ustar.accepting = {true, false};
    ustar.delta.assign(2 * static_cast<std::size_t>(alphabet.size()), 1);
    for (int s = 0; s < alphabet.size(); ++s)
        if (used.contains(alphabet.letter(s))) ustar.delta[static_cast<std::size_t>(s)] = 0;
    ustar = minimize(ustar);

    if (equivalent(m, ustar))
        return verdict(Family::MON, Verdict::Yes, "L = {" + used.letters() + "}*");
    auto missing = difference_witness(ustar, m);
    return verdict(Family::MON, Verdict::No,
                   missing ? "{" + used.letters() + "}* contains " + show(*missing) + " but L does not"
                           : "L is a proper subset of no U*");
}

FamilyVerdict is_finite_family(const Dfa& lang, const Alphabet& alphabet) {
    Dfa m = prepared(lang, alphabet);
    if (auto n = word_count(m))
        return verdict(Family::FIN, Verdict::Yes, std::to_string(*n) + " words");
    return verdict(Family::FIN, Verdict::No, "a useful state lies on a cycle");
}

FamilyVerdict is_nilpotent(const Dfa& lang, const Alphabet& alphabet) {
    Dfa m = prepared(lang, alphabet);
    if (auto n = word_count(m))
        return verdict(Family::NIL, Verdict::Yes, "finite (" + std::to_string(*n) + " words)");
    if (auto n = word_count(complement(m)))
        return verdict(Family::NIL, Verdict::Yes, "co-finite (complement has " + std::to_string(*n) + " words)");
    return verdict(Family::NIL, Verdict::No, "L and its complement are both infinite");
}

FamilyVerdict is_combinational(const Dfa& lang, const Alphabet& alphabet) {
    Dfa m = prepared(lang, alphabet);

    // X = letters that end some word of L
    std::vector<bool> reach = reachable_states(m);
    std::string x;
    for (int s = 0; s < alphabet.size(); ++s) {
        bool ends = false;
        for (int q = 0; q < m.state_count && !ends; ++q)
            if (reach[static_cast<std::size_t>(q)] && m.accepting[static_cast<std::size_t>(m.next(q, s))]) ends = true;
        if (ends) x.push_back(alphabet.letter(s));
    }

    // V*X: two states keyed by "last letter in X"
    Dfa vx = empty_language(alphabet);
    vx.state_count = 2;
    vx.accepting = {false, true};
    vx.delta.assign(2 * static_cast<std::size_t>(alphabet.size()), 0);
    for (int s = 0; s < alphabet.size(); ++s) {
        int target = x.find(alphabet.letter(s)) != std::string::npos ? 1 : 0;
        vx.delta[static_cast<std::size_t>(s)] = target;
        vx.delta[static_cast<std::size_t>(alphabet.size() + s)] = target;
    }
    vx = minimize(vx);

    if (equivalent(m, vx))
        return verdict(Family::COMB, Verdict::Yes, "L = V*X with X = {" + x + "}");
    auto w = difference_witness(m, vx);
    if (!w) w = difference_witness(vx, m);
    return verdict(Family::COMB, Verdict::No,
                   "L differs from V*{" + x + "} at " + (w ? show(*w) : Word("?")));
}

FamilyVerdict is_definite(const Dfa& lang, const Alphabet& alphabet) {
    Dfa m = prepared(lang, alphabet);
    const int n = m.state_count;
    const int k = alphabet.size();

    // Pair graph on unordered state pairs; an edge {p,q} -> {p',q'} exists
    // when some letter maps the pair to a pair of still-distinct states.
    // L is definite iff this graph is acyclic (membership is then determined
    // by a bounded suffix).
    auto pair_id = [n](int p, int q) {
        if (p > q) std::swap(p, q);
        return p * n + q;
    };
    std::vector<int> color(static_cast<std::size_t>(n) * n, 0);
    std::vector<std::pair<int, int>> stack;
    for (int p0 = 0; p0 < n; ++p0)
        for (int q0 = p0 + 1; q0 < n; ++q0) {
            if (color[static_cast<std::size_t>(pair_id(p0, q0))] != 0) continue;
            stack.push_back({pair_id(p0, q0), 0});
            color[static_cast<std::size_t>(pair_id(p0, q0))] = 1;
            while (!stack.empty()) {
                auto& [id, s] = stack.back();
                if (s == k) {
                    color[static_cast<std::size_t>(id)] = 2;
                    stack.pop_back();
                    continue;
                }
                int p = id / n, q = id % n;
                int sym = s++;
                int np = m.next(p, sym), nq = m.next(q, sym);
                if (np == nq) continue;
                int nid = pair_id(np, nq);
                if (color[static_cast<std::size_t>(nid)] == 1) {
                    char letter = alphabet.letter(sym);
                    return verdict(Family::DEF, Verdict::No,
                                   std::string("state pair {") + std::to_string(np) + "," +
                                       std::to_string(nq) + "} recurs under '" + letter +
                                       "': no suffix length settles membership");
                }
                if (color[static_cast<std::size_t>(nid)] == 0) {
                    color[static_cast<std::size_t>(nid)] = 1;
                    stack.push_back({nid, 0});
                }
            }
        }
    return verdict(Family::DEF, Verdict::Yes, "state-pair graph is acyclic");
}

FamilyVerdict is_prefix_closed(const Dfa& lang, const Alphabet& alphabet) {
    Dfa m = prepared(lang, alphabet);
    // L = Pre(L) iff every useful state of the minimal DFA accepts.
    std::vector<bool> reach = reachable_states(m);
    std::vector<bool> co = co_reachable_states(m);
    for (int q = 0; q < m.state_count; ++q) {
        if (!reach[static_cast<std::size_t>(q)] || !co[static_cast<std::size_t>(q)]) continue;
        if (m.accepting[static_cast<std::size_t>(q)]) continue;
        Word p = access_word(m, q).value();
        Word s = acceptance_word(m, q).value();
        return verdict(Family::PRE, Verdict::No,
                       show(p + s) + " is in L but its prefix " + show(p) + " is not");
    }
    return verdict(Family::PRE, Verdict::Yes, "every useful state accepts");
}

FamilyVerdict is_suffix_closed(const Dfa& lang, const Alphabet& alphabet) {
    Dfa m = prepared(lang, alphabet);
    // L = Suf(L) iff L(q) is a subset of L for every reachable q.
    std::vector<bool> reach = reachable_states(m);
    for (int q = 0; q < m.state_count; ++q) {
        if (!reach[static_cast<std::size_t>(q)]) continue;
        Dfa from_q = m;
        from_q.initial = q;
        if (auto y = difference_witness(from_q, m)) {
            Word x = access_word(m, q).value();
            return verdict(Family::SUF, Verdict::No,
                           show(x + *y) + " is in L but its suffix " + show(*y) + " is not");
        }
    }
    return verdict(Family::SUF, Verdict::Yes, "every state language is contained in L");
}

FamilyVerdict is_infix_closed(const Dfa& lang, const Alphabet& alphabet) {
    // Infix-closed = prefix-closed and suffix-closed.
    FamilyVerdict pre = is_prefix_closed(lang, alphabet);
    if (pre.verdict == Verdict::No) return verdict(Family::INF, Verdict::No, pre.evidence);
    FamilyVerdict suf = is_suffix_closed(lang, alphabet);
    if (suf.verdict == Verdict::No) return verdict(Family::INF, Verdict::No, suf.evidence);
    return verdict(Family::INF, Verdict::Yes, "prefix-closed and suffix-closed");
}

FamilyVerdict is_ordered(const Dfa& lang, const Alphabet& alphabet, const DeciderLimits& limits) {
    Dfa m = prepared(lang, alphabet);
    const int n = m.state_count;
    if (n > limits.ord_state_cap)
        throw ResourceError("order search over " + std::to_string(n) + " states exceeds the cap of " +
                            std::to_string(limits.ord_state_cap));
    const int k = alphabet.size();

    // rel[p][q]: 0 unknown, 1 p<q, 2 p>q. Propagation keeps the relation a
    // strict partial order whose letter images are monotone.
    std::vector<char> rel(static_cast<std::size_t>(n) * n, 0);
    auto at = [n](std::vector<char>& r, int p, int q) -> char& { return r[static_cast<std::size_t>(p) * n + q]; };

    auto set_less = [&](auto&& self, std::vector<char>& r, int p, int q) -> bool {
        if (p == q) return false;
        char& cell = at(r, p, q);
        if (cell == 1) return true;
        if (cell == 2) return false;
        cell = 1;
        at(r, q, p) = 2;
        // transitivity: x < p implies x < q; q < y implies p < y
        for (int x = 0; x < n; ++x) {
            if (x != q && at(r, x, p) == 1 && !self(self, r, x, q)) return false;
            if (x != p && at(r, q, x) == 1 && !self(self, r, p, x)) return false;
        }
        // monotonicity of every letter image
        for (int s = 0; s < k; ++s) {
            int np = m.next(p, s), nq = m.next(q, s);
            if (np != nq && !self(self, r, np, nq)) return false;
        }
        return true;
    };

    auto search = [&](auto&& self, std::vector<char> r) -> bool {
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                if (at(r, p, q) != 0) continue;
                std::vector<char> branch = r;
                if (set_less(set_less, branch, p, q) && self(self, std::move(branch))) return true;
                branch = r;
                return set_less(set_less, branch, q, p) && self(self, std::move(branch));
            }
        rel = std::move(r);  // total and consistent
        return true;
    };

    if (search(search, rel)) {
        // read the order back for the evidence string
        std::vector<int> states(static_cast<std::size_t>(n));
        for (int q = 0; q < n; ++q) states[static_cast<std::size_t>(q)] = q;
        std::sort(states.begin(), states.end(),
                  [&](int p, int q) { return p != q && rel[static_cast<std::size_t>(p) * n + q] == 1; });
        std::string order;
        for (int q : states) {
            if (!order.empty()) order += " < ";
            order += "q" + std::to_string(q);
        }
        return verdict(Family::ORD, Verdict::Yes, "monotone order on the minimal DFA: " + order,
                       Method::Decider, true);
    }
    return verdict(Family::ORD, Verdict::No,
                   "no monotone total order on the " + std::to_string(n) + " minimal-DFA states",
                   Method::Decider, true);
}

FamilyVerdict is_commutative(const Dfa& lang, const Alphabet& alphabet) {
    Dfa m = prepared(lang, alphabet);
    // In the minimal DFA of a commutative language the letter actions commute.
    for (int q = 0; q < m.state_count; ++q)
        for (int a = 0; a < alphabet.size(); ++a)
            for (int b = a + 1; b < alphabet.size(); ++b) {
                int qab = m.next(m.next(q, a), b);
                int qba = m.next(m.next(q, b), a);
                if (qab == qba) continue;
                Word u = access_word(m, q).value_or("");
                Word z = distinguishing_word(m, qab, qba).value();
                Word w1 = u + alphabet.letter(a) + alphabet.letter(b) + z;
                Word w2 = u + alphabet.letter(b) + alphabet.letter(a) + z;
                if (!m.accepts(w1)) std::swap(w1, w2);
                return verdict(Family::COMM, Verdict::No,
                               show(w1) + " is in L but its permutation " + show(w2) + " is not");
            }
    return verdict(Family::COMM, Verdict::Yes, "letter actions commute on the minimal DFA");
}

FamilyVerdict is_circular(const Dfa& lang, const Alphabet& alphabet) {
    Dfa m = prepared(lang, alphabet);
    if (auto w = difference_witness(cyclic_shift(m), m))
        return verdict(Family::CIRC, Verdict::No,
                       "the circular shift " + show(*w) + " of a word of L is not in L");
    return verdict(Family::CIRC, Verdict::Yes, "closed under one-step rotation");
}

namespace {

struct OrbitCycle {
    int element;
    std::vector<int> states;
};

// First monoid element that cyclically permutes >= 2 distinct states.
std::optional<OrbitCycle> find_counter(const TransitionMonoid& m) {
    for (std::size_t t = 0; t < m.elements.size(); ++t) {
        const auto& fn = m.elements[t];
        for (int start = 0; start < m.state_count; ++start) {
            // follow the orbit of `start` until it repeats
            std::vector<int> seen_at(static_cast<std::size_t>(m.state_count), -1);
            std::vector<int> path;
            int q = start;
            while (seen_at[static_cast<std::size_t>(q)] < 0) {
                seen_at[static_cast<std::size_t>(q)] = static_cast<int>(path.size());
                path.push_back(q);
                q = fn[static_cast<std::size_t>(q)];
            }
            int cycle_start = seen_at[static_cast<std::size_t>(q)];
            int cycle_len = static_cast<int>(path.size()) - cycle_start;
            if (cycle_len >= 2)
                return OrbitCycle{static_cast<int>(t),
                                  {path.begin() + cycle_start, path.end()}};
        }
    }
    return std::nullopt;
}

} // namespace

FamilyVerdict is_noncounting(const Dfa& lang, const Alphabet& alphabet, const DeciderLimits& limits) {
    Dfa m = prepared(lang, alphabet);
    TransitionMonoid monoid = transition_monoid(m, limits.monoid_cap);
    if (auto counter = find_counter(monoid)) {
        std::string cycle;
        for (int q : counter->states) {
            if (!cycle.empty()) cycle += " -> ";
            cycle += "q" + std::to_string(q);
        }
        return verdict(Family::NC, Verdict::No,
                       "word " + show(monoid.witnesses[static_cast<std::size_t>(counter->element)]) +
                           " cyclically permutes states " + cycle);
    }
    return verdict(Family::NC, Verdict::Yes,
                   "counter-free (monoid of " + std::to_string(monoid.elements.size()) + " elements)");
}

std::optional<CounterWitness> noncounting_violation(const Dfa& lang, const DeciderLimits& limits) {
    Dfa m = extend_alphabet(lang, lang.alphabet);
    TransitionMonoid monoid = transition_monoid(m, limits.monoid_cap);
    auto counter = find_counter(monoid);
    if (!counter) return std::nullopt;

    // With k = |monoid|, t^k and t^{k+1} land on distinct cycle states, which
    // the minimal DFA can tell apart.
    const auto& fn = monoid.elements[static_cast<std::size_t>(counter->element)];
    std::size_t k = monoid.elements.size();
    int s0 = counter->states.front();
    int sk = s0, sk1;
    for (std::size_t i = 0; i < k; ++i) sk = fn[static_cast<std::size_t>(sk)];
    sk1 = fn[static_cast<std::size_t>(sk)];

    CounterWitness w;
    w.x = access_word(m, s0).value_or("");
    w.y = monoid.witnesses[static_cast<std::size_t>(counter->element)];
    w.z = distinguishing_word(m, sk, sk1).value();
    w.k = k;
    return w;
}

FamilyVerdict is_power_separating(const Dfa& lang, const Alphabet& alphabet, const DeciderLimits& limits) {
    Dfa m = prepared(lang, alphabet);
    TransitionMonoid monoid = transition_monoid(m, limits.monoid_cap);

    for (std::size_t t = 1; t < monoid.elements.size(); ++t) {
        // power sequence t, t^2, ... — record first-visit indices to find the cycle
        std::map<int, std::size_t> first_seen;
        std::vector<int> powers;
        int cur = static_cast<int>(t);
        std::size_t n = 1;
        while (!first_seen.count(cur)) {
            first_seen[cur] = n;
            powers.push_back(cur);
            cur = monoid.compose(cur, static_cast<int>(t));
            ++n;
        }
        std::size_t cycle_begin = first_seen[cur];
        // acceptance of x^n from the initial state must be constant on the cycle
        std::optional<bool> expected;
        std::size_t accept_exp = 0, reject_exp = 0;
        bool mixed = false;
        for (std::size_t i = cycle_begin - 1; i < powers.size(); ++i) {
            bool acc = m.accepting[static_cast<std::size_t>(
                monoid.apply(powers[i], m.initial))];
            if (!expected) {
                expected = acc;
                (acc ? accept_exp : reject_exp) = i + 1;
            } else if (acc != *expected) {
                (acc ? accept_exp : reject_exp) = i + 1;
                mixed = true;
                break;
            }
        }
        if (mixed) {
            const Word& x = monoid.witnesses[t];
            return verdict(Family::PS, Verdict::No,
                           "powers of x = " + show(x) + " alternate forever: x^" +
                               std::to_string(accept_exp) + " in L, x^" + std::to_string(reject_exp) +
                               " not in L, and both exponents recur beyond every m");
        }
    }
    return verdict(Family::PS, Verdict::Yes,
                   "every power sequence is eventually constant in acceptance");
}

FamilyVerdict is_star(const Dfa& lang, const Alphabet& alphabet) {
    Dfa m = prepared(lang, alphabet);
    // L = H* for some H iff lambda is in L and L.L is a subset of L
    // (then H = L works).
    if (!m.accepting[static_cast<std::size_t>(m.initial)])
        return verdict(Family::STAR, Verdict::No, "~ is not in L");
    if (auto w = difference_witness(concatenate(m, m), m))
        return verdict(Family::STAR, Verdict::No, show(*w) + " is in L.L but not in L");
    return verdict(Family::STAR, Verdict::Yes, "~ is in L and L.L is contained in L (L = L*)");
}

std::vector<FamilyVerdict> partial_rules(const Dfa& lang, const Alphabet& alphabet) {
    Dfa m = prepared(lang, alphabet);
    std::optional<std::uint64_t> n = word_count(m);
    std::vector<FamilyVerdict> out;

    if (n && *n >= 2)
        out.push_back(verdict(Family::UF, Verdict::No,
                              "finite with " + std::to_string(*n) +
                                  " words; a union-free language is infinite or has at most one word",
                              Method::PartialRule));
    else
        out.push_back(verdict(Family::UF, Verdict::Unknown, "no partial rule applies", Method::PartialRule));

    for (Family f : {Family::LCOM, Family::RCOM, Family::TWOCOM}) {
        if (n && *n >= 1)
            out.push_back(verdict(f, Verdict::No,
                                  "finite and non-empty; every non-empty comet language is infinite",
                                  Method::PartialRule));
        else
            out.push_back(verdict(f, Verdict::Unknown, "no partial rule applies", Method::PartialRule));
    }

    out.push_back(verdict(Family::SYDEF, Verdict::Unknown,
                          "no full decider; a certificate (E, H) can assert membership",
                          Method::PartialRule));
    return out;
}

FamilyVerdict symmetric_definite_certificate(const Dfa& lang, const Alphabet& alphabet,
                                             const LanguageSpec& e, const LanguageSpec& h) {
    Dfa m = prepared(lang, alphabet);
    Dfa ev = extend_alphabet(compile(e), alphabet);
    Dfa hv = extend_alphabet(compile(h), alphabet);
    Dfa evh = concatenate(concatenate(ev, universal_language(alphabet)), hv);
    if (equivalent(m, evh))
        return verdict(Family::SYDEF, Verdict::Yes, "L = E V* H for the given E and H");
    auto w = difference_witness(m, evh);
    if (!w) w = difference_witness(evh, m);
    return verdict(Family::SYDEF, Verdict::No,
                   "E V* H differs from L at " + (w ? show(*w) : Word("?")) + " for the given certificate");
}

FamilyVerdict decide(Family f, const Dfa& lang, const Alphabet& alphabet, const DeciderLimits& limits) {
    switch (f) {
        case Family::MON: return is_monoidal(lang, alphabet);
        case Family::FIN: return is_finite_family(lang, alphabet);
        case Family::NIL: return is_nilpotent(lang, alphabet);
        case Family::COMB: return is_combinational(lang, alphabet);
        case Family::DEF: return is_definite(lang, alphabet);
        case Family::INF: return is_infix_closed(lang, alphabet);
        case Family::PRE: return is_prefix_closed(lang, alphabet);
        case Family::SUF: return is_suffix_closed(lang, alphabet);
        case Family::ORD: return is_ordered(lang, alphabet, limits);
        case Family::COMM: return is_commutative(lang, alphabet);
        case Family::CIRC: return is_circular(lang, alphabet);
        case Family::NC: return is_noncounting(lang, alphabet, limits);
        case Family::SF: {
            FamilyVerdict v = is_noncounting(lang, alphabet, limits);
            v.family = Family::SF;
            return v;
        }
        case Family::PS: return is_power_separating(lang, alphabet, limits);
        case Family::STAR: return is_star(lang, alphabet);
        case Family::SYDEF:
        case Family::UF:
        case Family::LCOM:
        case Family::RCOM:
        case Family::TWOCOM: {
            for (FamilyVerdict& v : partial_rules(lang, alphabet))
                if (v.family == f) return std::move(v);
            break;
        }
    }
    throw std::logic_error("unhandled family");
}

std::vector<FamilyVerdict> classify(const Dfa& lang, const Alphabet& alphabet,
                                    std::span<const Family> families, const DeciderLimits& limits) {
    std::vector<FamilyVerdict> out;
    out.reserve(families.size());
    for (Family f : families) out.push_back(decide(f, lang, alphabet, limits));
    return out;
}

} // namespace subreg
