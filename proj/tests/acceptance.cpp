// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
//
//   1  witness verdicts reproduced exactly, under 5 s
//   2  external generation matches every closed form at bound 12, under 60 s
//   3  internal grammars: selection claims, oracle agreement, spot checks
//   4  hierarchy implications hold on the corpus plus 500 random DFAs
//   5  deciders agree with independent semantic oracles on 300 random DFAs
//   6  slice exactness and external-within-internal on sampled pairs

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <vector>

#include "subreg/harness.hpp"
#include "subreg/language.hpp"
#include "subreg/nfa.hpp"
#include "subreg/subregular.hpp"

using namespace subreg;
using namespace subreg::harness;

namespace {

int checks_failed = 0;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++checks_failed;
        std::printf("        mismatch: %s\n", what.c_str());
    }
}

Dfa rx(const char* expr, Alphabet a) { return compile(LanguageSpec::regex(expr, std::move(a))); }

bool verdict_is(const Dfa& lang, const Alphabet& alphabet, Family f, Verdict expected,
                const char* label) {
    FamilyVerdict v = decide(f, lang, alphabet);
    bool ok = v.verdict == expected;
    expect(ok, std::string(label) + " " + std::string(family_name(f)) + " expected " +
                   std::string(verdict_name(expected)) + " got " + std::string(verdict_name(v.verdict)));
    return ok;
}

// ---- criterion 1 -----------------------------------------------------------

bool criterion1() {
    auto start = std::chrono::steady_clock::now();
    int before = checks_failed;

    Alphabet ab("ab"), a1("a");
    Dfa pre_w = compile(LanguageSpec::finite({"ab", "a", ""}, ab));
    verdict_is(pre_w, ab, Family::PRE, Verdict::Yes, "{ab,a,~}");
    verdict_is(pre_w, ab, Family::SUF, Verdict::No, "{ab,a,~}");
    verdict_is(pre_w, ab, Family::FIN, Verdict::Yes, "{ab,a,~}");

    Dfa suf_w = compile(LanguageSpec::finite({"ab", "b", ""}, ab));
    verdict_is(suf_w, ab, Family::SUF, Verdict::Yes, "{ab,b,~}");
    verdict_is(suf_w, ab, Family::PRE, Verdict::No, "{ab,b,~}");

    Dfa inf_w = compile(LanguageSpec::finite({"ab", "a", "b", ""}, ab));
    verdict_is(inf_w, ab, Family::INF, Verdict::Yes, "{ab,a,b,~}");
    verdict_is(inf_w, ab, Family::CIRC, Verdict::No, "{ab,a,b,~}");
    verdict_is(inf_w, ab, Family::UF, Verdict::No, "{ab,a,b,~}");
    verdict_is(inf_w, ab, Family::TWOCOM, Verdict::No, "{ab,a,b,~}");

    Dfa inf_nc = infix_closure(rx("a(bb)(bb)*a", ab));
    verdict_is(inf_nc, ab, Family::INF, Verdict::Yes, "Inf(a(bb)+a)");
    verdict_is(inf_nc, ab, Family::NC, Verdict::No, "Inf(a(bb)+a)");

    Dfa comb = rx("(a|b)*b", ab);
    verdict_is(comb, ab, Family::COMB, Verdict::Yes, "(a|b)*b");
    verdict_is(comb, ab, Family::PRE, Verdict::No, "(a|b)*b");

    Dfa aastar = rx("(aa)*", a1);
    verdict_is(aastar, a1, Family::STAR, Verdict::Yes, "(aa)*");
    verdict_is(aastar, a1, Family::COMM, Verdict::Yes, "(aa)*");
    verdict_is(aastar, a1, Family::PS, Verdict::No, "(aa)*");

    VerificationReport report = verify_all();
    expect(report.all_passed(), "verify all has failures");

    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    expect(secs < 5.0, "witness suite took " + std::to_string(secs) + " s (limit 5)");
    return checks_failed == before;
}

// ---- criterion 2 -----------------------------------------------------------

bool criterion2() {
    auto start = std::chrono::steady_clock::now();
    int before = checks_failed;

    const char* ids[] = {"ec:pre_o_suf",  "ec:suf_o_pre",  "ec:inf_o_nc",  "ec:inf_o_sydef",
                         "ec:inf_o_circ", "ec:comb_o_pre", "ec:nil_o_pre", "ec:inf_o_star"};
    for (const char* id : ids) {
        LemmaReport r = verify_lemma(id, 12);
        expect(r.outcome == LemmaOutcome::Passed, std::string(id) + " did not pass");
        bool saw_slice = false;
        std::size_t selections_checked = 0;
        for (const auto& c : r.checks) {
            if (c.name.find("closed form") != std::string::npos) saw_slice = c.passed;
            if (c.name.find(": ") != std::string::npos && c.name.rfind("selection #", 0) == 0) {
                expect(c.passed, std::string(id) + " " + c.name + " failed");
                ++selections_checked;
            }
        }
        expect(saw_slice, std::string(id) + " closed-form slice equality missing or failed");
        expect(selections_checked == find_record(id)->grammar->grammar.selections.size(),
               std::string(id) + " does not claim a family for every selection");
    }

    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    expect(secs < 60.0, "EC suite took " + std::to_string(secs) + " s (limit 60)");
    return checks_failed == before;
}

// ---- criterion 3 -----------------------------------------------------------

bool criterion3() {
    int before = checks_failed;

    const char* ids[] = {"ic:suf_o_pre",   "ic:pre_o_suf",  "ic:inf_o_nc",
                         "ic:inf_o_sydef", "ic:inf_o_circ", "ic:inf_o_star"};
    for (const char* id : ids) {
        LemmaReport r = verify_lemma(id, 12);
        expect(r.outcome == LemmaOutcome::Passed, std::string(id) + " did not pass");
        bool saw_oracle = false;
        std::size_t selections_checked = 0;
        for (const auto& c : r.checks) {
            if (c.name.find("naive rewriter") != std::string::npos) saw_oracle = c.passed;
            if (c.name.rfind("selection #", 0) == 0 && c.name.find(": ") != std::string::npos) {
                expect(c.passed, std::string(id) + " " + c.name + " failed");
                ++selections_checked;
            }
        }
        expect(saw_oracle, std::string(id) + " oracle agreement missing or failed");
        expect(selections_checked == find_record(id)->grammar->grammar.selections.size(),
               std::string(id) + " does not claim a family for every selection");
    }

    // the quoted membership example: a c a b d is reachable from aab
    GrammarEngine engine(find_record("ic:suf_o_pre")->grammar->grammar);
    expect(engine.derives(DerivationMode::Internal, "aab", "acabd"), "aab does not derive acabd");

    return checks_failed == before;
}

// ---- criterion 4 -----------------------------------------------------------

bool criterion4() {
    int before = checks_failed;

    std::vector<CorpusEntry> bundled = witness_corpus();
    ImplicationReport properness = implication_corpus_check(bundled);
    expect(properness.unwitnessed_edges.empty(), "some hierarchy edge lacks a properness witness");

    std::vector<CorpusEntry> corpus = bundled;
    auto random = random_dfa_corpus(500, 4, 3, 0x5eed);
    corpus.insert(corpus.end(), random.begin(), random.end());
    ImplicationReport report = implication_corpus_check(corpus);
    for (const auto& v : report.violations) expect(false, v.label + ": " + v.details);
    expect(report.ok(), "implication violations on the corpus");

    return checks_failed == before;
}

// ---- criterion 5 -----------------------------------------------------------

// membership determined by the last k letters: every word of length k drives
// all reachable states to acceptance-agreeing targets
bool suffix_determined(const Dfa& d, int k) {
    std::vector<int> reachable;
    std::vector<bool> mask = reachable_states(d);
    for (int q = 0; q < d.state_count; ++q)
        if (mask[static_cast<std::size_t>(q)]) reachable.push_back(q);

    std::vector<Word> words{""};
    for (int len = 0; len < k; ++len) {
        std::vector<Word> next;
        for (const Word& w : words)
            for (int s = 0; s < d.alphabet.size(); ++s) next.push_back(w + d.alphabet.letter(s));
        words = std::move(next);
    }
    for (const Word& s : words) {
        bool first = true, acc = false;
        for (int q : reachable) {
            bool a = d.accepting[static_cast<std::size_t>(d.run(q, s))];
            if (first) {
                acc = a;
                first = false;
            } else if (a != acc) {
                return false;
            }
        }
    }
    return true;
}

bool criterion5() {
    int before = checks_failed;

    auto corpus = random_dfa_corpus(300, 3, 3, 0xdecade);
    for (const auto& entry : corpus) {
        Dfa d = compile(entry.language);
        const Alphabet& v = entry.language.alphabet;

        // closure deciders against closure-and-compare
        bool pre_decider = decide(Family::PRE, d, v).verdict == Verdict::Yes;
        expect(pre_decider == equivalent(d, prefix_closure(d)), entry.label + " PRE route mismatch");
        bool suf_decider = decide(Family::SUF, d, v).verdict == Verdict::Yes;
        expect(suf_decider == equivalent(d, suffix_closure(d)), entry.label + " SUF route mismatch");
        bool inf_decider = decide(Family::INF, d, v).verdict == Verdict::Yes;
        expect(inf_decider == equivalent(d, infix_closure(d)), entry.label + " INF route mismatch");

        // NC against brute-force membership with k = |monoid|
        TransitionMonoid monoid = transition_monoid(d, 1'000'000);
        std::size_t k = monoid.elements.size();
        bool nc = decide(Family::NC, d, v).verdict == Verdict::Yes;
        std::vector<Word> shorts{""};
        {
            std::vector<Word> layer{""};
            for (int len = 1; len <= 3; ++len) {
                std::vector<Word> next;
                for (const Word& w : layer)
                    for (int s = 0; s < v.size(); ++s) next.push_back(w + v.letter(s));
                shorts.insert(shorts.end(), next.begin(), next.end());
                layer = std::move(next);
            }
        }
        if (nc) {
            bool all_ok = true;
            for (const Word& y : shorts) {
                // x y^k z vs x y^{k+1} z via state maps
                std::vector<int> t(static_cast<std::size_t>(d.state_count));
                for (int q = 0; q < d.state_count; ++q) t[static_cast<std::size_t>(q)] = d.run(q, y);
                std::vector<int> tk(static_cast<std::size_t>(d.state_count));
                for (int q = 0; q < d.state_count; ++q) tk[static_cast<std::size_t>(q)] = q;
                for (std::size_t i = 0; i < k; ++i)
                    for (int q = 0; q < d.state_count; ++q)
                        tk[static_cast<std::size_t>(q)] =
                            t[static_cast<std::size_t>(tk[static_cast<std::size_t>(q)])];
                for (const Word& x : shorts) {
                    int qx = d.run(d.initial, x);
                    int qk = tk[static_cast<std::size_t>(qx)];
                    int qk1 = t[static_cast<std::size_t>(qk)];
                    for (const Word& z : shorts)
                        if (d.accepting[static_cast<std::size_t>(d.run(qk, z))] !=
                            d.accepting[static_cast<std::size_t>(d.run(qk1, z))])
                            all_ok = false;
                }
            }
            expect(all_ok, entry.label + " NC yes but a bounded counterexample exists");
        } else {
            auto witness = noncounting_violation(d);
            bool confirmed = false;
            if (witness) {
                Word yk;
                for (std::size_t i = 0; i < witness->k; ++i) yk += witness->y;
                confirmed = d.accepts(witness->x + yk + witness->z) !=
                            d.accepts(witness->x + yk + witness->y + witness->z);
            }
            expect(confirmed, entry.label + " NC no but the violation does not confirm");
        }

        // DEF against bounded suffix determination (k <= 8 suffices at <= 4
        // minimal states: pair-graph paths are shorter than C(4,2) + 1)
        bool def = decide(Family::DEF, d, v).verdict == Verdict::Yes;
        bool determined = false;
        for (int kk = 0; kk <= 8 && !determined; ++kk) determined = suffix_determined(d, kk);
        expect(def == determined, entry.label + " DEF verdict disagrees with the semantic check");

        // STAR against the star construction
        bool star_decider = decide(Family::STAR, d, v).verdict == Verdict::Yes;
        expect(star_decider == equivalent(d, star(d)), entry.label + " STAR route mismatch");
    }

    return checks_failed == before;
}

// ---- criterion 6 -----------------------------------------------------------

bool criterion6() {
    int before = checks_failed;

    std::vector<const GrammarSubject*> grammars;
    for (const auto& rec : registry())
        if (rec.grammar) grammars.push_back(&*rec.grammar);

    for (const GrammarSubject* gs : grammars) {
        GrammarEngine engine(gs->grammar);
        std::vector<Word> full = engine.generate(gs->mode, 10);
        for (int n = 0; n <= 10; ++n) {
            std::vector<Word> slice = engine.generate(gs->mode, n);
            std::vector<Word> expected;
            for (const Word& w : full)
                if (static_cast<int>(w.size()) <= n) expected.push_back(w);
            expect(slice == expected,
                   "slice at bound " + std::to_string(n) + " is not a prefix of the bound-10 slice");
            std::set<Word> oracle = naive_generate(gs->grammar, gs->mode, n);
            expect(std::set<Word>(slice.begin(), slice.end()) == oracle,
                   "oracle disagrees at bound " + std::to_string(n));
        }
    }

    // external successors within internal successors on sampled pairs
    std::mt19937_64 rng(0xfeedface);
    std::vector<std::vector<Word>> pools;
    std::vector<GrammarEngine> engines;
    for (const GrammarSubject* gs : grammars) {
        engines.emplace_back(gs->grammar);
        std::vector<Word> pool = engines.back().generate(DerivationMode::Internal, 8);
        std::vector<Word> ext = engines.back().generate(DerivationMode::External, 8);
        pool.insert(pool.end(), ext.begin(), ext.end());
        // a few arbitrary words over the alphabet as well
        const Alphabet& v = gs->grammar.alphabet;
        for (int i = 0; i < 20; ++i) {
            Word w;
            int len = static_cast<int>(rng() % 7);
            for (int j = 0; j < len; ++j)
                w += v.letter(static_cast<int>(rng() % static_cast<std::uint64_t>(v.size())));
            pool.push_back(w);
        }
        pools.push_back(std::move(pool));
    }
    for (int checked = 0; checked < 1000; ++checked) {
        std::size_t g = rng() % grammars.size();
        const Word& w = pools[g][rng() % pools[g].size()];
        std::vector<Word> ex = engines[g].step(DerivationMode::External, w);
        std::vector<Word> in = engines[g].step(DerivationMode::Internal, w);
        std::set<Word> inside(in.begin(), in.end());
        for (const Word& s : ex)
            expect(inside.count(s) == 1, "external successor " + s + " missing internally");
    }

    return checks_failed == before;
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        bool (*run)();
    };
    const Criterion criteria[] = {
        {"1 witness verdicts reproduced exactly (under 5 s)", criterion1},
        {"2 external generation matches every closed form at bound 12", criterion2},
        {"3 internal grammars: selections, oracle agreement, spot checks", criterion3},
        {"4 hierarchy implications hold on corpus + 500 random DFAs", criterion4},
        {"5 deciders agree with semantic oracles on 300 random DFAs", criterion5},
        {"6 slice exactness and external-within-internal sampling", criterion6},
    };

    bool all = true;
    for (const Criterion& c : criteria) {
        bool ok = c.run();
        std::printf("%s criterion %s\n", ok ? "PASS" : "FAIL", c.name);
        all = all && ok;
    }
    return all ? 0 : 1;
}
