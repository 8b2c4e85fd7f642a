#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "subreg/contextual.hpp"
#include "subreg/errors.hpp"
#include "subreg/harness.hpp"

using namespace subreg;

namespace {

// the ic:suf_o_pre grammar: ({a,b,c,d}, {{ab,b,~} -> (c,d)}, {aab})
ContextualGrammar suffix_selection_grammar() {
    ContextualGrammar g;
    g.alphabet = Alphabet("abcd");
    g.axioms = {"aab"};
    g.selections = {{LanguageSpec::finite({"ab", "b", ""}, Alphabet("ab")), {{"c", "d"}}}};
    return g;
}

// the ec:pre_o_suf grammar: ({a,b}, {Pre(a+b+) -> (a,b), b* -> (~,b)}, {ab,b})
ContextualGrammar prefix_selection_grammar() {
    ContextualGrammar g;
    g.alphabet = Alphabet("ab");
    g.axioms = {"ab", "b"};
    g.selections = {{LanguageSpec::regex("a*|aa*b*", Alphabet("ab")), {{"a", "b"}}},
                    {LanguageSpec::regex("b*", Alphabet("b")), {{"", "b"}}}};
    return g;
}

} // namespace

TEST_CASE("validation names the offending component") {
    ContextualGrammar g = suffix_selection_grammar();
    CHECK(validate(g).empty());

    ContextualGrammar empty_context = g;
    empty_context.selections[0].contexts.push_back({"", ""});
    auto violations = validate(empty_context);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].find("empty context") != std::string::npos);

    ContextualGrammar bad_selection = g;
    bad_selection.selections[0].selection = LanguageSpec::regex("a*|d*", Alphabet("ad"));
    bad_selection.alphabet = Alphabet("abc");
    violations = validate(bad_selection);
    CHECK_FALSE(violations.empty());
    CHECK(violations[0].find("selection alphabet") != std::string::npos);

    ContextualGrammar no_axiom = g;
    no_axiom.axioms.clear();
    CHECK_FALSE(validate(no_axiom).empty());

    ContextualGrammar bad_axiom = g;
    bad_axiom.axioms = {"xyz"};
    CHECK_FALSE(validate(bad_axiom).empty());

    CHECK_THROWS_AS(GrammarEngine{no_axiom}, std::invalid_argument);
}

TEST_CASE("grammar length measures") {
    GrammarLengths l = lengths(suffix_selection_grammar());
    CHECK(l.axioms == 3);
    CHECK(l.contexts == 2);
    CHECK(l.total == 6);

    // ec:inf_o_nc: axiom cc; contexts (~,c), (b,b), (a,a)
    ContextualGrammar g;
    g.alphabet = Alphabet("abc");
    g.axioms = {"cc"};
    g.selections = {{LanguageSpec::regex("c*", Alphabet("c")), {{"", "c"}, {"b", "b"}}},
                    {LanguageSpec::regex("a*", Alphabet("a")), {{"a", "a"}}}};
    l = lengths(g);
    CHECK(l.axioms == 2);
    CHECK(l.contexts == 2);
    CHECK(l.total == 5);

    ContextualGrammar tiny;
    tiny.alphabet = Alphabet("a");
    tiny.axioms = {""};
    tiny.selections = {{LanguageSpec::regex("a*", Alphabet("a")), {{"a", ""}}}};
    l = lengths(tiny);
    CHECK(l.axioms == 0);
    CHECK(l.contexts == 1);
    CHECK(l.total == 2);
}

TEST_CASE("external step wraps the whole word") {
    GrammarEngine engine(prefix_selection_grammar());
    CHECK(engine.step(DerivationMode::External, "ab") == std::vector<Word>{"aabb"});
    CHECK(engine.step(DerivationMode::External, "b") == std::vector<Word>{"bb"});
    // a word in no selection language has no successors
    CHECK(engine.step(DerivationMode::External, "ba").empty());
    CHECK_THROWS_AS(engine.step(DerivationMode::External, "xy"), std::invalid_argument);
}

TEST_CASE("internal step wraps every selected infix") {
    GrammarEngine engine(suffix_selection_grammar());
    std::vector<Word> got = engine.step(DerivationMode::Internal, "aab");

    // brute-force oracle over all splits x1 x2 x3 of aab with x2 in {ab,b,~}
    std::set<Word> expected;
    const Word w = "aab";
    const std::set<Word> selection = {"ab", "b", ""};
    for (std::size_t i = 0; i <= w.size(); ++i)
        for (std::size_t j = i; j <= w.size(); ++j)
            if (selection.count(w.substr(i, j - i)))
                expected.insert(w.substr(0, i) + "c" + w.substr(i, j - i) + "d" + w.substr(j));

    CHECK(std::set<Word>(got.begin(), got.end()) == expected);
    CHECK(expected == std::set<Word>{"acabd", "aacbd", "cdaab", "acdab", "aacdb", "aabcd"});
}

TEST_CASE("external successors are internal successors") {
    for (const auto& rec : harness::registry()) {
        if (!rec.grammar) continue;
        GrammarEngine engine(rec.grammar->grammar);
        for (const Word& w : engine.generate(rec.grammar->mode, 7)) {
            std::vector<Word> ex = engine.step(DerivationMode::External, w);
            std::vector<Word> in = engine.step(DerivationMode::Internal, w);
            std::set<Word> inside(in.begin(), in.end());
            for (const Word& s : ex) CHECK(inside.count(s) == 1);
        }
    }
}

TEST_CASE("external successors contain the source word as an infix") {
    for (const auto& rec : harness::registry()) {
        if (!rec.grammar) continue;
        GrammarEngine engine(rec.grammar->grammar);
        for (const Word& w : engine.generate(DerivationMode::External, 8))
            for (const Word& s : engine.step(DerivationMode::External, w))
                CHECK(s.find(w) != Word::npos);
    }
}

TEST_CASE("length monotonicity of steps") {
    GrammarEngine engine(suffix_selection_grammar());
    for (const Word& w : engine.generate(DerivationMode::Internal, 7))
        for (const Word& s : engine.step(DerivationMode::Internal, w)) CHECK(s.size() == w.size() + 2);
}

TEST_CASE("bounded generation is exact and ordered") {
    GrammarEngine engine(prefix_selection_grammar());
    CHECK(engine.generate(DerivationMode::External, 4) ==
          std::vector<Word>{"b", "ab", "bb", "bbb", "aabb", "bbbb"});

    // max_len 0 keeps only empty axioms
    ContextualGrammar g;
    g.alphabet = Alphabet("a");
    g.axioms = {""};
    g.selections = {{LanguageSpec::regex("a*", Alphabet("a")), {{"a", ""}}}};
    CHECK(GrammarEngine(g).generate(DerivationMode::External, 0) == std::vector<Word>{""});
    CHECK(GrammarEngine(suffix_selection_grammar()).generate(DerivationMode::Internal, 0).empty());

    // the ic:inf_o_sydef axiom is alone below length 11
    ContextualGrammar sydef;
    sydef.alphabet = Alphabet("abc");
    sydef.axioms = {"abcaaabca"};
    sydef.selections = {
        {LanguageSpec::finite({"", "a", "b", "c", "ab", "bc", "ca", "abc", "bca", "abca"},
                              Alphabet("abc")),
         {{"b", "c"}}}};
    CHECK(GrammarEngine(sydef).generate(DerivationMode::Internal, 9) ==
          std::vector<Word>{"abcaaabca"});

    // repeated runs agree byte for byte
    CHECK(engine.generate(DerivationMode::External, 9) == engine.generate(DerivationMode::External, 9));
}

TEST_CASE("generation slices nest") {
    GrammarEngine engine(suffix_selection_grammar());
    std::vector<Word> full = engine.generate(DerivationMode::Internal, 10);
    for (int n = 0; n <= 10; n += 2) {
        std::vector<Word> expected;
        for (const Word& w : full)
            if (static_cast<int>(w.size()) <= n) expected.push_back(w);
        CHECK(engine.generate(DerivationMode::Internal, n) == expected);
    }
}

TEST_CASE("derivability") {
    GrammarEngine pre(prefix_selection_grammar());
    CHECK(pre.derives(DerivationMode::External, "ab", "aabb"));
    CHECK(pre.derives(DerivationMode::External, "ab", "ab"));  // reflexive
    CHECK_FALSE(pre.derives(DerivationMode::External, "aabb", "ab"));  // words only grow
    CHECK_FALSE(pre.derives(DerivationMode::External, "ab", "aab"));

    GrammarEngine suf(suffix_selection_grammar());
    CHECK(suf.derives(DerivationMode::Internal, "aab", "acabd"));
    CHECK_FALSE(suf.derives(DerivationMode::Internal, "aab", "accadbd"));
}

TEST_CASE("generation cap raises a resource error") {
    GenerationLimits tiny;
    tiny.word_cap = 3;
    GrammarEngine engine(prefix_selection_grammar(), tiny);
    CHECK_THROWS_AS(engine.generate(DerivationMode::External, 12), ResourceError);
}

TEST_CASE("grammar JSON round trip") {
    ContextualGrammar g = suffix_selection_grammar();
    ContextualGrammar back = grammar_from_json(grammar_to_json(g));
    CHECK(back.alphabet == g.alphabet);
    CHECK(back.axioms == g.axioms);
    REQUIRE(back.selections.size() == 1);
    CHECK(equivalent(compile(back.selections[0].selection), compile(g.selections[0].selection)));
    CHECK(back.selections[0].contexts.size() == 1);
    CHECK(back.selections[0].contexts[0].left == "c");

    auto j = nlohmann::json::parse(R"({
        "alphabet": ["a", "b", "c", "d"],
        "axioms": ["aab"],
        "selections": [{"selection": {"kind": "finite", "words": ["ab", "b", ""]},
                        "contexts": [["c", "d"]]}]})");
    ContextualGrammar loaded = grammar_from_json(j);
    CHECK(validate(loaded).empty());
    CHECK(loaded.selections[0].selection.alphabet.letters() == "ab");  // inferred
    CHECK(GrammarEngine(loaded).step(DerivationMode::Internal, "aab").size() == 6);
}
