#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <set>

#include "subreg/harness.hpp"

using namespace subreg;
using namespace subreg::harness;

namespace {

nlohmann::json load(const std::string& name) {
    std::ifstream in(std::string(SUBREG_LEMMAS_DIR) + "/" + name);
    REQUIRE(in.good());
    nlohmann::json j;
    in >> j;
    return j;
}

} // namespace

TEST_CASE("registry inventory") {
    const auto& regs = registry();
    CHECK(regs.size() == 28);

    std::set<std::string> ids;
    for (const auto& rec : regs) CHECK(ids.insert(rec.id).second);

    // every witness-language record is fully machine-checked
    for (const auto& rec : regs)
        if (rec.id.rfind("srl:", 0) == 0 || rec.id.rfind("lemma:", 0) == 0)
            CHECK(rec.status == LemmaStatus::MachineChecked);

    CHECK(find_record("ic:fin_comb_o_pre")->status == LemmaStatus::ExternalProof);
    CHECK(find_record("nope") == nullptr);

    // grammar records carry their derivation mode
    CHECK(find_record("ec:pre_o_suf")->grammar->mode == DerivationMode::External);
    CHECK(find_record("ic:suf_o_pre")->grammar->mode == DerivationMode::Internal);
}

TEST_CASE("single lemma verification") {
    LemmaReport r = verify_lemma("srl:pre_o_suf");
    CHECK(r.outcome == LemmaOutcome::Passed);
    CHECK(r.checks.size() == 3);

    r = verify_lemma("ec:pre_o_suf", 10);
    CHECK(r.outcome == LemmaOutcome::Passed);

    r = verify_lemma("ic:inf_o_nc", 12);
    CHECK(r.outcome == LemmaOutcome::Passed);

    CHECK_THROWS_AS(verify_lemma("nosuch"), std::invalid_argument);
}

TEST_CASE("a corrupted claim fails with evidence") {
    LemmaRecord broken = *find_record("srl:pre_o_suf");
    broken.languages[0].claims[2].expected = Verdict::Yes;  // SUF is really "no"
    LemmaReport r = check_record(broken);
    CHECK(r.outcome == LemmaOutcome::Failed);
    bool saw_evidence = false;
    for (const auto& c : r.checks)
        if (!c.passed && !c.details.empty()) saw_evidence = true;
    CHECK(saw_evidence);
}

TEST_CASE("verify_all passes and reports skips") {
    VerificationReport report = verify_all();
    CHECK(report.all_passed());
    CHECK(report.failed == 0);
    CHECK(report.skipped == 1);  // ic:fin_comb_o_pre is an external proof
    CHECK(report.passed + report.skipped == static_cast<int>(registry().size()));

    nlohmann::json j = report_to_json(report);
    CHECK(j["summary"]["failed"] == 0);
    CHECK(j["lemmas"].size() == registry().size());

    std::string table = report_to_table(report);
    CHECK(table.find("FAIL") == std::string::npos);
    CHECK(table.find("SKIP  ic:fin_comb_o_pre") != std::string::npos);
}

TEST_CASE("bound zero marks trivial slices") {
    LemmaReport r = verify_lemma("ec:inf_o_sydef", 0);  // axiom ~ survives at length 0
    CHECK(r.outcome == LemmaOutcome::Passed);
    CHECK(r.notes.find("trivial slice") != std::string::npos);
}

TEST_CASE("reference predicates") {
    const auto& anbn = reference_predicate("anbn-or-bn");
    CHECK(anbn("ab"));
    CHECK(anbn("aabb"));
    CHECK(anbn("bbb"));
    CHECK_FALSE(anbn(""));
    CHECK_FALSE(anbn("aab"));
    CHECK_FALSE(anbn("ba"));

    const auto& layered = reference_predicate("ambc2nbam-or-cn-bcnb-acna");
    CHECK(layered("cc"));
    CHECK(layered("bccb"));
    CHECK(layered("bcccb"));
    CHECK(layered("accca"));
    CHECK(layered("abccba"));
    CHECK(layered("aabccbaa"));
    CHECK_FALSE(layered("abcccba"));  // odd c-run inside the a..a frame
    CHECK_FALSE(layered("abccb"));    // unbalanced a-runs
    CHECK_FALSE(layered("c"));

    const auto& alt = reference_predicate("abwords-or-c-alternating-c");
    CHECK(alt(""));
    CHECK(alt("abba"));
    CHECK(alt("cc"));
    CHECK(alt("cbc"));
    CHECK(alt("cabac"));            // aba alternates
    CHECK(alt("cabbc") == false);   // bb does not
    CHECK(alt("cabab") == false);   // missing the closing c
    CHECK(alt("cbabac"));

    CHECK_THROWS_AS(reference_predicate("nope"), std::invalid_argument);
}

TEST_CASE("oracle matches the engine on every registry grammar") {
    for (const auto& rec : registry()) {
        if (!rec.grammar) continue;
        GrammarEngine engine(rec.grammar->grammar);
        for (int bound : {0, 5, 9}) {
            std::vector<Word> got = engine.generate(rec.grammar->mode, bound);
            std::set<Word> oracle = naive_generate(rec.grammar->grammar, rec.grammar->mode, bound);
            CHECK(std::set<Word>(got.begin(), got.end()) == oracle);
        }
    }
}

TEST_CASE("hierarchy implications on the bundled corpus") {
    ImplicationReport report = implication_corpus_check(witness_corpus());
    CHECK(report.ok());
    CHECK(report.unwitnessed_edges.empty());
    CHECK(report.properness_witnesses.size() == hierarchy_edges().size());
}

TEST_CASE("hierarchy implications on random automata") {
    auto corpus = random_dfa_corpus(200, 3, 2, 20240817);
    CHECK(corpus.size() == 200);
    ImplicationReport report = implication_corpus_check(corpus);
    for (const auto& v : report.violations) MESSAGE(v.label, ": ", v.details);
    CHECK(report.ok());
}

TEST_CASE("degenerate corpus entries keep the edge table consistent") {
    std::vector<CorpusEntry> corpus = {
        {"empty", LanguageSpec::finite({}, Alphabet("ab"))},
        {"epsilon", LanguageSpec::finite({""}, Alphabet("ab"))},
        {"universal", LanguageSpec::regex("(a|b)*", Alphabet("ab"))},
    };
    CHECK(implication_corpus_check(corpus).ok());
}

TEST_CASE("bundled grammar files are the registry grammars") {
    const std::pair<const char*, const char*> files[] = {
        {"ec:pre_o_suf", "ec_pre_o_suf.json"},   {"ec:suf_o_pre", "ec_suf_o_pre.json"},
        {"ec:inf_o_star", "ec_inf_o_star.json"}, {"ec:inf_o_nc", "ec_inf_o_nc.json"},
        {"ec:inf_o_sydef", "ec_inf_o_sydef.json"}, {"ec:inf_o_circ", "ec_inf_o_circ.json"},
        {"ec:comb_o_pre", "ec_comb_o_pre.json"}, {"ec:nil_o_pre", "ec_nil_o_pre.json"},
        {"ic:suf_o_pre", "ic_suf_o_pre.json"},   {"ic:pre_o_suf", "ic_pre_o_suf.json"},
        {"ic:inf_o_nc", "ic_inf_o_nc.json"},     {"ic:inf_o_sydef", "ic_inf_o_sydef.json"},
        {"ic:inf_o_circ", "ic_inf_o_circ.json"}, {"ic:inf_o_star", "ic_inf_o_star.json"},
    };
    for (const auto& [id, file] : files) {
        const LemmaRecord* rec = find_record(id);
        REQUIRE(rec != nullptr);
        REQUIRE(rec->grammar.has_value());
        ContextualGrammar loaded = grammar_from_json(load(file));
        const ContextualGrammar& expected = rec->grammar->grammar;
        CHECK(loaded.alphabet == expected.alphabet);
        CHECK(loaded.axioms == expected.axioms);
        REQUIRE(loaded.selections.size() == expected.selections.size());
        for (std::size_t i = 0; i < loaded.selections.size(); ++i) {
            CHECK(equivalent(compile(loaded.selections[i].selection),
                             compile(expected.selections[i].selection)));
            REQUIRE(loaded.selections[i].contexts.size() == expected.selections[i].contexts.size());
            for (std::size_t c = 0; c < loaded.selections[i].contexts.size(); ++c) {
                CHECK(loaded.selections[i].contexts[c].left == expected.selections[i].contexts[c].left);
                CHECK(loaded.selections[i].contexts[c].right ==
                      expected.selections[i].contexts[c].right);
            }
        }
    }
}

TEST_CASE("bundled witness files match the registry languages") {
    const std::tuple<const char*, std::size_t, const char*> files[] = {
        {"srl:pre_o_suf", 0, "srl_pre_o_suf.json"},
        {"srl:fin_suf_o_pre", 0, "srl_fin_suf_o_pre.json"},
        {"srl:inf_o_uf_circ_tcom", 0, "srl_inf_o_uf_circ_tcom.json"},
        {"srl:inf_o_nc", 0, "srl_inf_o_nc.json"},
        {"srl:comb_o_pre", 0, "srl_comb_o_pre.json"},
        {"lemma:pre_inf_unvergleichbarzu_star_uf", 1, "aa_star.json"},
    };
    for (const auto& [id, index, file] : files) {
        const LemmaRecord* rec = find_record(id);
        REQUIRE(rec != nullptr);
        CHECK(equivalent(compile(language_from_json(load(file))),
                         compile(rec->languages[index].language)));
    }
}

TEST_CASE("random corpus generation is reproducible") {
    auto a = random_dfa_corpus(25, 4, 3, 99);
    auto b = random_dfa_corpus(25, 4, 3, 99);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(compile(a[i].language) == compile(b[i].language));
}
