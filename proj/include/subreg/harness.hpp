#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "subreg/contextual.hpp"
#include "subreg/language.hpp"
#include "subreg/subregular.hpp"

namespace subreg::harness {

enum class LemmaStatus { MachineChecked, ExternalProof };

/// One family claim about a language.
struct FamilyClaim {
    Family family;
    Verdict expected;
};

struct LanguageSubject {
    std::string label;
    LanguageSpec language;
    std::vector<FamilyClaim> claims;
};

/// Claim about the i-th selection language of a grammar, checked relative to
/// the selection's own alphabet.
struct SelectionClaim {
    std::size_t selection_index;
    FamilyClaim claim;
};

/// Cross-check tying a selection language to its closure-operator
/// construction: selection i must equal op(base).
struct ClosureCheck {
    enum class Op { Pre, Suf, Inf };
    std::size_t selection_index;
    Op op;
    LanguageSpec base;
};

struct GrammarSubject {
    ContextualGrammar grammar;
    DerivationMode mode;
    std::vector<SelectionClaim> selection_claims;
    std::vector<ClosureCheck> closure_checks;
    std::string reference;              // reference-predicate id, empty when none
    std::vector<Word> member_words;     // must be derivable
    std::vector<Word> non_member_words; // must be absent from the slice of their length
};

/// A checkable claim compiled from the inventory: family verdicts about
/// witness languages and/or a grammar with generation checks. External-proof
/// records are reported but never counted as pass or fail.
struct LemmaRecord {
    std::string id;
    std::string claim;  // the mathematical statement being verified, in plain words
    LemmaStatus status = LemmaStatus::MachineChecked;
    int bound = 12;
    std::string notes;
    std::vector<LanguageSubject> languages;
    std::optional<GrammarSubject> grammar;
};

/// The full inventory, in a fixed order.
const std::vector<LemmaRecord>& registry();
const LemmaRecord* find_record(const std::string& id);

/// Hand-coded membership functions for the non-regular reference languages,
/// independent of the grammar engine. Total on all words.
using ReferencePredicate = std::function<bool(std::string_view)>;
const ReferencePredicate& reference_predicate(const std::string& id);

/// Independent naive rewriter: fixpoint iteration over a growing word set,
/// selection membership by direct NFA simulation (or word-set scan for finite
/// selections) instead of the engine's compiled DFAs.
std::set<Word> naive_generate(const ContextualGrammar& g, DerivationMode mode, int max_len);

struct CheckResult {
    std::string name;
    bool passed;
    std::string details;
};

enum class LemmaOutcome { Passed, Failed, Skipped };

struct LemmaReport {
    std::string id;
    LemmaOutcome outcome;
    std::vector<CheckResult> checks;
    double millis = 0.0;
    std::string notes;
};

struct VerificationReport {
    std::vector<LemmaReport> lemmas;
    int passed = 0, failed = 0, skipped = 0;
    bool all_passed() const { return failed == 0; }
};

/// Runs every machine-checkable sub-claim of one record.
LemmaReport check_record(const LemmaRecord& record, std::optional<int> bound_override = std::nullopt);
/// Throws std::invalid_argument for an unknown id.
LemmaReport verify_lemma(const std::string& id, std::optional<int> bound_override = std::nullopt);
VerificationReport verify_all(std::optional<int> bound_override = std::nullopt);

/// Timings live in the report object; serialized output omits them by default
/// so repeated runs are byte-identical.
nlohmann::json report_to_json(const VerificationReport& report, bool include_timings = false);
std::string report_to_table(const VerificationReport& report, bool include_timings = false);

// ---- hierarchy implication checks ----

struct CorpusEntry {
    std::string label;
    LanguageSpec language;
};

/// The bundled witness corpus: the lemma witness languages plus edge-case and
/// properness witnesses for every hierarchy edge.
std::vector<CorpusEntry> witness_corpus();

/// Seeded random complete DFAs (1..max_states states over the first
/// 1..alphabet_size letters of a,b,c). Reproducible across platforms.
std::vector<CorpusEntry> random_dfa_corpus(int count, int max_states, int alphabet_size,
                                           std::uint64_t seed);

/// The decidable proper-inclusion edges, restated as decider implications:
/// membership in `narrower` must imply membership in `wider`.
struct HierarchyEdge {
    Family narrower, wider;
};
std::span<const HierarchyEdge> hierarchy_edges();

struct ImplicationReport {
    struct Violation {
        std::string label;
        HierarchyEdge edge;
        std::string details;
    };
    std::vector<Violation> violations;
    // per edge: a corpus language in wider \ narrower, when one exists
    std::vector<std::pair<HierarchyEdge, std::string>> properness_witnesses;
    std::vector<HierarchyEdge> unwitnessed_edges;
    bool ok() const { return violations.empty(); }
};

/// Checks every edge implication on every corpus language and records, per
/// edge, a properness witness from the corpus.
ImplicationReport implication_corpus_check(const std::vector<CorpusEntry>& corpus);

nlohmann::json implication_report_to_json(const ImplicationReport& report);
std::string implication_report_to_table(const ImplicationReport& report);

} // namespace subreg::harness
