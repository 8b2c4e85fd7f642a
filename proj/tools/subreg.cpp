// Command-line front end: classify languages into subregular families, apply
// closure operations, run contextual-grammar derivations, and verify the
// bundled claim registry.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "subreg/contextual.hpp"
#include "subreg/errors.hpp"
#include "subreg/harness.hpp"
#include "subreg/language.hpp"
#include "subreg/subregular.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitResource = 3;

std::string show(const subreg::Word& w) { return w.empty() ? std::string("~") : w; }

subreg::Word read_word(const std::string& text) { return text == "~" ? subreg::Word() : text; }

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open \"" + path + "\"");
    nlohmann::json j;
    in >> j;
    return j;
}

subreg::GenerationLimits limits_from_env() {
    subreg::GenerationLimits limits;
    if (const char* cap = std::getenv("SUBREG_FRONTIER_CAP")) limits.word_cap = std::stoull(cap);
    return limits;
}

int cmd_classify(const std::string& path, const std::vector<std::string>& family_names,
                 const std::string& format) {
    subreg::LanguageSpec spec = subreg::language_from_json(load_json(path));
    std::vector<subreg::Family> families;
    if (family_names.empty()) {
        families.assign(subreg::all_families.begin(), subreg::all_families.end());
    } else {
        for (const std::string& name : family_names) {
            auto f = subreg::family_from_name(name);
            if (!f) throw std::invalid_argument("unknown family \"" + name + "\"");
            families.push_back(*f);
        }
    }

    subreg::Dfa lang = subreg::compile(spec);
    std::vector<subreg::FamilyVerdict> verdicts =
        subreg::classify(lang, spec.alphabet, families);

    if (format == "json") {
        nlohmann::json j;
        j["language"] = path;
        nlohmann::json alphabet = nlohmann::json::array();
        for (char c : spec.alphabet.letters()) alphabet.push_back(std::string(1, c));
        j["alphabet"] = alphabet;
        nlohmann::json out = nlohmann::json::array();
        for (const auto& v : verdicts) {
            nlohmann::json e;
            e["family"] = std::string(subreg::family_name(v.family));
            e["verdict"] = std::string(subreg::verdict_name(v.verdict));
            e["method"] = v.method == subreg::Method::Decider ? "decider" : "partial-rule";
            e["evidence"] = v.evidence;
            if (v.caveat) e["caveat"] = true;
            out.push_back(std::move(e));
        }
        j["verdicts"] = std::move(out);
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& v : verdicts) {
            std::cout << subreg::family_name(v.family) << "\t" << subreg::verdict_name(v.verdict)
                      << "\t" << v.evidence;
            if (v.caveat) std::cout << "  (minimal-DFA caveat)";
            std::cout << "\n";
        }
    }
    return kExitOk;
}

int cmd_closure(const std::string& op, const std::string& path) {
    subreg::Dfa lang = subreg::compile(subreg::language_from_json(load_json(path)));
    subreg::Dfa result;
    if (op == "pre")
        result = subreg::prefix_closure(lang);
    else if (op == "suf")
        result = subreg::suffix_closure(lang);
    else if (op == "inf")
        result = subreg::infix_closure(lang);
    else if (op == "shift")
        result = subreg::cyclic_shift(lang);
    else
        throw std::invalid_argument("unknown closure op \"" + op + "\" (want pre|suf|inf|shift)");
    std::cout << subreg::dfa_to_json(result).dump(2) << "\n";
    return kExitOk;
}

subreg::DerivationMode parse_mode(const std::string& mode) {
    if (mode == "ex") return subreg::DerivationMode::External;
    if (mode == "in") return subreg::DerivationMode::Internal;
    throw std::invalid_argument("unknown mode \"" + mode + "\" (want ex|in)");
}

int cmd_generate(const std::string& path, const std::string& mode, int max_len,
                 const std::string& format) {
    subreg::ContextualGrammar g = subreg::grammar_from_json(load_json(path));
    subreg::GrammarEngine engine(std::move(g), limits_from_env());
    std::vector<subreg::Word> words = engine.generate(parse_mode(mode), max_len);
    if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& w : words) j.push_back(w);
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& w : words) std::cout << show(w) << "\n";
    }
    return kExitOk;
}

int cmd_derive(const std::string& path, const std::string& mode, const std::string& from,
               const std::string& to) {
    subreg::ContextualGrammar g = subreg::grammar_from_json(load_json(path));
    subreg::GrammarEngine engine(std::move(g), limits_from_env());
    bool ok = engine.derives(parse_mode(mode), read_word(from), read_word(to));
    std::cout << (ok ? "yes" : "no") << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& id, std::optional<int> bound, const std::string& format,
               int random_count, std::uint64_t seed, int max_states, int alphabet_size) {
    namespace h = subreg::harness;
    if (id == "hierarchy") {
        std::vector<h::CorpusEntry> corpus = h::witness_corpus();
        if (random_count > 0) {
            auto extra = h::random_dfa_corpus(random_count, max_states, alphabet_size, seed);
            corpus.insert(corpus.end(), extra.begin(), extra.end());
        }
        h::ImplicationReport report = h::implication_corpus_check(corpus);
        if (format == "json")
            std::cout << h::implication_report_to_json(report).dump(2) << "\n";
        else
            std::cout << h::implication_report_to_table(report);
        return report.ok() && report.unwitnessed_edges.empty() ? kExitOk : kExitVerifyFailed;
    }

    h::VerificationReport report;
    if (id == "all") {
        report = h::verify_all(bound);
    } else {
        if (!h::find_record(id)) throw std::invalid_argument("unknown lemma id \"" + id + "\"");
        h::LemmaReport lr = h::verify_lemma(id, bound);
        switch (lr.outcome) {
            case h::LemmaOutcome::Passed: report.passed = 1; break;
            case h::LemmaOutcome::Failed: report.failed = 1; break;
            case h::LemmaOutcome::Skipped: report.skipped = 1; break;
        }
        report.lemmas.push_back(std::move(lr));
    }
    if (format == "json")
        std::cout << h::report_to_json(report).dump(2) << "\n";
    else
        std::cout << h::report_to_table(report);
    return report.all_passed() ? kExitOk : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for subregular language families and contextual grammars"};
    app.require_subcommand(1);

    std::string lang_path, grammar_path, closure_op, mode = "ex", from, to, lemma_id;
    std::string format = "table";
    std::vector<std::string> families;
    int max_len = 16;
    std::optional<int> bound;
    int random_count = 0, max_states = 4, alphabet_size = 3;
    std::uint64_t seed = 1;

    CLI::App* classify = app.add_subcommand("classify", "classify a language into subregular families");
    classify->add_option("language", lang_path, "language JSON file")->required();
    classify->add_option("--families", families, "comma-separated family names")->delimiter(',');
    classify->add_option("--format", format, "json|table");

    CLI::App* closure = app.add_subcommand("closure", "emit the minimal DFA of a closure of a language");
    closure->add_option("op", closure_op, "pre|suf|inf|shift")->required();
    closure->add_option("language", lang_path, "language JSON file")->required();

    CLI::App* generate = app.add_subcommand("generate", "bounded-length language of a contextual grammar");
    generate->add_option("grammar", grammar_path, "grammar JSON file")->required();
    generate->add_option("--mode", mode, "ex|in")->required();
    generate->add_option("--max-len", max_len, "length bound")->check(CLI::NonNegativeNumber);
    generate->add_option("--format", format, "json|lines");

    CLI::App* derive = app.add_subcommand("derive", "test derivability between two words");
    derive->add_option("grammar", grammar_path, "grammar JSON file")->required();
    derive->add_option("--mode", mode, "ex|in")->required();
    derive->add_option("--from", from, "source word (~ for the empty word)")->required();
    derive->add_option("--to", to, "target word (~ for the empty word)")->required();

    CLI::App* verify = app.add_subcommand("verify", "verify registry claims (id, 'all' or 'hierarchy')");
    verify->add_option("id", lemma_id, "lemma id, 'all' or 'hierarchy'")->required();
    verify->add_option("--bound", bound, "generation bound override");
    verify->add_option("--format", format, "json|table");
    verify->add_option("--random", random_count, "extra random DFAs for 'hierarchy'");
    verify->add_option("--seed", seed, "seed for the random corpus");
    verify->add_option("--max-states", max_states, "random DFA state bound");
    verify->add_option("--alphabet-size", alphabet_size, "random DFA alphabet bound (<= 3)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify->parsed()) return cmd_classify(lang_path, families, format);
        if (closure->parsed()) return cmd_closure(closure_op, lang_path);
        if (generate->parsed()) return cmd_generate(grammar_path, mode, max_len, format);
        if (derive->parsed()) return cmd_derive(grammar_path, mode, from, to);
        if (verify->parsed())
            return cmd_verify(lemma_id, bound, format, random_count, seed, max_states, alphabet_size);
    } catch (const subreg::ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
