#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#include "subreg/language.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

// run the CLI binary, capturing stdout (stderr folded in)
RunResult run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + " " + std::string(SUBREG_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buffer;
    std::size_t n;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) output.append(buffer.data(), n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

std::string lemma(const std::string& name) { return std::string(SUBREG_LEMMAS_DIR) + "/" + name; }
std::string data(const std::string& name) { return std::string(SUBREG_TEST_DATA_DIR) + "/" + name; }

} // namespace

TEST_CASE("classify witness files") {
    RunResult r = run("classify " + lemma("srl_pre_o_suf.json") + " --families PRE,SUF,FIN");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("PRE\tyes") != std::string::npos);
    CHECK(r.output.find("SUF\tno") != std::string::npos);
    CHECK(r.output.find("FIN\tyes") != std::string::npos);

    r = run("classify " + lemma("corpus/empty.json") + " --families FIN,NIL,PRE,STAR,MON");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("FIN\tyes") != std::string::npos);
    CHECK(r.output.find("STAR\tno") != std::string::npos);
    CHECK(r.output.find("MON\tno") != std::string::npos);

    r = run("classify " + lemma("srl_comb_o_pre.json") + " --format json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["alphabet"].size() == 2);
    bool saw_comb = false;
    for (const auto& e : j["verdicts"])
        if (e["family"] == "COMB") {
            saw_comb = true;
            CHECK(e["verdict"] == "yes");
        }
    CHECK(saw_comb);
}

TEST_CASE("classify rejects malformed input with exit 2") {
    CHECK(run("classify " + data("broken.json")).exit_code == 2);
    CHECK(run("classify " + data("bad_regex.json")).exit_code == 2);
    CHECK(run("classify /does/not/exist.json").exit_code == 2);
    CHECK(run("classify " + lemma("srl_pre_o_suf.json") + " --families NOPE").exit_code == 2);
}

TEST_CASE("closure emits loadable minimal DFAs") {
    RunResult r = run("closure pre " + data("ab_only.json"));
    CHECK(r.exit_code == 0);
    subreg::Dfa pre = subreg::dfa_from_json(nlohmann::json::parse(r.output));
    CHECK(subreg::equivalent(
        pre, subreg::compile(subreg::LanguageSpec::finite({"", "a", "ab"}, subreg::Alphabet("ab")))));

    r = run("closure inf " + lemma("srl_inf_o_nc_base.json"));
    CHECK(r.exit_code == 0);
    subreg::Dfa inf = subreg::dfa_from_json(nlohmann::json::parse(r.output));
    CHECK(subreg::equivalent(
        inf, subreg::compile(subreg::language_from_json(
                 nlohmann::json::parse(std::ifstream(lemma("srl_inf_o_nc.json")))))));

    r = run("closure shift " + data("ab_only.json"));
    CHECK(r.exit_code == 0);
    subreg::Dfa shift = subreg::dfa_from_json(nlohmann::json::parse(r.output));
    CHECK(subreg::equivalent(
        shift, subreg::compile(subreg::LanguageSpec::finite({"ab", "ba"}, subreg::Alphabet("ab")))));

    CHECK(run("closure nope " + data("ab_only.json")).exit_code == 2);
}

TEST_CASE("generate lists the bounded slice") {
    RunResult r = run("generate " + lemma("ec_pre_o_suf.json") + " --mode ex --max-len 4");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "b\nab\nbb\nbbb\naabb\nbbbb\n");

    // the empty word prints as ~
    r = run("generate " + lemma("ec_inf_o_sydef.json") + " --mode ex --max-len 0");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "~\n");

    r = run("generate " + lemma("ic_suf_o_pre.json") + " --mode in --max-len 5");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "aab\naabcd\naacbd\naacdb\nacabd\nacdab\ncdaab\n");

    CHECK(run("generate " + data("broken.json") + " --mode ex").exit_code == 2);
    CHECK(run("generate " + data("bad_grammar.json") + " --mode ex").exit_code == 2);
    CHECK(run("generate " + lemma("ec_pre_o_suf.json") + " --mode sideways").exit_code == 2);
}

TEST_CASE("generation cap from the environment exits 3") {
    RunResult r = run("generate " + lemma("ec_pre_o_suf.json") + " --mode ex --max-len 12",
                      "SUBREG_FRONTIER_CAP=3");
    CHECK(r.exit_code == 3);
}

TEST_CASE("derive answers yes and no") {
    RunResult r = run("derive " + lemma("ec_pre_o_suf.json") + " --mode ex --from ab --to aabb");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "yes\n");

    r = run("derive " + lemma("ic_suf_o_pre.json") + " --mode in --from aab --to acabd");
    CHECK(r.output == "yes\n");

    r = run("derive " + lemma("ec_pre_o_suf.json") + " --mode ex --from aabb --to ab");
    CHECK(r.output == "no\n");

    // ~ stands for the empty word on the command line
    r = run("derive " + lemma("ec_inf_o_sydef.json") + " --mode ex --from '~' --to cc");
    CHECK(r.output == "yes\n");
}

TEST_CASE("verify subcommand") {
    RunResult r = run("verify srl:inf_o_nc");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("PASS") != std::string::npos);
    CHECK(r.output.find("cyclically permutes") == std::string::npos);  // evidence only on failure

    r = run("verify srl:inf_o_nc --format json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["summary"]["passed"] == 1);

    CHECK(run("verify nosuch").exit_code == 2);

    r = run("verify all");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("summary:") != std::string::npos);

    r = run("verify hierarchy --random 50 --seed 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("no implication violations") != std::string::npos);
}

TEST_CASE("verify output is byte-identical across runs") {
    RunResult a = run("verify srl:pre_o_suf --format json");
    RunResult b = run("verify srl:pre_o_suf --format json");
    CHECK(a.output == b.output);

    RunResult t1 = run("verify all");
    RunResult t2 = run("verify all");
    CHECK(t1.output == t2.output);

    RunResult g1 = run("generate " + lemma("ic_inf_o_nc.json") + " --mode in --max-len 9");
    RunResult g2 = run("generate " + lemma("ic_inf_o_nc.json") + " --mode in --max-len 9");
    CHECK(g1.output == g2.output);
}
