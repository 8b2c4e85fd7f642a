#include "subreg/harness.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "subreg/errors.hpp"
#include "subreg/nfa.hpp"
#include "subreg/regex.hpp"

namespace subreg::harness {

namespace {

Alphabet ab() { return Alphabet("ab"); }
Alphabet abc() { return Alphabet("abc"); }
Alphabet abcd() { return Alphabet("abcd"); }

LanguageSpec rx(const char* expr, Alphabet a) { return LanguageSpec::regex(expr, std::move(a)); }
LanguageSpec fin(std::vector<Word> words, Alphabet a) {
    return LanguageSpec::finite(std::move(words), std::move(a));
}

std::string show(std::string_view w) { return w.empty() ? std::string("~") : std::string(w); }

bool all_in(std::string_view w, std::string_view letters) {
    return w.find_first_not_of(letters) == std::string_view::npos;
}

bool is_power(std::string_view w, char c) { return all_in(w, std::string_view(&c, 1)); }

// w = x^n y^n with n >= 1
bool is_block_pair(std::string_view w, char x, char y) {
    if (w.empty() || w.size() % 2 != 0) return false;
    std::size_t half = w.size() / 2;
    return is_power(w.substr(0, half), x) && is_power(w.substr(half), y);
}

// w = x^n y^m with n, m >= 1
bool is_run_pair(std::string_view w, char x, char y) {
    std::size_t i = 0;
    while (i < w.size() && w[i] == x) ++i;
    return i >= 1 && i < w.size() && is_power(w.substr(i), y);
}

bool alternates(std::string_view w) {
    if (!all_in(w, "ab")) return false;
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i] == w[i - 1]) return false;
    return true;
}

const std::map<std::string, ReferencePredicate>& predicates() {
    static const std::map<std::string, ReferencePredicate> table = {
        {"anbn-or-bn",
         [](std::string_view w) {
             return is_block_pair(w, 'a', 'b') || (!w.empty() && is_power(w, 'b'));
         }},
        {"anbn-or-an",
         [](std::string_view w) {
             return is_block_pair(w, 'a', 'b') || (!w.empty() && is_power(w, 'a'));
         }},
        {"anbn-or-bnan",
         [](std::string_view w) { return is_block_pair(w, 'a', 'b') || is_block_pair(w, 'b', 'a'); }},
        // {a,b}* a^n b^m (n,m>=1)  |  c a^n b^m c
        {"any-anbm-or-c-anbm-c",
         [](std::string_view w) {
             if (all_in(w, "ab")) {
                 std::size_t end = w.size();
                 while (end > 0 && w[end - 1] == 'b') --end;
                 return end < w.size() && end > 0;  // trailing b-run, preceded by an a
             }
             if (w.size() >= 4 && w.front() == 'c' && w.back() == 'c')
                 return is_run_pair(w.substr(1, w.size() - 2), 'a', 'b');
             return false;
         }},
        // a^m b c^{2n} b a^m (n>=1, m>=0)  |  c^n (n>=2)  |  b c^n b  |  a c^n a (n>=2)
        {"ambc2nbam-or-cn-bcnb-acna",
         [](std::string_view w) {
             if (w.size() >= 2 && is_power(w, 'c')) return true;
             if (w.size() >= 4 && (w.front() == 'b' || w.front() == 'a') && w.back() == w.front() &&
                 is_power(w.substr(1, w.size() - 2), 'c') && w.size() - 2 >= 2) {
                 if (w.front() == 'a') return true;
                 // b c^n b with n even is also a^0 b c^n b a^0; odd n only fits here
                 return true;
             }
             std::size_t m = 0;
             while (m < w.size() && w[m] == 'a') ++m;
             std::size_t i = m;
             if (i >= w.size() || w[i] != 'b') return false;
             ++i;
             std::size_t c_begin = i;
             while (i < w.size() && w[i] == 'c') ++i;
             std::size_t c_len = i - c_begin;
             if (c_len < 2 || c_len % 2 != 0) return false;
             if (i >= w.size() || w[i] != 'b') return false;
             ++i;
             return w.size() - i == m && is_power(w.substr(i), 'a');
         }},
        // {a,b}*  |  c {~,b} (ab)* {~,a} c
        {"abwords-or-c-alternating-c",
         [](std::string_view w) {
             if (all_in(w, "ab")) return true;
             return w.size() >= 2 && w.front() == 'c' && w.back() == 'c' &&
                    alternates(w.substr(1, w.size() - 2));
         }},
        {"bna-or-epsilon",
         [](std::string_view w) {
             if (w.empty()) return true;
             return w.back() == 'a' && is_power(w.substr(0, w.size() - 1), 'b');
         }},
        {"bbban-or-bb",
         [](std::string_view w) {
             if (w == "bb") return true;
             return w.size() >= 4 && w.substr(0, 3) == "bbb" && is_power(w.substr(3), 'a');
         }},
    };
    return table;
}

} // namespace

const ReferencePredicate& reference_predicate(const std::string& id) {
    auto it = predicates().find(id);
    if (it == predicates().end()) throw std::invalid_argument("unknown reference predicate \"" + id + "\"");
    return it->second;
}

// ---------------------------------------------------------------------------
// registry
// ---------------------------------------------------------------------------

namespace {

LanguageSubject subject(std::string label, LanguageSpec spec, std::vector<FamilyClaim> claims) {
    return LanguageSubject{std::move(label), std::move(spec), std::move(claims)};
}

FamilyClaim yes(Family f) { return {f, Verdict::Yes}; }
FamilyClaim no(Family f) { return {f, Verdict::No}; }

LanguageSpec inf_of_ab2na() {
    return LanguageSpec::automaton(infix_closure(compile(rx("a(bb)(bb)*a", ab()))));
}

std::vector<LemmaRecord> build_registry() {
    std::vector<LemmaRecord> r;

    // --- witness languages for the subregular hierarchy ---

    r.push_back(LemmaRecord{
        "srl:pre_o_suf",
        "{ab, a, ~} is finite and prefix-closed but not suffix-closed",
        LemmaStatus::MachineChecked, 12, "",
        {subject("{ab,a,~}", fin({"ab", "a", ""}, ab()),
                 {yes(Family::FIN), yes(Family::PRE), no(Family::SUF)})},
        std::nullopt});

    r.push_back(LemmaRecord{
        "srl:fin_suf_o_pre",
        "{ab, b, ~} is finite and suffix-closed but not prefix-closed",
        LemmaStatus::MachineChecked, 12, "",
        {subject("{ab,b,~}", fin({"ab", "b", ""}, ab()),
                 {yes(Family::FIN), yes(Family::SUF), no(Family::PRE)})},
        std::nullopt});

    r.push_back(LemmaRecord{
        "srl:inf_o_uf_circ_tcom",
        "{ab, a, b, ~} is infix-closed but neither union-free nor circular nor a two-sided comet",
        LemmaStatus::MachineChecked, 12,
        "UF and 2COM are refuted by the finite-language rules",
        {subject("{ab,a,b,~}", fin({"ab", "a", "b", ""}, ab()),
                 {yes(Family::INF), no(Family::CIRC), no(Family::UF), no(Family::TWOCOM)})},
        std::nullopt});

    r.push_back(LemmaRecord{
        "srl:inf_o_nc",
        "the infix closure of {a b^{2n} a : n>=1} is infix-closed but not non-counting",
        LemmaStatus::MachineChecked, 12, "",
        {subject("Inf(a(bb)+a)", inf_of_ab2na(), {yes(Family::INF), no(Family::NC)})},
        std::nullopt});

    r.push_back(LemmaRecord{
        "srl:comb_o_pre",
        "{a,b}*{b} is combinational but not prefix-closed",
        LemmaStatus::MachineChecked, 12, "",
        {subject("(a|b)*b", rx("(a|b)*b", ab()), {yes(Family::COMB), no(Family::PRE)})},
        std::nullopt});

    r.push_back(LemmaRecord{
        "srl:subsets_pre_ps",
        "PRE is properly contained in PS; {a,b}*{b} witnesses the properness",
        LemmaStatus::MachineChecked, 12,
        "the inclusion itself is re-checked by the hierarchy implication test",
        {subject("(a|b)*b", rx("(a|b)*b", ab()), {yes(Family::PS), no(Family::PRE)})},
        std::nullopt});

    r.push_back(LemmaRecord{
        "srl:subsets",
        "MON < INF < PRE and INF < SUF, with properness witnesses",
        LemmaStatus::MachineChecked, 12,
        "the inclusions are re-checked by the hierarchy implication test",
        {subject("Inf(a(bb)+a)", inf_of_ab2na(), {yes(Family::INF), no(Family::MON)}),
         subject("{ab,a,~}", fin({"ab", "a", ""}, ab()), {yes(Family::PRE), no(Family::INF)}),
         subject("{ab,b,~}", fin({"ab", "b", ""}, ab()), {yes(Family::SUF), no(Family::INF)})},
        std::nullopt});

    r.push_back(LemmaRecord{
        "lemma:pre_unvergleichbarzu_suf",
        "PRE and SUF are incomparable",
        LemmaStatus::MachineChecked, 12, "",
        {subject("{ab,a,~}", fin({"ab", "a", ""}, ab()), {yes(Family::PRE), no(Family::SUF)}),
         subject("{ab,b,~}", fin({"ab", "b", ""}, ab()), {yes(Family::SUF), no(Family::PRE)})},
        std::nullopt});

    r.push_back(LemmaRecord{
        "lemma:pre_inf_unvergleichbarzu_comb_nc",
        "COMB, DEF, SYDEF, ORD, NC are incomparable to PRE and INF",
        LemmaStatus::MachineChecked, 12,
        "witnesses settle the whole strand: one language in INF minus NC, one in COMB minus PRE",
        {subject("Inf(a(bb)+a)", inf_of_ab2na(), {yes(Family::INF), no(Family::NC)}),
         subject("(a|b)*b", rx("(a|b)*b", ab()), {yes(Family::COMB), no(Family::PRE)})},
        std::nullopt});

    r.push_back(LemmaRecord{
        "lemma:pre_inf_unvergleichbarzu_fin_nil",
        "FIN and NIL are incomparable to PRE and INF",
        LemmaStatus::MachineChecked, 12, "",
        {subject("{ab,b,~}", fin({"ab", "b", ""}, ab()), {yes(Family::FIN), no(Family::PRE)}),
         subject("Inf(a(bb)+a)", inf_of_ab2na(), {yes(Family::INF), no(Family::NIL)})},
        std::nullopt});

    r.push_back(LemmaRecord{
        "lemma:pre_inf_unvergleichbarzu_sydef_2com",
        "SYDEF, RCOM, LCOM, 2COM are incomparable to PRE and INF",
        LemmaStatus::MachineChecked, 12, "",
        {subject("{ab,a,b,~}", fin({"ab", "a", "b", ""}, ab()),
                 {yes(Family::INF), no(Family::TWOCOM)}),
         subject("(a|b)*b", rx("(a|b)*b", ab()), {yes(Family::COMB), no(Family::PRE)})},
        std::nullopt});

    r.push_back(LemmaRecord{
        "lemma:pre_inf_unvergleichbarzu_star_uf",
        "STAR and UF are incomparable to PRE and INF",
        LemmaStatus::MachineChecked, 12, "",
        {subject("{ab,a,b,~}", fin({"ab", "a", "b", ""}, ab()), {yes(Family::INF), no(Family::UF)}),
         subject("(aa)*", rx("(aa)*", Alphabet("a")), {yes(Family::STAR), no(Family::PS)})},
        std::nullopt});

    r.push_back(LemmaRecord{
        "lemma:pre_inf_unvergleichbarzu_comm_circ",
        "COMM and CIRC are incomparable to PRE and INF",
        LemmaStatus::MachineChecked, 12, "",
        {subject("{ab,a,b,~}", fin({"ab", "a", "b", ""}, ab()), {yes(Family::INF), no(Family::CIRC)}),
         subject("(aa)*", rx("(aa)*", Alphabet("a")), {yes(Family::COMM), no(Family::PS)})},
        std::nullopt});

    // --- external contextual grammars ---

    {
        ContextualGrammar g;
        g.alphabet = ab();
        g.axioms = {"ab", "b"};
        g.selections = {{rx("a*|aa*b*", ab()), {{"a", "b"}}},
                        {rx("b*", Alphabet("b")), {{"", "b"}}}};
        r.push_back(LemmaRecord{
            "ec:pre_o_suf",
            "{a^n b^n} u {b^n} (n>=1) is generated externally with prefix-closed selections",
            LemmaStatus::MachineChecked, 12, "",
            {},
            GrammarSubject{std::move(g), DerivationMode::External,
                           {{0, yes(Family::PRE)}, {1, yes(Family::PRE)}},
                           {{0, ClosureCheck::Op::Pre, rx("aa*bb*", ab())}},
                           "anbn-or-bn",
                           {},
                           {}}});
    }

    {
        ContextualGrammar g;
        g.alphabet = ab();
        g.axioms = {"ab", "a"};
        g.selections = {{rx("~|a*bb*", ab()), {{"a", "b"}}},
                        {rx("a*", Alphabet("a")), {{"", "a"}}}};
        r.push_back(LemmaRecord{
            "ec:suf_o_pre",
            "{a^n b^n} u {a^n} (n>=1) is generated externally with suffix-closed selections",
            LemmaStatus::MachineChecked, 12,
            "reconstructed: the construction mirrors ec:pre_o_suf; validated against the closed form",
            {},
            GrammarSubject{std::move(g), DerivationMode::External,
                           {{0, yes(Family::SUF)}, {1, yes(Family::SUF)}},
                           {{0, ClosureCheck::Op::Suf, rx("aa*bb*", ab())}},
                           "anbn-or-an",
                           {},
                           {}}});
    }

    {
        ContextualGrammar g;
        g.alphabet = abc();
        g.axioms = {"ab"};
        g.selections = {{rx("a*b*", ab()), {{"c", "c"}}},
                        {rx("(a|b)*", ab()), {{"a", ""}, {"b", ""}, {"", "b"}}}};
        r.push_back(LemmaRecord{
            "ec:inf_o_star",
            "{a,b}*{a^n b^m} u {c a^n b^m c} (n,m>=1) is generated externally with infix-closed selections",
            LemmaStatus::MachineChecked, 12,
            "alphabet widened to {a,b,c}: the contexts introduce c",
            {},
            GrammarSubject{std::move(g), DerivationMode::External,
                           {{0, yes(Family::INF)}, {1, yes(Family::INF)}},
                           {{0, ClosureCheck::Op::Inf, rx("aa*bb*", ab())},
                            {1, ClosureCheck::Op::Inf, rx("(a|b)*", ab())}},
                           "any-anbm-or-c-anbm-c",
                           {},
                           {}}});
    }

    {
        ContextualGrammar g;
        g.alphabet = abc();
        g.axioms = {"cc"};
        g.selections = {{rx("c*", Alphabet("c")), {{"", "c"}, {"b", "b"}}},
                        {rx("a*|a*bc*|c*|c*ba*|a*b(cc)(cc)*ba*", abc()), {{"a", "a"}}}};
        r.push_back(LemmaRecord{
            "ec:inf_o_nc",
            "{a^m b c^{2n} b a^m} u {c^n} u {b c^n b} u {a c^n a} is generated externally with "
            "infix-closed selections",
            LemmaStatus::MachineChecked, 12, "",
            {},
            GrammarSubject{std::move(g), DerivationMode::External,
                           {{0, yes(Family::INF)}, {1, yes(Family::INF)}},
                           {{1, ClosureCheck::Op::Inf, rx("a*b(cc)(cc)*ba*", abc())}},
                           "ambc2nbam-or-cn-bcnb-acna",
                           {},
                           {}}});
    }

    {
        ContextualGrammar g;
        g.alphabet = abc();
        g.axioms = {""};
        g.selections = {{rx("(a|b)*", ab()), {{"", "a"}, {"", "b"}}},
                        {rx("(b|~)(ab)*(a|~)", ab()), {{"c", "c"}}}};
        r.push_back(LemmaRecord{
            "ec:inf_o_sydef",
            "{a,b}* u {c}{~,b}{ab}*{~,a}{c} is generated externally with infix-closed selections",
            LemmaStatus::MachineChecked, 12, "",
            {},
            GrammarSubject{std::move(g), DerivationMode::External,
                           {{0, yes(Family::INF)}, {1, yes(Family::INF)}},
                           {{1, ClosureCheck::Op::Inf, rx("(ab)*", ab())}},
                           "abwords-or-c-alternating-c",
                           {},
                           {}}});
    }

    {
        ContextualGrammar g;
        g.alphabet = ab();
        g.axioms = {"ab", "ba"};
        g.selections = {{rx("a*b*", ab()), {{"a", "b"}}}, {rx("b*a*", ab()), {{"b", "a"}}}};
        r.push_back(LemmaRecord{
            "ec:inf_o_circ",
            "{a^n b^n} u {b^n a^n} (n>=1) is generated externally with infix-closed selections",
            LemmaStatus::MachineChecked, 12, "",
            {},
            GrammarSubject{std::move(g), DerivationMode::External,
                           {{0, yes(Family::INF)}, {1, yes(Family::INF)}},
                           {{0, ClosureCheck::Op::Inf, rx("a*b*", ab())},
                            {1, ClosureCheck::Op::Inf, rx("b*a*", ab())}},
                           "anbn-or-bnan",
                           {},
                           {}}});
    }

    {
        ContextualGrammar g;
        g.alphabet = ab();
        g.axioms = {"", "a"};
        g.selections = {{rx("(a|b)*a", ab()), {{"b", ""}}}};
        r.push_back(LemmaRecord{
            "ec:comb_o_pre",
            "{b^n a : n>=0} u {~} is generated externally with a combinational selection",
            LemmaStatus::MachineChecked, 12, "",
            {},
            GrammarSubject{std::move(g), DerivationMode::External,
                           {{0, yes(Family::COMB)}},
                           {},
                           "bna-or-epsilon",
                           {},
                           {}}});
    }

    {
        ContextualGrammar g;
        g.alphabet = ab();
        g.axioms = {"bbba", "bb"};
        g.selections = {{rx("(a|b)(a|b)(a|b)(a|b)(a|b)*", ab()), {{"", "a"}}}};
        r.push_back(LemmaRecord{
            "ec:nil_o_pre",
            "{bbb a^n : n>=1} u {bb} is generated externally with a nilpotent selection",
            LemmaStatus::MachineChecked, 12, "",
            {},
            GrammarSubject{std::move(g), DerivationMode::External,
                           {{0, yes(Family::NIL)}},
                           {},
                           "bbban-or-bb",
                           {},
                           {}}});
    }

    // --- internal contextual grammars ---

    {
        ContextualGrammar g;
        g.alphabet = abcd();
        g.axioms = {"aab"};
        g.selections = {{fin({"ab", "b", ""}, ab()), {{"c", "d"}}}};
        r.push_back(LemmaRecord{
            "ic:suf_o_pre",
            "the internal grammar with suffix-closed selection {ab,b,~} over axiom aab",
            LemmaStatus::MachineChecked, 12, "",
            {},
            GrammarSubject{std::move(g), DerivationMode::Internal,
                           {{0, yes(Family::SUF)}},
                           {},
                           "",
                           {"acabd"},
                           {"accadbd"}}});
    }

    {
        ContextualGrammar g;
        g.alphabet = abcd();
        g.axioms = {"abb"};
        g.selections = {{fin({"ab", "a", ""}, ab()), {{"c", "d"}}}};
        r.push_back(LemmaRecord{
            "ic:pre_o_suf",
            "the internal grammar with prefix-closed selection {ab,a,~} over axiom abb",
            LemmaStatus::MachineChecked, 12, "",
            {},
            GrammarSubject{std::move(g), DerivationMode::Internal,
                           {{0, yes(Family::PRE)}},
                           {},
                           "",
                           {"cabdb"},
                           {"cacbddb"}}});
    }

    {
        ContextualGrammar g;
        g.alphabet = Alphabet("abcdefgh");
        g.axioms = {"cd"};
        g.selections = {{rx("(a|b)*(~|c|cd)|d", abcd()), {{"aab", "gh"}}},
                        {rx("ab*|b*c|b*|a(bb)(bb)*c", abc()), {{"e", "f"}}}};
        r.push_back(LemmaRecord{
            "ic:inf_o_nc",
            "the internal grammar with infix-closed selections Inf({a,b}*cd) and Inf(a(bb)+c)",
            LemmaStatus::MachineChecked, 12, "",
            {},
            GrammarSubject{std::move(g), DerivationMode::Internal,
                           {{0, yes(Family::INF)}, {1, yes(Family::INF)}},
                           {{0, ClosureCheck::Op::Inf, rx("(a|b)*cd", abcd())},
                            {1, ClosureCheck::Op::Inf, rx("a(bb)(bb)*c", abc())}},
                           "",
                           {"aabcdgh", "aabecfdgh", "aaaabbcdghgh", "aaaeabbcfdghgh"},
                           {}}});
    }

    {
        ContextualGrammar g;
        g.alphabet = abc();
        g.axioms = {"abcaaabca"};
        g.selections = {
            {fin({"", "a", "b", "c", "ab", "bc", "ca", "abc", "bca", "abca"}, abc()), {{"b", "c"}}}};
        r.push_back(LemmaRecord{
            "ic:inf_o_sydef",
            "the internal grammar with the infix-closed selection Inf({abca}) over axiom abcaaabca",
            LemmaStatus::MachineChecked, 12, "",
            {},
            GrammarSubject{std::move(g), DerivationMode::Internal,
                           {{0, yes(Family::INF)}},
                           {{0, ClosureCheck::Op::Inf, fin({"abca"}, abc())}},
                           "",
                           {"babcacaabca", "abcaababcac"},
                           {"bbabcacababcacc"}}});
    }

    {
        ContextualGrammar g;
        g.alphabet = abcd();
        g.axioms = {"aab", "ba"};
        g.selections = {{fin({"ab", "a", "b", ""}, ab()), {{"c", "d"}}}};
        r.push_back(LemmaRecord{
            "ic:inf_o_circ",
            "the internal grammar with infix-closed selection {ab,a,b,~} over axioms aab and ba",
            LemmaStatus::MachineChecked, 12, "",
            {},
            GrammarSubject{std::move(g), DerivationMode::Internal,
                           {{0, yes(Family::INF)}},
                           {},
                           "",
                           {"acabd", "bcad"},
                           {}}});
    }

    r.push_back(LemmaRecord{
        "ic:fin_comb_o_pre",
        "{c^n a c^m b c^{n+m}} lies in IC(FIN) and IC(COMB) but not IC(PRE)",
        LemmaStatus::ExternalProof, 12,
        "the generating grammar is constructed in cited prior work; not reproduced here",
        {},
        std::nullopt});

    {
        ContextualGrammar g;
        g.alphabet = abcd();
        g.axioms = {"baab"};
        g.selections = {{fin({"a", ""}, Alphabet("a")), {{"c", "d"}}},
                        {fin({"b", ""}, Alphabet("b")), {{"d", "c"}}}};
        r.push_back(LemmaRecord{
            "ic:inf_o_star",
            "the internal grammar with infix-closed selections {a,~} and {b,~} over axiom baab",
            LemmaStatus::MachineChecked, 12,
            "only the selection classifications and generation sanity are checkable here",
            {},
            GrammarSubject{std::move(g), DerivationMode::Internal,
                           {{0, yes(Family::INF)}, {1, yes(Family::INF)}},
                           {},
                           "",
                           {"bcadab"},
                           {}}});
    }

    return r;
}

} // namespace

const std::vector<LemmaRecord>& registry() {
    static const std::vector<LemmaRecord> r = build_registry();
    return r;
}

const LemmaRecord* find_record(const std::string& id) {
    for (const LemmaRecord& rec : registry())
        if (rec.id == id) return &rec;
    return nullptr;
}

// ---------------------------------------------------------------------------
// naive rewriter oracle
// ---------------------------------------------------------------------------

namespace {

// Selection membership without the compiled DFA: finite selections by word-set
// scan, everything else by direct NFA simulation.
class OracleMatcher {
public:
    explicit OracleMatcher(const LanguageSpec& spec) {
        if (spec.kind == LanguageSpec::Kind::Finite) {
            words_.emplace(spec.words.begin(), spec.words.end());
        } else if (spec.kind == LanguageSpec::Kind::Regex) {
            nfa_.emplace(thompson(parse_regex(spec.expr, spec.alphabet), spec.alphabet));
        } else {
            nfa_.emplace(nfa_from_dfa(spec.dfa));
        }
    }

    const std::set<Word>* finite_words() const { return words_ ? &*words_ : nullptr; }

    bool member(std::string_view w) const {
        if (words_) return words_->count(Word(w)) > 0;
        return matcher().matches(w);
    }

private:
    const NfaMatcher& matcher() const {
        if (!sim_) sim_.emplace(*nfa_);
        return *sim_;
    }

    std::optional<std::set<Word>> words_;
    std::optional<Nfa> nfa_;
    mutable std::optional<NfaMatcher> sim_;
};

} // namespace

std::set<Word> naive_generate(const ContextualGrammar& g, DerivationMode mode, int max_len) {
    std::vector<OracleMatcher> matchers;
    for (const SelectionPair& p : g.selections) matchers.emplace_back(p.selection);

    std::set<Word> words;
    for (const Word& a : g.axioms)
        if (static_cast<int>(a.size()) <= max_len) words.insert(a);

    // Semi-naive fixpoint: each pass rewrites only the words found in the
    // previous pass.
    std::vector<Word> fresh(words.begin(), words.end());
    while (!fresh.empty()) {
        std::vector<Word> next_fresh;
        for (const Word& w : fresh) {
            for (std::size_t i = 0; i < g.selections.size(); ++i) {
                const auto& contexts = g.selections[i].contexts;
                auto emit = [&](const Word& candidate) {
                    if (static_cast<int>(candidate.size()) > max_len) return;
                    if (words.insert(candidate).second) next_fresh.push_back(candidate);
                    if (words.size() > 2'000'000)
                        throw ResourceError("oracle generation exceeded 2e6 words");
                };
                if (mode == DerivationMode::External) {
                    if (!matchers[i].member(w)) continue;
                    for (const Context& c : contexts) emit(c.left + w + c.right);
                    continue;
                }
                if (const std::set<Word>* sel = matchers[i].finite_words()) {
                    // occurrence scan per selection word
                    for (const Word& s : *sel)
                        for (std::size_t pos = 0; pos + s.size() <= w.size(); ++pos) {
                            if (w.compare(pos, s.size(), s) != 0) continue;
                            for (const Context& c : contexts)
                                emit(w.substr(0, pos) + c.left + s + c.right + w.substr(pos + s.size()));
                        }
                } else {
                    // infix length first, then start position
                    for (std::size_t len = 0; len <= w.size(); ++len)
                        for (std::size_t pos = 0; pos + len <= w.size(); ++pos) {
                            if (!matchers[i].member(std::string_view(w).substr(pos, len))) continue;
                            for (const Context& c : contexts)
                                emit(w.substr(0, pos) + c.left + w.substr(pos, len) + c.right +
                                     w.substr(pos + len));
                        }
                }
            }
        }
        fresh = std::move(next_fresh);
    }
    return words;
}

// ---------------------------------------------------------------------------
// verification
// ---------------------------------------------------------------------------

namespace {

void for_each_word(const Alphabet& alphabet, int max_len, const std::function<void(const Word&)>& fn) {
    fn("");
    std::vector<int> idx;
    for (int len = 1; len <= max_len; ++len) {
        idx.assign(static_cast<std::size_t>(len), 0);
        if (alphabet.size() == 0) return;
        while (true) {
            Word w(static_cast<std::size_t>(len), ' ');
            for (int i = 0; i < len; ++i) w[static_cast<std::size_t>(i)] = alphabet.letter(idx[static_cast<std::size_t>(i)]);
            fn(w);
            int i = len - 1;
            while (i >= 0 && ++idx[static_cast<std::size_t>(i)] == alphabet.size()) idx[static_cast<std::size_t>(i--)] = 0;
            if (i < 0) break;
        }
    }
}

std::string set_difference_summary(const std::set<Word>& got, const std::set<Word>& want) {
    std::ostringstream os;
    int shown = 0;
    for (const Word& w : want)
        if (!got.count(w) && shown++ < 3) os << " missing " << show(w);
    shown = 0;
    for (const Word& w : got)
        if (!want.count(w) && shown++ < 3) os << " unexpected " << show(w);
    return os.str();
}

std::string closure_op_name(ClosureCheck::Op op) {
    switch (op) {
        case ClosureCheck::Op::Pre: return "Pre";
        case ClosureCheck::Op::Suf: return "Suf";
        case ClosureCheck::Op::Inf: return "Inf";
    }
    return "?";
}

Dfa apply_closure(ClosureCheck::Op op, const Dfa& d) {
    switch (op) {
        case ClosureCheck::Op::Pre: return prefix_closure(d);
        case ClosureCheck::Op::Suf: return suffix_closure(d);
        case ClosureCheck::Op::Inf: return infix_closure(d);
    }
    return d;
}

} // namespace

LemmaReport check_record(const LemmaRecord& rec, std::optional<int> bound_override) {
    using clock = std::chrono::steady_clock;
    auto start = clock::now();

    LemmaReport rep;
    rep.id = rec.id;
    rep.notes = rec.notes;

    if (rec.status == LemmaStatus::ExternalProof) {
        rep.outcome = LemmaOutcome::Skipped;
        auto ms = std::chrono::duration<double, std::milli>(clock::now() - start);
        rep.millis = ms.count();
        return rep;
    }

    const int bound = bound_override.value_or(rec.bound);
    auto add = [&](std::string name, bool ok, std::string details = "") {
        rep.checks.push_back(CheckResult{std::move(name), ok, std::move(details)});
    };

    try {
        for (const LanguageSubject& subj : rec.languages) {
            Dfa lang = compile(subj.language);
            for (const FamilyClaim& claim : subj.claims) {
                FamilyVerdict v = decide(claim.family, lang, subj.language.alphabet);
                std::string name = subj.label + ": " + std::string(family_name(claim.family)) + " = " +
                                   std::string(verdict_name(claim.expected));
                add(std::move(name), v.verdict == claim.expected, v.evidence);
            }
        }

        if (rec.grammar) {
            const GrammarSubject& gs = *rec.grammar;
            std::vector<std::string> violations = validate(gs.grammar);
            std::string joined;
            for (const std::string& v : violations) joined += (joined.empty() ? "" : "; ") + v;
            add("grammar validates", violations.empty(), joined);
            if (violations.empty()) {
                GrammarEngine engine(gs.grammar);

                for (const SelectionClaim& sc : gs.selection_claims) {
                    const LanguageSpec& sel = gs.grammar.selections[sc.selection_index].selection;
                    FamilyVerdict v =
                        decide(sc.claim.family, engine.selection_dfa(sc.selection_index), sel.alphabet);
                    add("selection #" + std::to_string(sc.selection_index + 1) + ": " +
                            std::string(family_name(sc.claim.family)) + " = " +
                            std::string(verdict_name(sc.claim.expected)),
                        v.verdict == sc.claim.expected, v.evidence);
                }

                for (const ClosureCheck& cc : gs.closure_checks) {
                    Dfa closed = apply_closure(cc.op, compile(cc.base));
                    bool ok = equivalent(engine.selection_dfa(cc.selection_index), closed);
                    add("selection #" + std::to_string(cc.selection_index + 1) + " equals " +
                            closure_op_name(cc.op) + " of its base language",
                        ok);
                }

                std::vector<Word> slice_vec = engine.generate(gs.mode, bound);
                std::set<Word> slice(slice_vec.begin(), slice_vec.end());

                bool trivial = true;
                for (const Word& w : slice)
                    if (std::find(gs.grammar.axioms.begin(), gs.grammar.axioms.end(), w) ==
                        gs.grammar.axioms.end())
                        trivial = false;
                if (trivial) rep.notes += (rep.notes.empty() ? "" : "; ") + std::string("trivial slice");

                if (!gs.reference.empty()) {
                    const ReferencePredicate& pred = reference_predicate(gs.reference);
                    std::set<Word> expected;
                    for_each_word(gs.grammar.alphabet, bound, [&](const Word& w) {
                        if (pred(w)) expected.insert(w);
                    });
                    add("generated slice " + std::to_string(bound) + " equals the closed form",
                        slice == expected, set_difference_summary(slice, expected));
                }

                std::set<Word> oracle = naive_generate(gs.grammar, gs.mode, bound);
                add("engine agrees with the naive rewriter", slice == oracle,
                    set_difference_summary(slice, oracle));

                int deep = bound;
                for (const Word& w : gs.member_words) deep = std::max(deep, static_cast<int>(w.size()));
                for (const Word& w : gs.non_member_words) deep = std::max(deep, static_cast<int>(w.size()));
                std::set<Word> deep_slice = slice;
                if (deep > bound) {
                    std::vector<Word> v = engine.generate(gs.mode, deep);
                    deep_slice = std::set<Word>(v.begin(), v.end());
                }
                for (const Word& w : gs.member_words)
                    add("derives " + show(w), deep_slice.count(w) > 0);
                for (const Word& w : gs.non_member_words)
                    add("never derives " + show(w), deep_slice.count(w) == 0);
            }
        }

        rep.outcome = LemmaOutcome::Passed;
        for (const CheckResult& c : rep.checks)
            if (!c.passed) rep.outcome = LemmaOutcome::Failed;
    } catch (const ResourceError& e) {
        rep.outcome = LemmaOutcome::Skipped;
        rep.notes += (rep.notes.empty() ? "" : "; ") + std::string("skipped (resource): ") + e.what();
    }

    auto ms = std::chrono::duration<double, std::milli>(clock::now() - start);
    rep.millis = ms.count();
    return rep;
}

LemmaReport verify_lemma(const std::string& id, std::optional<int> bound_override) {
    const LemmaRecord* rec = find_record(id);
    if (!rec) throw std::invalid_argument("unknown lemma id \"" + id + "\"");
    return check_record(*rec, bound_override);
}

VerificationReport verify_all(std::optional<int> bound_override) {
    VerificationReport report;
    for (const LemmaRecord& rec : registry()) {
        LemmaReport lr = check_record(rec, bound_override);
        switch (lr.outcome) {
            case LemmaOutcome::Passed: ++report.passed; break;
            case LemmaOutcome::Failed: ++report.failed; break;
            case LemmaOutcome::Skipped: ++report.skipped; break;
        }
        report.lemmas.push_back(std::move(lr));
    }
    return report;
}

nlohmann::json report_to_json(const VerificationReport& report, bool include_timings) {
    nlohmann::json j;
    nlohmann::json lemmas = nlohmann::json::array();
    for (const LemmaReport& lr : report.lemmas) {
        nlohmann::json e;
        e["id"] = lr.id;
        e["outcome"] = lr.outcome == LemmaOutcome::Passed   ? "pass"
                       : lr.outcome == LemmaOutcome::Failed ? "fail"
                                                            : "skipped";
        if (include_timings) e["millis"] = lr.millis;
        if (!lr.notes.empty()) e["notes"] = lr.notes;
        nlohmann::json checks = nlohmann::json::array();
        for (const CheckResult& c : lr.checks) {
            nlohmann::json ce;
            ce["name"] = c.name;
            ce["passed"] = c.passed;
            if (!c.details.empty()) ce["details"] = c.details;
            checks.push_back(std::move(ce));
        }
        e["checks"] = std::move(checks);
        lemmas.push_back(std::move(e));
    }
    j["lemmas"] = std::move(lemmas);
    j["summary"] = {{"passed", report.passed}, {"failed", report.failed}, {"skipped", report.skipped}};
    return j;
}

std::string report_to_table(const VerificationReport& report, bool include_timings) {
    std::ostringstream os;
    for (const LemmaReport& lr : report.lemmas) {
        const char* tag = lr.outcome == LemmaOutcome::Passed   ? "PASS"
                          : lr.outcome == LemmaOutcome::Failed ? "FAIL"
                                                               : "SKIP";
        os << tag << "  " << lr.id << "  (" << lr.checks.size() << " checks";
        if (include_timings) {
            os.precision(1);
            os << ", " << std::fixed << lr.millis << " ms";
        }
        os << ")";
        if (!lr.notes.empty()) os << "  [" << lr.notes << "]";
        os << "\n";
        for (const CheckResult& c : lr.checks)
            if (!c.passed) os << "      failed: " << c.name << (c.details.empty() ? "" : " -- " + c.details)
                              << "\n";
    }
    os << "summary: " << report.passed << " passed, " << report.failed << " failed, " << report.skipped
       << " skipped (external proof)\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// hierarchy implication corpus
// ---------------------------------------------------------------------------

std::vector<CorpusEntry> witness_corpus() {
    std::vector<CorpusEntry> corpus;
    auto put = [&](std::string label, LanguageSpec spec) {
        corpus.push_back(CorpusEntry{std::move(label), std::move(spec)});
    };
    put("{ab,a,~}", fin({"ab", "a", ""}, ab()));
    put("{ab,b,~}", fin({"ab", "b", ""}, ab()));
    put("{ab,a,b,~}", fin({"ab", "a", "b", ""}, ab()));
    put("Inf(a(bb)+a)", inf_of_ab2na());
    put("(a|b)*b", rx("(a|b)*b", ab()));
    put("(aa)*", rx("(aa)*", Alphabet("a")));
    put("empty", fin({}, ab()));
    put("{~}", fin({""}, ab()));
    put("(a|b)*", rx("(a|b)*", ab()));
    put("a* over {a,b}", rx("a*", ab()));
    put("a*b", rx("a*b", ab()));
    put("(aa)*b", rx("(aa)*b", ab()));
    put("(ab)*", rx("(ab)*", ab()));
    put("rotations of aabb", fin({"aabb", "abba", "bbaa", "baab"}, ab()));
    put("b*", rx("b*", ab()));
    return corpus;
}

std::vector<CorpusEntry> random_dfa_corpus(int count, int max_states, int alphabet_size,
                                           std::uint64_t seed) {
    // mt19937_64 with explicit modulo keeps the corpus identical across
    // platforms (distributions are not portable).
    std::mt19937_64 rng(seed);
    std::vector<CorpusEntry> corpus;
    for (int i = 0; i < count; ++i) {
        int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_states));
        int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(alphabet_size));
        Dfa d;
        d.alphabet = Alphabet(std::string("abc").substr(0, static_cast<std::size_t>(k)));
        d.state_count = n;
        d.initial = 0;
        d.accepting.resize(static_cast<std::size_t>(n));
        for (int q = 0; q < n; ++q) d.accepting[static_cast<std::size_t>(q)] = rng() % 2 == 0;
        d.delta.resize(static_cast<std::size_t>(n) * k);
        for (std::size_t t = 0; t < d.delta.size(); ++t)
            d.delta[t] = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        corpus.push_back(CorpusEntry{"random-" + std::to_string(i), LanguageSpec::automaton(minimize(d))});
    }
    return corpus;
}

namespace {

constexpr HierarchyEdge kEdges[] = {
    {Family::MON, Family::INF},  {Family::INF, Family::PRE},  {Family::INF, Family::SUF},
    {Family::PRE, Family::PS},   {Family::SUF, Family::PS},   {Family::FIN, Family::NIL},
    {Family::NIL, Family::DEF},  {Family::COMB, Family::DEF}, {Family::DEF, Family::NC},
    {Family::ORD, Family::NC},   {Family::NC, Family::PS},    {Family::COMM, Family::CIRC},
};

} // namespace

std::span<const HierarchyEdge> hierarchy_edges() { return kEdges; }

ImplicationReport implication_corpus_check(const std::vector<CorpusEntry>& corpus) {
    // families appearing in the edge list
    std::vector<Family> families = {Family::MON, Family::INF, Family::PRE,  Family::SUF,
                                    Family::PS,  Family::FIN, Family::NIL,  Family::DEF,
                                    Family::COMB, Family::NC, Family::ORD,  Family::COMM,
                                    Family::CIRC};

    ImplicationReport report;
    std::map<std::pair<Family, Family>, std::string> witnesses;

    for (const CorpusEntry& entry : corpus) {
        Dfa lang = compile(entry.language);
        std::map<Family, Verdict> verdicts;
        for (Family f : families) {
            try {
                verdicts[f] = decide(f, lang, entry.language.alphabet).verdict;
            } catch (const ResourceError&) {
                verdicts[f] = Verdict::Unknown;
            }
        }
        for (const HierarchyEdge& edge : kEdges) {
            Verdict narrower = verdicts[edge.narrower], wider = verdicts[edge.wider];
            if (narrower == Verdict::Yes && wider == Verdict::No)
                report.violations.push_back(ImplicationReport::Violation{
                    entry.label, edge,
                    std::string(family_name(edge.narrower)) + " holds but " +
                        std::string(family_name(edge.wider)) + " does not"});
            if (wider == Verdict::Yes && narrower == Verdict::No) {
                auto key = std::make_pair(edge.narrower, edge.wider);
                if (!witnesses.count(key)) witnesses[key] = entry.label;
            }
        }
    }

    for (const HierarchyEdge& edge : kEdges) {
        auto it = witnesses.find(std::make_pair(edge.narrower, edge.wider));
        if (it == witnesses.end())
            report.unwitnessed_edges.push_back(edge);
        else
            report.properness_witnesses.push_back({edge, it->second});
    }
    return report;
}

nlohmann::json implication_report_to_json(const ImplicationReport& report) {
    nlohmann::json j;
    nlohmann::json violations = nlohmann::json::array();
    for (const auto& v : report.violations)
        violations.push_back({{"language", v.label},
                              {"edge", std::string(family_name(v.edge.narrower)) + " => " +
                                           std::string(family_name(v.edge.wider))},
                              {"details", v.details}});
    j["violations"] = std::move(violations);
    nlohmann::json props = nlohmann::json::array();
    for (const auto& [edge, label] : report.properness_witnesses)
        props.push_back({{"edge", std::string(family_name(edge.narrower)) + " => " +
                                      std::string(family_name(edge.wider))},
                         {"witness", label}});
    j["properness"] = std::move(props);
    nlohmann::json missing = nlohmann::json::array();
    for (const auto& edge : report.unwitnessed_edges)
        missing.push_back(std::string(family_name(edge.narrower)) + " => " +
                          std::string(family_name(edge.wider)));
    j["unwitnessed"] = std::move(missing);
    j["ok"] = report.ok();
    return j;
}

std::string implication_report_to_table(const ImplicationReport& report) {
    std::ostringstream os;
    for (const auto& v : report.violations)
        os << "VIOLATION  " << v.label << ": " << v.details << "\n";
    for (const auto& [edge, label] : report.properness_witnesses)
        os << "witness    " << family_name(edge.narrower) << " < " << family_name(edge.wider) << "  by  "
           << label << "\n";
    for (const auto& edge : report.unwitnessed_edges)
        os << "UNWITNESSED  " << family_name(edge.narrower) << " < " << family_name(edge.wider) << "\n";
    os << (report.ok() ? "no implication violations\n" : "implication violations found\n");
    return os.str();
}

} // namespace subreg::harness
