#include "subreg/regex.hpp"

#include <cctype>
#include <set>

#include "subreg/errors.hpp"

namespace subreg {

namespace {

class Parser {
public:
    Parser(std::string_view text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

    Regex parse() {
        if (text_.empty()) throw ParseError("empty regular expression", 0);
        Regex r = parse_alt();
        if (pos_ != text_.size()) {
            if (peek() == ')') throw ParseError("unbalanced parenthesis", pos_);
            throw ParseError(std::string("unexpected character '") + peek() + "'", pos_);
        }
        return r;
    }

private:
    char peek() const { return text_[pos_]; }
    bool at_end() const { return pos_ == text_.size(); }

    Regex parse_alt() {
        std::vector<Regex> branches;
        branches.push_back(parse_cat());
        while (!at_end() && peek() == '|') {
            ++pos_;
            branches.push_back(parse_cat());
        }
        if (branches.size() == 1) return std::move(branches.front());
        return Regex::alternation(std::move(branches));
    }

    Regex parse_cat() {
        std::vector<Regex> items;
        items.push_back(parse_rep());
        while (!at_end() && peek() != '|' && peek() != ')')
            items.push_back(parse_rep());
        if (items.size() == 1) return std::move(items.front());
        return Regex::concat(std::move(items));
    }

    Regex parse_rep() {
        Regex atom = parse_atom();
        if (!at_end()) {
            char c = peek();
            if (c == '*') { ++pos_; return Regex::star(std::move(atom)); }
            if (c == '+') { ++pos_; return Regex::plus(std::move(atom)); }
            if (c == '?') { ++pos_; return Regex::optional(std::move(atom)); }
        }
        return atom;
    }

    Regex parse_atom() {
        if (at_end()) throw ParseError("expected literal, '~' or '('", pos_);
        char c = peek();
        if (c == '(') {
            std::size_t open = pos_;
            ++pos_;
            Regex inner = parse_alt();
            if (at_end() || peek() != ')') throw ParseError("unbalanced parenthesis", open);
            ++pos_;
            return inner;
        }
        if (c == '~') { ++pos_; return Regex::epsilon(); }
        if (std::isalnum(static_cast<unsigned char>(c))) {
            if (!alphabet_.contains(c))
                throw ParseError(std::string("literal '") + c + "' is not in the alphabet", pos_);
            ++pos_;
            return Regex::literal(c);
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    std::string_view text_;
    const Alphabet& alphabet_;
    std::size_t pos_ = 0;
};

} // namespace

Regex parse_regex(std::string_view text, const Alphabet& alphabet) {
    return Parser(text, alphabet).parse();
}

Alphabet letters_used_in_regex(std::string_view text) {
    std::set<char> used;
    for (char c : text)
        if (std::isalnum(static_cast<unsigned char>(c))) used.insert(c);
    std::string s(used.begin(), used.end());
    return Alphabet(s);
}

} // namespace subreg
