#pragma once

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "polycfl/util.hpp"

namespace polycfl {

// Symbols are encoded in a single int: nonterminal i is i, terminal j is -1-j.
using Sym = std::int32_t;

constexpr Sym sym_nt(int i) { return i; }
constexpr Sym sym_t(int j) { return -1 - j; }
constexpr bool is_term(Sym s) { return s < 0; }
constexpr int term_index(Sym s) { return -1 - s; }
constexpr int nt_index(Sym s) { return s; }

/// A word is a sequence of terminal indices into Grammar::terminals.
using Letter = char16_t;
using Word = std::u16string;

struct Rule {
    int lhs = 0;               // nonterminal index
    std::vector<Sym> rhs;      // possibly empty (epsilon)

    auto operator<=>(const Rule&) const = default;
};

/// A context-free grammar: nonterminals, terminals, production rules, start symbol.
/// Symbol order is first-appearance order; all values are immutable in use.
struct Grammar {
    std::vector<std::string> nonterminals;
    std::vector<std::string> terminals;
    std::vector<Rule> rules;
    int start = 0;

    int nt_count() const { return static_cast<int>(nonterminals.size()); }
    int t_count() const { return static_cast<int>(terminals.size()); }

    const std::string& sym_name(Sym s) const {
        return is_term(s) ? terminals[static_cast<size_t>(term_index(s))]
                          : nonterminals[static_cast<size_t>(nt_index(s))];
    }

    /// Checks every structural invariant; throws ValidationError on the first violation.
    void validate() const {
        if (nonterminals.empty()) throw ValidationError("grammar has no nonterminals");
        if (start < 0 || start >= nt_count()) throw ValidationError("start symbol missing");
        std::set<std::string> names;
        for (const auto& n : nonterminals)
            if (!names.insert(n).second) throw ValidationError("duplicate symbol name: " + n);
        for (const auto& t : terminals)
            if (!names.insert(t).second)
                throw ValidationError("symbol is both nonterminal and terminal: " + t);
        std::set<Rule> seen;
        for (const Rule& r : rules) {
            if (r.lhs < 0 || r.lhs >= nt_count()) throw ValidationError("rule lhs undeclared");
            for (Sym s : r.rhs) {
                if (is_term(s)) {
                    if (term_index(s) >= t_count()) throw ValidationError("undeclared terminal in rhs");
                } else if (nt_index(s) >= nt_count()) {
                    throw ValidationError("undeclared nonterminal in rhs");
                }
            }
            if (!seen.insert(r).second)
                throw ValidationError("duplicate rule: " + nonterminals[static_cast<size_t>(r.lhs)]);
        }
    }

    /// Renders a word for display. Single-character alphabets concatenate,
    /// anything else is space-joined.
    std::string render_word(const Word& w) const {
        bool singles = true;
        for (const auto& t : terminals)
            if (t.size() != 1) singles = false;
        std::string out;
        for (size_t i = 0; i < w.size(); ++i) {
            size_t idx = static_cast<size_t>(w[i]);
            if (idx >= terminals.size()) throw UnknownLetterError("letter id out of range");
            if (!singles && i > 0) out += ' ';
            out += terminals[idx];
        }
        return out;
    }

    /// Parses display text back into a word. Returns nullopt when some letter
    /// is not in the alphabet.
    std::optional<Word> parse_word(std::string_view text) const {
        bool singles = true;
        for (const auto& t : terminals)
            if (t.size() != 1) singles = false;
        std::map<std::string, Letter, std::less<>> index;
        for (size_t j = 0; j < terminals.size(); ++j)
            index.emplace(terminals[j], static_cast<Letter>(j));
        Word w;
        if (singles) {
            for (char c : text) {
                auto it = index.find(std::string_view(&c, 1));
                if (it == index.end()) return std::nullopt;
                w.push_back(it->second);
            }
        } else {
            std::istringstream ss{std::string(text)};
            std::string tok;
            while (ss >> tok) {
                auto it = index.find(tok);
                if (it == index.end()) return std::nullopt;
                w.push_back(it->second);
            }
        }
        return w;
    }
};

namespace detail {

inline std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream ss(line);
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

}  // namespace detail

/// Parses the textual grammar format: one rule per line,
/// `LHS -> rhs1 rhs2 ... | alt1 ... | ...`, `#` comments, first LHS is start.
/// Tokens appearing on some LHS are nonterminals; every other token is a terminal.
inline Grammar parse_grammar(std::string_view text) {
    struct RawRule {
        int line;
        std::string lhs;
        std::vector<std::vector<std::string>> alts;
    };
    std::vector<RawRule> raw;
    {
        std::istringstream ss{std::string(text)};
        std::string line;
        int lineno = 0;
        while (std::getline(ss, line)) {
            ++lineno;
            if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
            auto toks = detail::split_tokens(line);
            if (toks.empty()) continue;
            if (toks.size() < 2 || toks[1] != "->")
                throw GrammarParseError(lineno, "expected 'LHS -> ...'");
            if (toks[0] == "|" || toks[0] == "->")
                throw GrammarParseError(lineno, "bad LHS token '" + toks[0] + "'");
            RawRule rr{lineno, toks[0], {{}}};
            for (size_t i = 2; i < toks.size(); ++i) {
                if (toks[i] == "|")
                    rr.alts.emplace_back();
                else if (toks[i] == "->")
                    throw GrammarParseError(lineno, "unexpected '->'");
                else
                    rr.alts.back().push_back(toks[i]);
            }
            raw.push_back(std::move(rr));
        }
    }
    if (raw.empty()) throw GrammarParseError(0, "start symbol missing: grammar has no rules");

    Grammar g;
    std::map<std::string, int> nt_id;
    for (const auto& rr : raw) {
        if (!nt_id.count(rr.lhs)) {
            nt_id[rr.lhs] = g.nt_count();
            g.nonterminals.push_back(rr.lhs);
        }
    }
    std::map<std::string, int> t_id;
    auto symbol_of = [&](const std::string& tok) -> Sym {
        if (auto it = nt_id.find(tok); it != nt_id.end()) return sym_nt(it->second);
        auto it = t_id.find(tok);
        if (it == t_id.end()) {
            it = t_id.emplace(tok, g.t_count()).first;
            g.terminals.push_back(tok);
        }
        return sym_t(it->second);
    };
    std::set<Rule> seen;
    for (const auto& rr : raw) {
        for (const auto& alt : rr.alts) {
            Rule r;
            r.lhs = nt_id[rr.lhs];
            for (const auto& tok : alt) r.rhs.push_back(symbol_of(tok));
            if (!seen.insert(r).second)
                throw GrammarParseError(rr.line, "duplicate rule for " + rr.lhs);
            g.rules.push_back(std::move(r));
        }
    }
    g.start = 0;
    g.validate();
    return g;
}

/// Inverse of parse_grammar on grammars that came from text: one rule per line.
inline std::string format_grammar(const Grammar& g) {
    std::ostringstream out;
    for (const Rule& r : g.rules) {
        out << g.nonterminals[static_cast<size_t>(r.lhs)] << " ->";
        for (Sym s : r.rhs) out << ' ' << g.sym_name(s);
        out << '\n';
    }
    return out.str();
}

}  // namespace polycfl
