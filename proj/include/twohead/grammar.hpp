// Left deterministic linear grammars: rules of the form T -> a T' u or
// T -> lambda, where the pair (T, a) identifies the rule. Provides the
// LDLG checker, bounded generation, and compilation to deterministic
// 2-head automata.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twohead/analyze.hpp"
#include "twohead/automaton.hpp"

namespace twohead {

struct RuleBody {
    Letter first;        // leading terminal
    std::string next;    // the single nonterminal after it
    std::string suffix;  // trailing terminals

    friend auto operator<=>(const RuleBody&, const RuleBody&) = default;
};

/// T -> first next suffix, or T -> lambda when body is absent.
struct Rule {
    std::string lhs;
    std::optional<RuleBody> body;

    friend auto operator<=>(const Rule&, const Rule&) = default;
};

inline std::string to_string(const Rule& r) {
    if (!r.body)
        return r.lhs + " -> " + kLambda;
    return r.lhs + " -> " + std::string(1, r.body->first) + " " + r.body->next +
           (r.body->suffix.empty() ? "" : " " + r.body->suffix);
}

/// Linear grammar in left deterministic shape. Construction validates
/// symbol declarations only; the left-determinism condition itself is a
/// checkable property (check_ldlg), so clashing rule sets are representable.
class Grammar {
public:
    Grammar(std::vector<std::string> nonterminals, std::vector<Letter> terminals,
            std::string start, std::vector<Rule> rules)
        : nonterminals_(std::move(nonterminals)),
          terminals_(std::move(terminals)),
          start_(std::move(start)),
          rules_(std::move(rules)) {
        validate();
    }

    const std::vector<std::string>& nonterminals() const { return nonterminals_; }
    const std::vector<Letter>& terminals() const { return terminals_; }
    const std::string& start() const { return start_; }
    const std::vector<Rule>& rules() const { return rules_; }

    bool has_terminal(Letter a) const {
        return std::binary_search(terminals_.begin(), terminals_.end(), a);
    }

    std::vector<std::string> sorted_nonterminals() const {
        std::vector<std::string> s = nonterminals_;
        std::sort(s.begin(), s.end());
        return s;
    }

    // Equality is structural and ignores declaration order of nonterminals.
    friend bool operator==(const Grammar& a, const Grammar& b) {
        return a.sorted_nonterminals() == b.sorted_nonterminals() &&
               a.terminals_ == b.terminals_ && a.start_ == b.start_ && a.rules_ == b.rules_;
    }

private:
    void validate() {
        if (nonterminals_.empty())
            throw ValidationError("grammar needs at least one nonterminal");
        if (terminals_.empty())
            throw ValidationError("grammar needs at least one terminal");
        std::sort(terminals_.begin(), terminals_.end());
        if (std::adjacent_find(terminals_.begin(), terminals_.end()) != terminals_.end())
            throw ValidationError("duplicate terminal");
        for (Letter a : terminals_)
            if (a <= ' ' || a > '~' || a == '"')
                throw ValidationError("terminals must be printable ASCII");

        std::set<std::string> declared;
        for (const std::string& nt : nonterminals_) {
            if (nt.empty())
                throw ValidationError("nonterminal names must be non-empty");
            if (nt.find('#') != std::string::npos)
                throw ValidationError("nonterminal names must not contain '#': " + nt);
            if (!declared.insert(nt).second)
                throw ValidationError("duplicate nonterminal: " + nt);
        }
        if (!declared.count(start_))
            throw ValidationError("start symbol is not declared: " + start_);

        for (const Rule& r : rules_) {
            if (!declared.count(r.lhs))
                throw ValidationError("rule uses undeclared nonterminal: " + to_string(r));
            if (!r.body)
                continue;
            if (!has_terminal(r.body->first))
                throw ValidationError("rule must begin with a declared terminal: " +
                                      to_string(r));
            if (!declared.count(r.body->next))
                throw ValidationError("rule uses undeclared nonterminal: " + to_string(r));
            for (Letter a : r.body->suffix)
                if (!has_terminal(a))
                    throw ValidationError("rule suffix uses undeclared terminal: " +
                                          to_string(r));
        }
        std::sort(rules_.begin(), rules_.end());
        rules_.erase(std::unique(rules_.begin(), rules_.end()), rules_.end());
    }

    std::vector<std::string> nonterminals_;
    std::vector<Letter> terminals_;
    std::string start_;
    std::vector<Rule> rules_;
};

/// Left determinism: no two rules share (lhs, first terminal), so the first
/// terminal uniquely identifies the rule applied for a nonterminal.
inline PropertyReport check_ldlg(const Grammar& G) {
    PropertyReport report{"left-deterministic"};
    std::map<std::pair<std::string, Letter>, const Rule*> seen;
    for (const Rule& r : G.rules()) {
        if (!r.body)
            continue;
        auto key = std::make_pair(r.lhs, r.body->first);
        auto [it, inserted] = seen.emplace(key, &r);
        if (!inserted)
            report.fail("first-terminal-clash",
                        to_string(*it->second) + " / " + to_string(r));
    }
    return report;
}

/// Words of length <= max_len with their derivation counts. A valid LDLG is
/// unambiguous, so every count is 1; the counts exist to make that testable.
inline std::map<std::string, long> generate_with_multiplicity(const Grammar& G,
                                                              int max_len) {
    PropertyReport ldlg = check_ldlg(G);
    if (!ldlg.ok())
        throw PreconditionError("left-deterministic",
                                "generation requires a left deterministic grammar");

    std::map<std::string, int> nt_index;
    for (size_t i = 0; i < G.nonterminals().size(); ++i)
        nt_index[G.nonterminals()[i]] = static_cast<int>(i);
    std::vector<std::vector<const Rule*>> by_lhs(G.nonterminals().size());
    for (const Rule& r : G.rules())
        by_lhs[static_cast<size_t>(nt_index[r.lhs])].push_back(&r);

    // derive(T, budget) = middle words of length <= budget, one entry per
    // derivation; memoized on (T, budget).
    std::map<std::pair<int, int>, std::vector<std::string>> memo;
    auto derive = [&](auto&& self, int nt, int budget) -> const std::vector<std::string>& {
        auto key = std::make_pair(nt, budget);
        auto found = memo.find(key);
        if (found != memo.end())
            return found->second;
        std::vector<std::string> words;
        for (const Rule* r : by_lhs[static_cast<size_t>(nt)]) {
            if (!r->body) {
                words.emplace_back();
                continue;
            }
            int used = 1 + static_cast<int>(r->body->suffix.size());
            if (used > budget)
                continue;
            for (const std::string& mid :
                 self(self, nt_index[r->body->next], budget - used))
                words.push_back(std::string(1, r->body->first) + mid + r->body->suffix);
        }
        return memo.emplace(key, std::move(words)).first->second;
    };

    std::map<std::string, long> result;
    for (const std::string& w : derive(derive, nt_index[G.start()], max_len))
        ++result[w];
    return result;
}

/// All terminal words of length <= max_len derivable from the start symbol,
/// in length-then-lexicographic order.
inline std::vector<std::string> generate(const Grammar& G, int max_len) {
    std::vector<std::string> words;
    for (const auto& [w, count] : generate_with_multiplicity(G, max_len))
        words.push_back(w);
    std::sort(words.begin(), words.end(), [](const std::string& a, const std::string& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return words;
}

/// Compile an LDLG into a deterministic 2-head automaton: one state per
/// nonterminal plus a fresh chain per rule. For T -> a T' u the first head
/// reads a out of state T, then the chain consumes u with the second head
/// from its last letter to its first, ending in T'. The order mirrors a
/// leftmost derivation, which places u rightmost in the produced word.
/// Nonterminals with a lambda rule become final states.
inline Automaton grammar_to_automaton(const Grammar& G) {
    PropertyReport ldlg = check_ldlg(G);
    if (!ldlg.ok())
        throw PreconditionError("left-deterministic",
                                "compilation requires a left deterministic grammar");

    std::vector<std::string> states = G.nonterminals();
    std::vector<std::string> finals;
    std::vector<Transition> transitions;

    for (size_t k = 0; k < G.rules().size(); ++k) {
        const Rule& r = G.rules()[k];
        if (!r.body) {
            finals.push_back(r.lhs);
            continue;
        }
        const std::string& suffix = r.body->suffix;
        std::string prev = r.lhs;
        ReadPair read{r.body->first, std::nullopt};
        for (size_t i = suffix.size(); i > 0; --i) {
            std::string chain =
                r.lhs + "#" + std::to_string(k) + "." + std::to_string(suffix.size() - i + 1);
            states.push_back(chain);
            transitions.push_back({prev, read, chain});
            prev = chain;
            read = ReadPair{std::nullopt, suffix[i - 1]};
        }
        transitions.push_back({prev, read, r.body->next});
    }
    return Automaton(std::move(states), G.terminals(), G.start(), std::move(finals),
                     std::move(transitions));
}

}  // namespace twohead
