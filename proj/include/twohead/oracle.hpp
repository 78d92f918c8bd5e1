// Ground truth by bounded brute force: semantic determinism and backward
// determinism oracles, bounded language equivalence, and exhaustive search
// over small canonical automata. Bounded agreement is evidence, not proof;
// every report states its bound.

#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "twohead/analyze.hpp"
#include "twohead/automaton.hpp"
#include "twohead/grammar.hpp"
#include "twohead/simulate.hpp"

namespace twohead {

/// A language given by a total membership predicate over V*.
struct LanguagePredicate {
    std::string name;
    std::vector<Letter> alphabet;
    std::function<bool(std::string_view)> contains;
};

/// Uniform membership view over automata, grammars and predicates, for the
/// bounded comparison below. Grammar membership is materialized up to the
/// comparison bound.
struct LanguageRef {
    std::string name;
    std::vector<Letter> alphabet;
    std::function<bool(std::string_view)> contains;
};

// Borrows A: keep the automaton alive for as long as the view is used.
inline LanguageRef make_language(const Automaton& A, std::string name = "automaton") {
    return {std::move(name), A.alphabet(), [&A](std::string_view w) { return accepts(A, w); }};
}

inline LanguageRef make_language(const LanguagePredicate& p) {
    return {p.name, p.alphabet, p.contains};
}

inline LanguageRef make_language(const Grammar& G, int bound,
                                 std::string name = "grammar") {
    auto words = std::make_shared<std::set<std::string>>();
    for (const std::string& w : generate(G, bound))
        words->insert(w);
    return {std::move(name), G.terminals(),
            [words](std::string_view w) { return words->count(std::string(w)) > 0; }};
}

/// Do the two languages agree on every word of length <= n? The witness is
/// the first disagreement in length-lexicographic order. Both sides must
/// live over the same alphabet.
inline PropertyReport language_equal(const LanguageRef& X, const LanguageRef& Y, int n) {
    if (X.alphabet != Y.alphabet)
        throw PreconditionError("shared-alphabet",
                                "language comparison requires a shared alphabet");
    PropertyReport report{"language-equal(max-len=" + std::to_string(n) + ")"};
    for_each_word(X.alphabet, n, [&](std::string_view w) {
        bool in_x = X.contains(w);
        if (in_x != Y.contains(w)) {
            report.fail("disagreement", to_string(w) + " is in " +
                                            (in_x ? X.name : Y.name) + " but not in " +
                                            (in_x ? Y.name : X.name));
            return false;
        }
        return true;
    });
    return report;
}

namespace detail {

template <typename Fn>
inline void for_each_configuration(const Automaton& A, std::string_view word, Fn&& fn) {
    int n = static_cast<int>(word.size());
    for (int q = 0; q < A.state_count(); ++q)
        for (int i = 0; i <= n; ++i)
            for (int j = i; j <= n; ++j)
                fn(Configuration{q, i, j});
}

inline std::string describe(const Automaton& A, std::string_view word,
                            const Configuration& c) {
    return "input " + to_string(word) + ", state " +
           A.states()[static_cast<size_t>(c.state)] + ", window [" +
           std::to_string(c.left) + "," + std::to_string(c.right) + ")";
}

}  // namespace detail

/// Brute-force determinism: over every word of length <= n and every
/// configuration, at most one transition fires and whatever fires consumes
/// at least one letter. The letter-consumption clause mirrors the ban on
/// (lambda,lambda) steps in deterministic machines, keeping this oracle
/// exactly equivalent to check_deterministic.
inline PropertyReport semantic_determinism_oracle(const Automaton& A, int n) {
    PropertyReport report{"deterministic(semantic,max-len=" + std::to_string(n) + ")"};
    for_each_word(A.alphabet(), n, [&](std::string_view w) {
        detail::for_each_configuration(A, w, [&](const Configuration& c) {
            std::vector<int> usable = applicable_transitions(A, w, c);
            if (usable.size() > 1)
                report.fail("several-successors", detail::describe(A, w, c));
            for (int t : usable)
                if (A.transition(t).read.is_lambda_pair())
                    report.fail("lambda-lambda-step", detail::describe(A, w, c));
        });
        return true;
    });
    return report;
}

enum class BackwardMode {
    unrestricted,  // predecessors over the whole input (the normative reading)
    reachable,     // only predecessors reachable from the start configuration
};

/// Brute-force backward determinism: every configuration over every word of
/// length <= n has at most one predecessor. The reachable mode is a
/// diagnostic only; it is vacuously true for deterministic machines since
/// their reachable configurations form a single path.
inline PropertyReport semantic_backward_oracle(const Automaton& A, int n,
                                               BackwardMode mode = BackwardMode::unrestricted) {
    PropertyReport report{"backward-deterministic(semantic,max-len=" + std::to_string(n) +
                          (mode == BackwardMode::reachable ? ",reachable)" : ")")};
    for_each_word(A.alphabet(), n, [&](std::string_view w) {
        int len = static_cast<int>(w.size());
        std::vector<bool> reached;
        if (mode == BackwardMode::reachable) {
            reached.assign(static_cast<size_t>(A.state_count()) *
                               static_cast<size_t>(len + 1) * static_cast<size_t>(len + 1),
                           false);
            std::vector<Configuration> stack{Configuration{A.initial_index(), 0, len}};
            reached[detail::config_key(stack[0], len)] = true;
            while (!stack.empty()) {
                Configuration c = stack.back();
                stack.pop_back();
                for (const Configuration& s : step(A, w, c)) {
                    size_t key = detail::config_key(s, len);
                    if (!reached[key]) {
                        reached[key] = true;
                        stack.push_back(s);
                    }
                }
            }
        }
        detail::for_each_configuration(A, w, [&](const Configuration& c) {
            if (mode == BackwardMode::reachable && !reached[detail::config_key(c, len)])
                return;
            std::vector<Configuration> preds = step_back(A, w, c);
            if (mode == BackwardMode::reachable) {
                std::erase_if(preds, [&](const Configuration& p) {
                    return !reached[detail::config_key(p, len)];
                });
            }
            if (preds.size() > 1)
                report.fail("several-predecessors", detail::describe(A, w, c));
        });
        return true;
    });
    return report;
}

struct FilterSet {
    bool deterministic = false;
    bool reversible = false;   // implies deterministic
    bool one_limited = false;
    bool complete = false;     // implies deterministic

    bool wants_deterministic() const { return deterministic || reversible || complete; }
    bool wants_backward() const { return reversible; }

    std::vector<std::string> names() const {
        std::vector<std::string> out;
        if (deterministic) out.push_back("deterministic");
        if (reversible) out.push_back("reversible");
        if (one_limited) out.push_back("one-limited");
        if (complete) out.push_back("complete");
        return out;
    }
};

struct SearchBudget {
    std::uint64_t max_machines = 50'000'000;
    std::chrono::milliseconds max_time{0};  // 0 = no time limit
};

struct SearchReport {
    enum class Outcome { exhausted, candidates };

    Outcome outcome = Outcome::exhausted;
    std::vector<Automaton> candidates;
    std::uint64_t machines_examined = 0;
    int state_bound = 0;
    int word_bound = 0;
    std::vector<std::string> filters;
    std::string target;
};

namespace detail {

// Exhaustive enumeration of canonical small automata. States are numbered
// by first appearance in a state-major, pair-minor scan of the transition
// table, so exactly one representative per renaming class is generated and
// every state is reachable through earlier-numbered ones. Structural
// filters prune during construction; finals and the bounded language test
// come last.
class AutomatonSearch {
public:
    AutomatonSearch(const LanguagePredicate& target, int max_states, int word_bound,
                    const FilterSet& filters, const SearchBudget& budget)
        : target_(target),
          alphabet_(target.alphabet),
          max_states_(max_states),
          word_bound_(word_bound),
          filters_(filters),
          budget_(budget),
          started_(std::chrono::steady_clock::now()) {
        std::sort(alphabet_.begin(), alphabet_.end());
        std::vector<std::optional<Letter>> parts{std::nullopt};
        for (Letter a : alphabet_)
            parts.emplace_back(a);
        for (const auto& x : parts)
            for (const auto& y : parts) {
                ReadPair p{x, y};
                if (p.is_lambda_pair() && filters_.wants_deterministic())
                    continue;
                if (p.letters_read() != 1 && filters_.one_limited)
                    continue;
                pairs_.push_back(p);
            }
        words_.clear();
        for_each_word(alphabet_, word_bound_, [&](std::string_view w) {
            words_.emplace_back(w);
            return true;
        });
    }

    SearchReport run() {
        report_.state_bound = max_states_;
        report_.word_bound = word_bound_;
        report_.filters = filters_.names();
        report_.target = target_.name;
        out_pairs_.assign(1, {});
        fill_slot(0, 0, 1);
        report_.outcome = report_.candidates.empty() ? SearchReport::Outcome::exhausted
                                                     : SearchReport::Outcome::candidates;
        std::sort(report_.candidates.begin(), report_.candidates.end(), canonical_less);
        report_.machines_examined = examined_;
        return report_;
    }

private:
    struct Edge {
        int from;
        int pair;
        int to;
    };

    // Determinism conditions 3/4 restricted to the pairs present at one
    // state. Repeats of one pair (condition 2) cannot arise structurally:
    // deterministic slots take at most one target and nondeterministic
    // multi-target slots are unconstrained here.
    bool pair_allowed_at(int state, const ReadPair& p) const {
        if (!filters_.wants_deterministic())
            return true;
        for (const ReadPair& q : out_pairs_[static_cast<size_t>(state)]) {
            if (q == p)
                continue;
            if (p.first && !p.second && (!q.first || *q.first == *p.first))
                return false;
            if (!p.first && p.second && (!q.second || *q.second == *p.second))
                return false;
            if (q.first && !q.second && (!p.first || *p.first == *q.first))
                return false;
            if (!q.first && q.second && (!p.second || *p.second == *q.second))
                return false;
        }
        return true;
    }

    bool backward_allowed(const ReadPair& p, int target) const {
        if (!filters_.wants_backward())
            return true;
        for (const Edge& e : edges_)
            if (e.to == target && reads_overlap(pairs_[static_cast<size_t>(e.pair)], p))
                return false;
        return true;
    }

    bool state_complete(int state) const {
        std::set<Letter> first, second;
        for (const ReadPair& p : out_pairs_[static_cast<size_t>(state)]) {
            if (p.first && !p.second)
                first.insert(*p.first);
            if (p.second && !p.first)
                second.insert(*p.second);
        }
        return first.size() == alphabet_.size() || second.size() == alphabet_.size();
    }

    // Enumerate the target decisions of slot (state, pair); `next` is the
    // first target index not yet considered for this slot, `known` the
    // number of discovered states. Fresh states must enter consecutively.
    void fill_slot(int state, size_t pair, int known) {
        if (pair == pairs_.size()) {
            if (filters_.complete && !state_complete(state))
                return;
            if (state + 1 < known) {
                out_pairs_.emplace_back();
                fill_slot(state + 1, 0, known);
                out_pairs_.pop_back();
            } else {
                finish(known);
            }
            return;
        }
        choose_target(state, pair, 0, known);
    }

    void choose_target(int state, size_t pair, int next, int known) {
        if (next > known || (next == known && known == max_states_)) {
            fill_slot(state, pair + 1, known);
            return;
        }
        // skip this target
        choose_target(state, pair, next + 1, known);

        // take this target
        const ReadPair& p = pairs_[pair];
        if (!pair_allowed_at(state, p))
            return;
        if (!backward_allowed(p, next))
            return;
        int new_known = std::max(known, next + 1);
        edges_.push_back({state, static_cast<int>(pair), next});
        out_pairs_[static_cast<size_t>(state)].push_back(p);
        if (filters_.wants_deterministic())
            fill_slot(state, pair + 1, new_known);
        else
            choose_target(state, pair, next + 1, new_known);
        out_pairs_[static_cast<size_t>(state)].pop_back();
        edges_.pop_back();
    }

    void finish(int state_count) {
        size_t final_sets = size_t{1} << state_count;
        for (size_t finals = 0; finals < final_sets; ++finals)
            examine(state_count, finals);
    }

    void examine(int state_count, size_t final_mask) {
        ++examined_;
        if (examined_ > budget_.max_machines)
            throw BudgetExceededError("search budget exceeded after " +
                                          std::to_string(examined_ - 1) + " machines",
                                      examined_ - 1);
        if (budget_.max_time.count() > 0 && (examined_ & 0x3ff) == 0 &&
            std::chrono::steady_clock::now() - started_ > budget_.max_time)
            throw BudgetExceededError("search time budget exceeded after " +
                                          std::to_string(examined_) + " machines",
                                      examined_);

        for (const std::string& w : words_)
            if (machine_accepts(w, final_mask) != target_.contains(w))
                return;
        report_.candidates.push_back(materialize(state_count, final_mask));
    }

    bool machine_accepts(std::string_view w, size_t final_mask) const {
        int n = static_cast<int>(w.size());
        size_t span = static_cast<size_t>(n) + 1;
        std::vector<bool> seen(static_cast<size_t>(max_states_) * span * span, false);
        std::vector<Configuration> stack{Configuration{0, 0, n}};
        seen[(0 * span) * span + static_cast<size_t>(n)] = true;
        while (!stack.empty()) {
            Configuration c = stack.back();
            stack.pop_back();
            if (c.left == c.right && (final_mask >> c.state) & 1)
                return true;
            for (const Edge& e : edges_) {
                if (e.from != c.state)
                    continue;
                const ReadPair& p = pairs_[static_cast<size_t>(e.pair)];
                int len = c.right - c.left;
                if (p.letters_read() == 2 && len < 2)
                    continue;
                if (p.first && (len < 1 || w[static_cast<size_t>(c.left)] != *p.first))
                    continue;
                if (p.second && (len < 1 || w[static_cast<size_t>(c.right - 1)] != *p.second))
                    continue;
                Configuration s{e.to, c.left + (p.first ? 1 : 0), c.right - (p.second ? 1 : 0)};
                size_t key = (static_cast<size_t>(s.state) * span +
                              static_cast<size_t>(s.left)) * span + static_cast<size_t>(s.right);
                if (!seen[key]) {
                    seen[key] = true;
                    stack.push_back(s);
                }
            }
        }
        return false;
    }

    Automaton materialize(int state_count, size_t final_mask) const {
        std::vector<std::string> states;
        std::vector<std::string> finals;
        for (int q = 0; q < state_count; ++q) {
            states.push_back("q" + std::to_string(q));
            if ((final_mask >> q) & 1)
                finals.push_back(states.back());
        }
        std::vector<Transition> transitions;
        for (const Edge& e : edges_)
            transitions.push_back({states[static_cast<size_t>(e.from)],
                                   pairs_[static_cast<size_t>(e.pair)],
                                   states[static_cast<size_t>(e.to)]});
        return Automaton(std::move(states), alphabet_, "q0", std::move(finals),
                         std::move(transitions));
    }

    const LanguagePredicate& target_;
    std::vector<Letter> alphabet_;
    int max_states_;
    int word_bound_;
    FilterSet filters_;
    SearchBudget budget_;
    std::chrono::steady_clock::time_point started_;

    std::vector<ReadPair> pairs_;
    std::vector<std::string> words_;
    std::vector<Edge> edges_;
    std::vector<std::vector<ReadPair>> out_pairs_;
    std::uint64_t examined_ = 0;
    SearchReport report_;
};

}  // namespace detail

/// Enumerate every automaton with at most `max_states` states over the
/// target's alphabet that satisfies the structural filters, modulo state
/// renaming, and return the ones agreeing with the target on all words of
/// length <= word_bound. Throws BudgetExceededError when the budget runs
/// out. A candidate here is bounded evidence of expressibility, never a
/// proof about the full language.
inline SearchReport search_automata(const LanguagePredicate& target, int max_states,
                                    int word_bound, const FilterSet& filters,
                                    const SearchBudget& budget = {}) {
    if (max_states < 1)
        throw PreconditionError("state-bound", "search needs a state bound >= 1");
    if (max_states > 16)
        throw PreconditionError("state-bound",
                                "state bounds above 16 are outside exhaustive reach");
    if (word_bound < 1)
        throw PreconditionError("word-bound", "search needs a word bound >= 1");
    detail::AutomatonSearch search(target, max_states, word_bound, filters, budget);
    return search.run();
}

inline std::string to_text(const SearchReport& report) {
    std::string out = "target: " + report.target + "\n";
    out += "states <= " + std::to_string(report.state_bound) +
           ", words <= " + std::to_string(report.word_bound) + ", filters:";
    if (report.filters.empty())
        out += " (none)";
    for (const std::string& f : report.filters)
        out += " " + f;
    out += "\nmachines examined: " + std::to_string(report.machines_examined) + "\n";
    out += "outcome: ";
    out += report.outcome == SearchReport::Outcome::exhausted ? "exhausted" : "candidates";
    out += "\n";
    return out;
}

}  // namespace twohead
