// Forward and backward execution: membership, deterministic traces,
// bounded language enumeration and predecessor computation.

#pragma once

#include <cstdint>
#include <deque>
#include <string>
#include <string_view>
#include <vector>

#include "twohead/automaton.hpp"

namespace twohead {

/// Successor configurations of `c`, one per applicable transition.
/// Consuming with the first head advances `left`, consuming with the second
/// head retreats `right`; a (lambda, lambda) step changes only the state.
inline std::vector<Configuration> step(const Automaton& A, std::string_view word,
                                       const Configuration& c) {
    std::vector<Configuration> next;
    for (int t : applicable_transitions(A, word, c)) {
        const ReadPair& read = A.transition(t).read;
        next.push_back(Configuration{A.target_of(t), c.left + (read.first ? 1 : 0),
                                     c.right - (read.second ? 1 : 0)});
    }
    return next;
}

/// All configurations c' over the same input with c in step(A, c'). The
/// search covers the whole input, not only the part reachable from the
/// start configuration; see semantic_backward_oracle for the reachable
/// variant.
inline std::vector<Configuration> step_back(const Automaton& A, std::string_view word,
                                            const Configuration& c) {
    std::vector<Configuration> prev;
    int n = static_cast<int>(word.size());
    for (int t : A.in_transitions(c.state)) {
        const Transition& tr = A.transition(t);
        Configuration cand{A.source_of(t), c.left - (tr.read.first ? 1 : 0),
                           c.right + (tr.read.second ? 1 : 0)};
        if (cand.left < 0 || cand.right > n)
            continue;
        if (transition_applies(tr, word, cand))
            prev.push_back(cand);
    }
    return prev;
}

namespace detail {

// Flat index for (state, left, right) visited sets.
inline size_t config_key(const Configuration& c, int word_len) {
    size_t span = static_cast<size_t>(word_len) + 1;
    return (static_cast<size_t>(c.state) * span + static_cast<size_t>(c.left)) * span +
           static_cast<size_t>(c.right);
}

}  // namespace detail

/// Membership by breadth-first exploration of the (finite) configuration
/// graph. Handles nondeterminism and (lambda, lambda) cycles via a visited
/// set. Words containing letters no transition can consume are simply
/// never accepted.
inline bool accepts(const Automaton& A, std::string_view word) {
    int n = static_cast<int>(word.size());
    std::vector<bool> seen(static_cast<size_t>(A.state_count()) *
                               static_cast<size_t>(n + 1) * static_cast<size_t>(n + 1),
                           false);
    std::deque<Configuration> queue;
    Configuration start{A.initial_index(), 0, n};
    seen[detail::config_key(start, n)] = true;
    queue.push_back(start);
    while (!queue.empty()) {
        Configuration c = queue.front();
        queue.pop_front();
        if (c.left == c.right && A.is_final(c.state))
            return true;
        for (const Configuration& s : step(A, word, c)) {
            size_t key = detail::config_key(s, n);
            if (!seen[key]) {
                seen[key] = true;
                queue.push_back(s);
            }
        }
    }
    return false;
}

enum class TraceVerdict {
    accepted,
    rejected_stuck,     // window non-empty, no transition applies
    rejected_nonfinal,  // input fully consumed in a non-final state
};

inline std::string to_string(TraceVerdict v) {
    switch (v) {
        case TraceVerdict::accepted: return "accepted";
        case TraceVerdict::rejected_stuck: return "rejected-stuck";
        case TraceVerdict::rejected_nonfinal: return "rejected-nonfinal";
    }
    return "?";
}

struct TraceStep {
    Configuration config;
    // Transition taken from this configuration (index into A.transitions());
    // absent on the last step.
    std::optional<int> transition;
};

struct Trace {
    std::vector<TraceStep> steps;
    TraceVerdict verdict = TraceVerdict::rejected_nonfinal;
};

/// The unique maximal computation of a deterministic automaton on `word`.
/// Throws NondeterminismError if two transitions ever apply at once or an
/// applicable transition consumes no letter (both are ruled out by
/// check_deterministic).
inline Trace run_deterministic(const Automaton& A, std::string_view word) {
    Trace trace;
    Configuration c{A.initial_index(), 0, static_cast<int>(word.size())};
    for (;;) {
        std::vector<int> usable = applicable_transitions(A, word, c);
        if (usable.size() > 1)
            throw NondeterminismError("several transitions apply in state " +
                                      A.states()[static_cast<size_t>(c.state)]);
        if (!usable.empty() && A.transition(usable[0]).read.is_lambda_pair())
            throw NondeterminismError("applicable (lambda,lambda) transition in state " +
                                      A.states()[static_cast<size_t>(c.state)]);
        if (usable.empty()) {
            trace.steps.push_back({c, std::nullopt});
            if (c.left == c.right)
                trace.verdict = A.is_final(c.state) ? TraceVerdict::accepted
                                                    : TraceVerdict::rejected_nonfinal;
            else
                trace.verdict = TraceVerdict::rejected_stuck;
            return trace;
        }
        trace.steps.push_back({c, usable[0]});
        c = step(A, word, c)[0];
    }
}

/// One line per step: "state | consumed-left | window | consumed-right |
/// (read1,read2)", with the verdict in place of the read pair on the final
/// line.
inline std::string render_trace(const Automaton& A, std::string_view word,
                                const Trace& trace) {
    std::string out;
    for (const TraceStep& s : trace.steps) {
        const Configuration& c = s.config;
        out += A.states()[static_cast<size_t>(c.state)];
        out += " | ";
        out += to_string(word.substr(0, static_cast<size_t>(c.left)));
        out += " | ";
        out += to_string(word.substr(static_cast<size_t>(c.left),
                                     static_cast<size_t>(c.right - c.left)));
        out += " | ";
        out += to_string(word.substr(static_cast<size_t>(c.right)));
        out += " | ";
        out += s.transition ? to_string(A.transition(*s.transition).read)
                            : to_string(trace.verdict);
        out += "\n";
    }
    return out;
}

/// Calls fn(word) for every word over `alphabet` of length <= max_len in
/// length-then-lexicographic order; stops early when fn returns false.
/// The alphabet must be sorted (Automaton::alphabet() always is).
template <typename Fn>
inline void for_each_word(const std::vector<Letter>& alphabet, int max_len, Fn&& fn) {
    std::string word;
    if (!fn(std::string_view(word)))
        return;
    for (int len = 1; len <= max_len; ++len) {
        if (alphabet.empty())
            return;
        std::vector<size_t> digits(static_cast<size_t>(len), 0);
        word.assign(static_cast<size_t>(len), alphabet[0]);
        for (;;) {
            if (!fn(std::string_view(word)))
                return;
            int pos = len - 1;
            while (pos >= 0 && digits[static_cast<size_t>(pos)] + 1 == alphabet.size()) {
                digits[static_cast<size_t>(pos)] = 0;
                word[static_cast<size_t>(pos)] = alphabet[0];
                --pos;
            }
            if (pos < 0)
                break;
            ++digits[static_cast<size_t>(pos)];
            word[static_cast<size_t>(pos)] = alphabet[digits[static_cast<size_t>(pos)]];
        }
    }
}

/// { w : |w| <= max_len, accepts(A, w) } in length-then-lexicographic order.
inline std::vector<std::string> enumerate_language(const Automaton& A, int max_len) {
    std::vector<std::string> words;
    for_each_word(A.alphabet(), max_len, [&](std::string_view w) {
        if (accepts(A, w))
            words.emplace_back(w);
        return true;
    });
    return words;
}

}  // namespace twohead
