// Core data model for 2-head finite automata: read pairs, transitions,
// validated automata and configurations, plus the single-step
// applicability relation everything else builds on.
//
// A 2-head automaton reads a word from both ends at once: the first head
// consumes letters left to right, the second head right to left. A word is
// accepted when the heads meet (nothing left unread) in a final state.

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace twohead {

using Letter = char;

// Glyph used by all text renderings for the empty word / absent read.
inline constexpr const char* kLambda = "\xce\xbb";  // UTF-8 lambda

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed document (not parseable as the expected format).
class ParseError : public Error {
public:
    using Error::Error;
};

// Structurally well-formed document that violates model invariants
// (undeclared state, letter outside the alphabet, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

// An operation was applied to an automaton/grammar lacking a required
// property; property() names the check that failed.
class PreconditionError : public Error {
public:
    PreconditionError(std::string property, const std::string& message)
        : Error(message), property_(std::move(property)) {}

    const std::string& property() const { return property_; }

private:
    std::string property_;
};

// Deterministic-only operation hit a configuration with several applicable
// transitions (or a transition consuming no letter).
class NondeterminismError : public Error {
public:
    using Error::Error;
};

// A configured search budget ran out; carries the partial count.
class BudgetExceededError : public Error {
public:
    BudgetExceededError(const std::string& message, std::uint64_t examined)
        : Error(message), machines_examined_(examined) {}

    std::uint64_t machines_examined() const { return machines_examined_; }

private:
    std::uint64_t machines_examined_ = 0;
};

/// What the two heads consume in one step. Each component is a letter or
/// nothing (lambda). The (lambda, lambda) pair is representable; it is
/// applicable on any window but banned from deterministic machines.
struct ReadPair {
    std::optional<Letter> first;
    std::optional<Letter> second;

    friend auto operator<=>(const ReadPair&, const ReadPair&) = default;

    bool is_lambda_pair() const { return !first && !second; }
    bool is_two_head() const { return first && second; }
    int letters_read() const { return (first ? 1 : 0) + (second ? 1 : 0); }
};

inline std::string to_string(const std::optional<Letter>& part) {
    return part ? std::string(1, *part) : std::string(kLambda);
}

inline std::string to_string(const ReadPair& read) {
    return "(" + to_string(read.first) + "," + to_string(read.second) + ")";
}

struct Transition {
    std::string from;
    ReadPair read;
    std::string to;

    // Default ordering is the canonical one: (from, read1, read2, to)
    // with lambda before any letter.
    friend auto operator<=>(const Transition&, const Transition&) = default;
};

inline std::string to_string(const Transition& t) {
    return t.from + " -" + to_string(t.read) + "-> " + t.to;
}

/// Current state plus the unread window of a fixed input  w. `left` counts
/// letters consumed by the first head; `right` is the position just past
/// the last unconsumed letter, so the unread window is w[left..right).
/// The state is an index into Automaton::states().
struct Configuration {
    int state = 0;
    int left = 0;
    int right = 0;

    friend auto operator<=>(const Configuration&, const Configuration&) = default;
};

inline Configuration start_configuration(std::string_view word) {
    return Configuration{0, 0, static_cast<int>(word.size())};
}

/// Validated, immutable 2-head automaton. All mutating work happens in the
/// constructor; afterwards the value can be shared freely between threads.
///
/// Invariants enforced here: the initial state and every final state and
/// transition endpoint are declared, every transition letter is in the
/// alphabet, and the transition collection has set semantics (sorted,
/// duplicate-free).
class Automaton {
public:
    Automaton(std::vector<std::string> states,
              std::vector<Letter> alphabet,
              std::string initial,
              std::vector<std::string> finals,
              std::vector<Transition> transitions)
        : states_(std::move(states)),
          alphabet_(std::move(alphabet)),
          initial_(std::move(initial)),
          finals_(std::move(finals)),
          transitions_(std::move(transitions)) {
        validate_and_freeze();
    }

    const std::vector<std::string>& states() const { return states_; }
    const std::vector<Letter>& alphabet() const { return alphabet_; }
    const std::string& initial() const { return initial_; }
    const std::vector<std::string>& finals() const { return finals_; }
    const std::vector<Transition>& transitions() const { return transitions_; }

    int state_count() const { return static_cast<int>(states_.size()); }
    int transition_count() const { return static_cast<int>(transitions_.size()); }
    int initial_index() const { return initial_index_; }

    /// Index of a state name, or -1 when undeclared.
    int find_state(std::string_view name) const {
        auto it = state_index_.find(std::string(name));
        return it == state_index_.end() ? -1 : it->second;
    }

    int state_index(std::string_view name) const {
        int idx = find_state(name);
        if (idx < 0)
            throw ValidationError("unknown state: " + std::string(name));
        return idx;
    }

    bool is_final(int state) const { return final_mask_[static_cast<size_t>(state)]; }
    bool has_letter(Letter a) const {
        return std::binary_search(alphabet_.begin(), alphabet_.end(), a);
    }

    const Transition& transition(int t) const { return transitions_[static_cast<size_t>(t)]; }
    int source_of(int t) const { return sources_[static_cast<size_t>(t)]; }
    int target_of(int t) const { return targets_[static_cast<size_t>(t)]; }

    /// Indices into transitions() leaving / entering a state.
    const std::vector<int>& out_transitions(int state) const {
        return out_[static_cast<size_t>(state)];
    }
    const std::vector<int>& in_transitions(int state) const {
        return in_[static_cast<size_t>(state)];
    }

    // Equality is structural and ignores declaration order of states.
    friend bool operator==(const Automaton& a, const Automaton& b) {
        return a.sorted_states() == b.sorted_states() && a.alphabet_ == b.alphabet_ &&
               a.initial_ == b.initial_ && a.finals_ == b.finals_ &&
               a.transitions_ == b.transitions_;
    }

    std::vector<std::string> sorted_states() const {
        std::vector<std::string> s = states_;
        std::sort(s.begin(), s.end());
        return s;
    }

private:
    void validate_and_freeze() {
        if (states_.empty())
            throw ValidationError("automaton needs at least one state");
        if (alphabet_.empty())
            throw ValidationError("alphabet must not be empty");
        std::sort(alphabet_.begin(), alphabet_.end());
        if (std::adjacent_find(alphabet_.begin(), alphabet_.end()) != alphabet_.end())
            throw ValidationError("duplicate letter in alphabet");
        for (Letter a : alphabet_)
            if (a <= ' ' || a > '~' || a == '"')
                throw ValidationError("letters must be printable ASCII");

        state_index_.reserve(states_.size());
        for (size_t i = 0; i < states_.size(); ++i) {
            if (states_[i].empty())
                throw ValidationError("state names must be non-empty");
            if (!state_index_.emplace(states_[i], static_cast<int>(i)).second)
                throw ValidationError("duplicate state: " + states_[i]);
        }

        initial_index_ = find_state(initial_);
        if (initial_index_ < 0)
            throw ValidationError("initial state is not declared: " + initial_);

        std::sort(finals_.begin(), finals_.end());
        finals_.erase(std::unique(finals_.begin(), finals_.end()), finals_.end());
        final_mask_.assign(states_.size(), false);
        for (const auto& f : finals_) {
            int idx = find_state(f);
            if (idx < 0)
                throw ValidationError("final state is not declared: " + f);
            final_mask_[static_cast<size_t>(idx)] = true;
        }

        std::sort(transitions_.begin(), transitions_.end());
        transitions_.erase(std::unique(transitions_.begin(), transitions_.end()),
                           transitions_.end());
        out_.assign(states_.size(), {});
        in_.assign(states_.size(), {});
        sources_.reserve(transitions_.size());
        targets_.reserve(transitions_.size());
        for (size_t t = 0; t < transitions_.size(); ++t) {
            const Transition& tr = transitions_[t];
            int src = find_state(tr.from);
            int dst = find_state(tr.to);
            if (src < 0 || dst < 0)
                throw ValidationError("transition uses undeclared state: " + to_string(tr));
            for (const auto& part : {tr.read.first, tr.read.second})
                if (part && !has_letter(*part))
                    throw ValidationError("transition letter outside alphabet: " +
                                          to_string(tr));
            sources_.push_back(src);
            targets_.push_back(dst);
            out_[static_cast<size_t>(src)].push_back(static_cast<int>(t));
            in_[static_cast<size_t>(dst)].push_back(static_cast<int>(t));
        }
    }

    std::vector<std::string> states_;
    std::vector<Letter> alphabet_;
    std::string initial_;
    std::vector<std::string> finals_;
    std::vector<Transition> transitions_;

    std::unordered_map<std::string, int> state_index_;
    std::vector<bool> final_mask_;
    int initial_index_ = 0;
    std::vector<int> sources_;
    std::vector<int> targets_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
};

/// Can transition `t` fire in configuration `c` over `word`?
///
/// A head can only read when the window is non-empty and the boundary
/// letter matches; a two-head read needs a window of length >= 2 because
/// one physical letter cannot be read by both heads. The (lambda, lambda)
/// pair fires on any window, including the empty one.
inline bool transition_applies(const Transition& t, std::string_view word,
                               const Configuration& c) {
    int len = c.right - c.left;
    if (t.read.letters_read() == 2 && len < 2)
        return false;
    if (t.read.first) {
        if (len < 1 || word[static_cast<size_t>(c.left)] != *t.read.first)
            return false;
    }
    if (t.read.second) {
        if (len < 1 || word[static_cast<size_t>(c.right - 1)] != *t.read.second)
            return false;
    }
    return true;
}

/// Exactly the transitions that can fire at `c`, as indices into
/// A.transitions(), in canonical transition order.
inline std::vector<int> applicable_transitions(const Automaton& A, std::string_view word,
                                               const Configuration& c) {
    std::vector<int> result;
    for (int t : A.out_transitions(c.state))
        if (transition_applies(A.transition(t), word, c))
            result.push_back(t);
    return result;
}

/// Deterministic total order mirroring the canonical serialization; used to
/// order search candidates.
inline bool canonical_less(const Automaton& a, const Automaton& b) {
    auto key = [](const Automaton& m) {
        return std::tuple(m.sorted_states(), m.alphabet(), m.initial(), m.finals());
    };
    auto ka = key(a);
    auto kb = key(b);
    if (ka != kb)
        return ka < kb;
    return a.transitions() < b.transitions();
}

inline std::string to_string(std::string_view word) {
    return word.empty() ? std::string(kLambda) : std::string(word);
}

}  // namespace twohead
