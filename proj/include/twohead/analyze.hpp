// Structural property checkers: determinism, backward determinism,
// reversibility, the 1-limited restriction, completeness, the state
// classification of 1-limited reversible machines, and transition-graph
// analysis. Each checker returns a verdict plus concrete witnesses.

#pragma once

#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twohead/automaton.hpp"

namespace twohead {

enum class Verdict {
    holds,
    fails,
    not_applicable,  // precondition of the check is not met
};

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "true";
        case Verdict::fails: return "false";
        case Verdict::not_applicable: return "not-applicable";
    }
    return "?";
}

struct Witness {
    std::string kind;
    std::string detail;
};

struct PropertyReport {
    PropertyReport() = default;
    explicit PropertyReport(std::string name) : property(std::move(name)) {}

    std::string property;
    Verdict verdict = Verdict::holds;
    std::vector<Witness> witnesses;
    std::string notes;

    bool ok() const { return verdict == Verdict::holds; }

    void fail(std::string kind, std::string detail) {
        verdict = Verdict::fails;
        witnesses.push_back({std::move(kind), std::move(detail)});
    }
};

/// "property: verdict" followed by one indented line per witness.
inline std::string to_text(const PropertyReport& report) {
    std::string out = report.property + ": " + to_string(report.verdict) + "\n";
    for (const Witness& w : report.witnesses)
        out += "  [" + w.kind + "] " + w.detail + "\n";
    if (!report.notes.empty())
        out += "  note: " + report.notes + "\n";
    return out;
}

/// Determinism: at most one transition can ever fire, and every transition
/// consumes at least one letter. Equivalently, for every state q:
///   1. no (lambda,lambda) transition leaves q,
///   2. no read pair leaves q twice,
///   3. a first-head read (a,lambda) excludes any other pair (c,d) with
///      c = a or c = lambda,
///   4. a second-head read (lambda,a) excludes any other pair (c,d) with
///      d = a or d = lambda.
inline PropertyReport check_deterministic(const Automaton& A) {
    PropertyReport report{"deterministic"};

    for (const Transition& t : A.transitions())
        if (t.read.is_lambda_pair())
            report.fail("condition1", to_string(t));

    for (int q = 0; q < A.state_count(); ++q) {
        const std::vector<int>& out = A.out_transitions(q);

        // condition 2: transitions are sorted, so equal read pairs are adjacent
        for (size_t i = 0; i + 1 < out.size(); ++i) {
            const Transition& t1 = A.transition(out[i]);
            const Transition& t2 = A.transition(out[i + 1]);
            if (t1.read == t2.read && !t1.read.is_lambda_pair())
                report.fail("condition2", to_string(t1) + " / " + to_string(t2));
        }

        std::vector<ReadPair> pairs;
        for (int t : out)
            pairs.push_back(A.transition(t).read);
        std::sort(pairs.begin(), pairs.end());
        pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

        for (const ReadPair& p : pairs) {
            for (const ReadPair& other : pairs) {
                if (other == p)
                    continue;
                if (p.first && !p.second && (!other.first || *other.first == *p.first))
                    report.fail("condition3", A.states()[static_cast<size_t>(q)] + ": " +
                                                  to_string(p) + " vs " + to_string(other));
                if (!p.first && p.second && (!other.second || *other.second == *p.second))
                    report.fail("condition4", A.states()[static_cast<size_t>(q)] + ": " +
                                                  to_string(p) + " vs " + to_string(other));
            }
        }
    }
    return report;
}

namespace detail {

// Two read components are compatible when they can match the same boundary
// letter of some input: equal letters, or either one is lambda.
inline bool reads_compatible(const std::optional<Letter>& x, const std::optional<Letter>& y) {
    return !x || !y || *x == *y;
}

inline bool reads_overlap(const ReadPair& a, const ReadPair& b) {
    return reads_compatible(a.first, b.first) && reads_compatible(a.second, b.second);
}

}  // namespace detail

/// Backward determinism: every configuration has at most one predecessor,
/// over all possible surrounding inputs. Checked pairwise: two distinct
/// transitions into the same state must have non-overlapping read pairs.
///
/// The notes surface automata where the weaker pairwise reading
/// "a != c or b != d, with |ad| >= 1 and |bc| >= 1" disagrees with the
/// overlap rule; the overlap rule is normative (it is what the semantic
/// oracle measures).
inline PropertyReport check_backward_deterministic(const Automaton& A) {
    PropertyReport report{"backward-deterministic"};
    bool literal_ok = true;

    for (int q = 0; q < A.state_count(); ++q) {
        const std::vector<int>& in = A.in_transitions(q);
        for (size_t i = 0; i < in.size(); ++i) {
            for (size_t j = i + 1; j < in.size(); ++j) {
                const Transition& t1 = A.transition(in[i]);
                const Transition& t2 = A.transition(in[j]);
                if (detail::reads_overlap(t1.read, t2.read))
                    report.fail("overlap", to_string(t1) + " / " + to_string(t2));
                const ReadPair& r1 = t1.read;
                const ReadPair& r2 = t2.read;
                bool pairwise = (r1.first != r2.first || r1.second != r2.second) &&
                                (r1.first || r2.second) && (r1.second || r2.first);
                if (!pairwise)
                    literal_ok = false;
            }
        }
    }
    if (literal_ok != report.ok())
        report.notes =
            "pairwise inequality reading disagrees with the overlap rule here; "
            "the overlap rule matches the predecessor-counting semantics";
    return report;
}

/// Reversible = deterministic and backward deterministic.
inline PropertyReport check_reversible(const Automaton& A) {
    PropertyReport det = check_deterministic(A);
    PropertyReport back = check_backward_deterministic(A);
    PropertyReport report{"reversible"};
    report.verdict = det.ok() && back.ok() ? Verdict::holds : Verdict::fails;
    for (Witness& w : det.witnesses)
        report.witnesses.push_back(std::move(w));
    for (Witness& w : back.witnesses)
        report.witnesses.push_back(std::move(w));
    report.notes = back.notes;
    return report;
}

/// 1-limited: every transition reads exactly one letter with exactly one
/// head. Witnesses are two-head and (lambda,lambda) transitions.
inline PropertyReport check_one_limited(const Automaton& A) {
    PropertyReport report{"one-limited"};
    for (const Transition& t : A.transitions())
        if (t.read.letters_read() != 1)
            report.fail(t.read.is_lambda_pair() ? "lambda-pair" : "two-head", to_string(t));
    return report;
}

/// Completeness of a deterministic automaton: every configuration with a
/// non-empty window admits exactly one step. A deterministic state can
/// never get stuck iff its one-head transitions cover the whole alphabet:
/// windows of length one force one-head coverage of every letter, and
/// determinism forbids mixing heads at a state, so each state must be
/// "first-head full" or "second-head full" (which also excludes two-head
/// transitions there).
inline PropertyReport check_complete(const Automaton& A) {
    PropertyReport report{"complete"};
    if (!check_deterministic(A).ok()) {
        report.verdict = Verdict::not_applicable;
        report.notes = "completeness is defined for deterministic automata";
        return report;
    }
    for (int q = 0; q < A.state_count(); ++q) {
        std::set<Letter> first_covered;
        std::set<Letter> second_covered;
        for (int t : A.out_transitions(q)) {
            const ReadPair& read = A.transition(t).read;
            if (read.first && !read.second)
                first_covered.insert(*read.first);
            if (read.second && !read.first)
                second_covered.insert(*read.second);
        }
        size_t n = A.alphabet().size();
        if (first_covered.size() < n && second_covered.size() < n) {
            std::string missing;
            for (Letter a : A.alphabet())
                if (!first_covered.count(a) && !second_covered.count(a))
                    missing += a;
            report.fail("uncovered", A.states()[static_cast<size_t>(q)] +
                                         (missing.empty()
                                              ? " mixes heads below full coverage"
                                              : " has no one-head transition for: " + missing));
        }
    }
    return report;
}

/// Head-usage class of a state in a 1-limited reversible automaton. The
/// first tag is the head used on incoming transitions, the second the head
/// used on outgoing ones; F = first head, S = second head, N = none.
enum class StateClass { FF, FS, SF, SS, NF, NS, FN, SN, ISOLATED };

inline std::string to_string(StateClass c) {
    switch (c) {
        case StateClass::FF: return "FF";
        case StateClass::FS: return "FS";
        case StateClass::SF: return "SF";
        case StateClass::SS: return "SS";
        case StateClass::NF: return "NF";
        case StateClass::NS: return "NS";
        case StateClass::FN: return "FN";
        case StateClass::SN: return "SN";
        case StateClass::ISOLATED: return "ISOLATED";
    }
    return "?";
}

struct StateClassification {
    std::map<std::string, StateClass> classes;
    PropertyReport report;
};

/// Classify every state of a 1-limited reversible automaton by the heads
/// used to enter and leave it, and verify the classification constraints:
/// incoming transitions of a state agree on a head, outgoing ones too, only
/// the initial state may lack incoming transitions, only final states may
/// lack outgoing ones, and at most one of the classes NF/NS occurs.
/// ISOLATED is allowed only for the trivial single-state machine without
/// transitions.
inline StateClassification classify_states(const Automaton& A) {
    StateClassification result;
    result.report.property = "state-classification";
    if (!check_one_limited(A).ok() || !check_reversible(A).ok()) {
        result.report.verdict = Verdict::not_applicable;
        result.report.notes = "classification applies to 1-limited reversible automata";
        return result;
    }

    bool trivial = A.state_count() == 1 && A.transitions().empty();
    int entry_free_states = 0;

    for (int q = 0; q < A.state_count(); ++q) {
        const std::string& name = A.states()[static_cast<size_t>(q)];
        // 0 = none, 1 = first head, 2 = second head; 1-limited reversibility
        // guarantees agreement within each direction.
        auto head_of = [&](const std::vector<int>& ts) {
            int head = 0;
            for (int t : ts)
                head = A.transition(t).read.first ? 1 : 2;
            return head;
        };
        int in_head = head_of(A.in_transitions(q));
        int out_head = head_of(A.out_transitions(q));

        static constexpr StateClass table[3][3] = {
            {StateClass::ISOLATED, StateClass::NF, StateClass::NS},
            {StateClass::FN, StateClass::FF, StateClass::FS},
            {StateClass::SN, StateClass::SF, StateClass::SS},
        };
        StateClass cls = table[in_head][out_head];
        result.classes[name] = cls;

        if (cls == StateClass::ISOLATED) {
            if (!trivial)
                result.report.fail("isolated", name);
            continue;
        }
        if (in_head == 0) {
            ++entry_free_states;
            if (q != A.initial_index())
                result.report.fail("no-incoming-noninitial", name);
        }
        if (out_head == 0 && !A.is_final(q))
            result.report.fail("no-outgoing-nonfinal", name);
    }
    if (entry_free_states > 1)
        result.report.fail("several-entry-free-states",
                           std::to_string(entry_free_states) + " states lack incoming transitions");
    return result;
}

struct GraphAnalysis {
    std::vector<std::string> unreachable;
    bool strongly_connected = false;
    PropertyReport report;
};

namespace detail {

inline std::vector<bool> reach(const Automaton& A, int from, bool reversed,
                               const std::vector<bool>* restrict_to) {
    std::vector<bool> seen(static_cast<size_t>(A.state_count()), false);
    std::deque<int> queue;
    seen[static_cast<size_t>(from)] = true;
    queue.push_back(from);
    while (!queue.empty()) {
        int q = queue.front();
        queue.pop_front();
        const std::vector<int>& ts = reversed ? A.in_transitions(q) : A.out_transitions(q);
        for (int t : ts) {
            int next = reversed ? A.source_of(t) : A.target_of(t);
            if (restrict_to && !(*restrict_to)[static_cast<size_t>(next)])
                continue;
            if (!seen[static_cast<size_t>(next)]) {
                seen[static_cast<size_t>(next)] = true;
                queue.push_back(next);
            }
        }
    }
    return seen;
}

}  // namespace detail

/// Reachability from the initial state plus strong connectivity of the
/// reachable part of the transition graph. Transition-graph reachability
/// coincides with configuration reachability: any transition path from the
/// initial state is realized by the input made of its first-head letters
/// followed by its second-head letters in reverse.
inline GraphAnalysis graph_analysis(const Automaton& A) {
    GraphAnalysis result;
    result.report.property = "strongly-connected";

    std::vector<bool> reachable = detail::reach(A, A.initial_index(), false, nullptr);
    for (int q = 0; q < A.state_count(); ++q)
        if (!reachable[static_cast<size_t>(q)])
            result.unreachable.push_back(A.states()[static_cast<size_t>(q)]);

    // The reachable part is strongly connected iff every reachable state
    // can get back to the initial state inside it.
    std::vector<bool> back = detail::reach(A, A.initial_index(), true, &reachable);
    result.strongly_connected = true;
    for (int q = 0; q < A.state_count(); ++q) {
        if (reachable[static_cast<size_t>(q)] && !back[static_cast<size_t>(q)]) {
            result.strongly_connected = false;
            result.report.fail("cannot-reach-initial", A.states()[static_cast<size_t>(q)]);
        }
    }
    result.report.verdict =
        result.strongly_connected ? Verdict::holds : Verdict::fails;
    for (const std::string& name : result.unreachable)
        result.report.witnesses.push_back({"unreachable", name});
    result.report.notes = "reachable states: " +
                          std::to_string(A.state_count() - static_cast<int>(result.unreachable.size())) +
                          "/" + std::to_string(A.state_count());
    return result;
}

}  // namespace twohead
