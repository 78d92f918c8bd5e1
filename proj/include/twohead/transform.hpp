// Language- and property-preserving constructions: reversal by head
// interchange, complementation of complete reversible automata, and
// elimination of (lambda,lambda) transitions.

#pragma once

#include <set>
#include <string>
#include <vector>

#include "twohead/analyze.hpp"
#include "twohead/automaton.hpp"

namespace twohead {

/// Accepts the reversal of L(A): interchanges the roles of the two heads in
/// every transition. Preserves determinism, backward determinism,
/// 1-limitedness and completeness.
inline Automaton reverse(const Automaton& A) {
    std::vector<Transition> swapped;
    swapped.reserve(A.transitions().size());
    for (const Transition& t : A.transitions())
        swapped.push_back({t.from, ReadPair{t.read.second, t.read.first}, t.to});
    return Automaton(A.states(), A.alphabet(), A.initial(), A.finals(), std::move(swapped));
}

/// Accepts the complement of L(A) by swapping final and non-final states.
/// Only valid for complete reversible automata (they read every input to
/// the end, so acceptance flips exactly); refuses anything else rather than
/// completing it, since adding a sink would break reversibility.
inline Automaton complement_complete(const Automaton& A) {
    if (!check_reversible(A).ok())
        throw PreconditionError("reversible",
                                "complement requires a reversible automaton");
    if (!check_complete(A).ok())
        throw PreconditionError("complete", "complement requires a complete automaton");
    std::vector<std::string> flipped;
    for (const std::string& q : A.states())
        if (!A.is_final(A.state_index(q)))
            flipped.push_back(q);
    return Automaton(A.states(), A.alphabet(), A.initial(), std::move(flipped),
                     A.transitions());
}

/// Removes all (lambda,lambda) transitions while preserving the language,
/// like lambda-elimination on classical NFAs: every consuming transition is
/// lifted across the (lambda,lambda)-closures of its source and target, and
/// a state becomes final when its closure meets the final set. Intended for
/// the nondeterministic model; the construction can destroy backward
/// determinism. Already lambda-free automata come back unchanged.
inline Automaton eliminate_lambda_pairs(const Automaton& A) {
    int n = A.state_count();
    std::vector<std::vector<int>> closure(static_cast<size_t>(n));
    for (int q = 0; q < n; ++q) {
        std::vector<bool> seen(static_cast<size_t>(n), false);
        std::vector<int> stack{q};
        seen[static_cast<size_t>(q)] = true;
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            closure[static_cast<size_t>(q)].push_back(cur);
            for (int t : A.out_transitions(cur)) {
                int next = A.target_of(t);
                if (A.transition(t).read.is_lambda_pair() && !seen[static_cast<size_t>(next)]) {
                    seen[static_cast<size_t>(next)] = true;
                    stack.push_back(next);
                }
            }
        }
    }

    std::set<Transition> lifted;
    for (int q = 0; q < n; ++q) {
        for (int mid : closure[static_cast<size_t>(q)]) {
            for (int t : A.out_transitions(mid)) {
                const Transition& tr = A.transition(t);
                if (tr.read.is_lambda_pair())
                    continue;
                for (int r : closure[static_cast<size_t>(A.target_of(t))])
                    lifted.insert({A.states()[static_cast<size_t>(q)], tr.read,
                                   A.states()[static_cast<size_t>(r)]});
            }
        }
    }

    std::vector<std::string> finals;
    for (int q = 0; q < n; ++q)
        for (int r : closure[static_cast<size_t>(q)])
            if (A.is_final(r)) {
                finals.push_back(A.states()[static_cast<size_t>(q)]);
                break;
            }

    return Automaton(A.states(), A.alphabet(), A.initial(), std::move(finals),
                     std::vector<Transition>(lifted.begin(), lifted.end()));
}

}  // namespace twohead
