// Hand-built machines shared across the test files.

#pragma once

#include "twohead/automaton.hpp"

namespace twohead::testing {

// {b^n a^n, b^(n+1) a^n}: q0 -(b,.)-> q -(.,a)-> q0, both final
inline Automaton machine_ba() {
    return Automaton({"q0", "q"}, {'a', 'b'}, "q0", {"q0", "q"},
                     {{"q0", {'b', std::nullopt}, "q"}, {"q", {std::nullopt, 'a'}, "q0"}});
}

// {w c b^n : |w|_b = n}: loops (a,.) and (b,b) on q0, (c,.) to final qf
inline Automaton machine_wcb() {
    return Automaton({"q0", "qf"}, {'a', 'b', 'c'}, "q0", {"qf"},
                     {{"q0", {'a', std::nullopt}, "q0"},
                      {"q0", {'b', 'b'}, "q0"},
                      {"q0", {'c', std::nullopt}, "qf"}});
}

// palindromes over {a,b}, all states final
inline Automaton machine_palin() {
    return Automaton({"q0", "qa", "qb"}, {'a', 'b'}, "q0", {"q0", "qa", "qb"},
                     {{"q0", {'a', std::nullopt}, "qa"},
                      {"q0", {'b', std::nullopt}, "qb"},
                      {"qa", {std::nullopt, 'a'}, "q0"},
                      {"qb", {std::nullopt, 'b'}, "q0"}});
}

// a*b*, first head only; two (b,.) transitions into q1 break reversibility
inline Automaton machine_ab() {
    return Automaton({"q0", "q1"}, {'a', 'b'}, "q0", {"q0", "q1"},
                     {{"q0", {'a', std::nullopt}, "q0"},
                      {"q0", {'b', std::nullopt}, "q1"},
                      {"q1", {'b', std::nullopt}, "q1"}});
}

// every word over {a,b}
inline Automaton machine_vstar() {
    return Automaton({"q0"}, {'a', 'b'}, "q0", {"q0"},
                     {{"q0", {'a', std::nullopt}, "q0"}, {"q0", {'b', std::nullopt}, "q0"}});
}

// even-length words over {a}: complete and reversible
inline Automaton machine_parity() {
    return Automaton({"q0", "q1"}, {'a'}, "q0", {"q0"},
                     {{"q0", {'a', std::nullopt}, "q1"}, {"q1", {'a', std::nullopt}, "q0"}});
}

// final initial state, no transitions: accepts exactly the empty word
inline Automaton machine_lambda_only() {
    return Automaton({"q0"}, {'a'}, "q0", {"q0"}, {});
}

}  // namespace twohead::testing
