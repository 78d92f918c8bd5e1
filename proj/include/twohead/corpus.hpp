// Built-in witness languages with their machines, grammars and expected
// property profiles. The automata are shipped as documents in the data
// directory; builtin() loads and validates them and attaches the matching
// membership predicate. Every profile claim here is re-measured by the
// acceptance suite.

#pragma once

#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twohead/automaton.hpp"
#include "twohead/grammar.hpp"
#include "twohead/io.hpp"
#include "twohead/oracle.hpp"

namespace twohead {

struct CorpusEntry {
    std::string name;
    std::optional<Automaton> automaton;
    std::optional<Grammar> grammar;
    LanguagePredicate predicate;
    // property name -> expected checker verdict
    std::vector<std::pair<std::string, bool>> profile;
    std::string note;
};

inline std::vector<std::string> corpus_names() {
    return {"ab", "ba", "onethree", "palin", "vstar", "wcb"};
}

/// Directory holding the shipped corpus documents: $TWOHEAD_DATA if set,
/// else the build-time default.
inline std::string default_data_dir() {
    if (const char* env = std::getenv("TWOHEAD_DATA"); env && *env)
        return env;
#ifdef TWOHEAD_DATA_DIR
    return TWOHEAD_DATA_DIR;
#else
    return "data";
#endif
}

inline LanguagePredicate predicate_ab() {
    return {"L_ab", {'a', 'b'}, [](std::string_view w) {
                size_t i = 0;
                while (i < w.size() && w[i] == 'a')
                    ++i;
                while (i < w.size() && w[i] == 'b')
                    ++i;
                return i == w.size();
            }};
}

inline LanguagePredicate predicate_ba() {
    // {b^n a^n, b^(n+1) a^n | n >= 0}
    return {"L_ba", {'a', 'b'}, [](std::string_view w) {
                size_t b = 0;
                while (b < w.size() && w[b] == 'b')
                    ++b;
                size_t a = 0;
                while (b + a < w.size() && w[b + a] == 'a')
                    ++a;
                if (b + a != w.size())
                    return false;
                return b == a || b == a + 1;
            }};
}

inline LanguagePredicate predicate_onethree() {
    // {a^n b^n | n >= 1} united with {a^3n b^n | n >= 1}
    return {"L_1or3", {'a', 'b'}, [](std::string_view w) {
                size_t a = 0;
                while (a < w.size() && w[a] == 'a')
                    ++a;
                size_t b = 0;
                while (a + b < w.size() && w[a + b] == 'b')
                    ++b;
                if (a + b != w.size() || b == 0)
                    return false;
                return a == b || a == 3 * b;
            }};
}

inline LanguagePredicate predicate_wcb() {
    // {w c b^n | w over {a,b}, |w|_b = n}
    return {"L_wcb", {'a', 'b', 'c'}, [](std::string_view w) {
                size_t c = w.find('c');
                if (c == std::string_view::npos || w.find('c', c + 1) != std::string_view::npos)
                    return false;
                size_t n = 0;
                for (size_t i = 0; i < c; ++i)
                    if (w[i] == 'b')
                        ++n;
                return w.size() - c - 1 == n &&
                       w.find('a', c + 1) == std::string_view::npos;
            }};
}

inline LanguagePredicate predicate_palin() {
    return {"palindromes", {'a', 'b'}, [](std::string_view w) {
                for (size_t i = 0, j = w.size(); i + 1 < j; ++i, --j)
                    if (w[i] != w[j - 1])
                        return false;
                return true;
            }};
}

inline LanguagePredicate predicate_vstar() {
    return {"V_star", {'a', 'b'}, [](std::string_view) { return true; }};
}

/// Load one built-in entry by name; throws ValidationError for unknown
/// names and propagates document errors from the data directory.
inline CorpusEntry builtin(std::string_view name,
                           const std::string& data_dir = default_data_dir()) {
    CorpusEntry entry;
    entry.name = std::string(name);
    if (name == "ab") {
        entry.predicate = predicate_ab();
        entry.profile = {{"deterministic", true}, {"reversible", false}};
        entry.note = "regular language a*b*; deterministic but outside the reversible class";
        entry.grammar = load_grammar(data_dir + "/ab.grammar");
    } else if (name == "ba") {
        entry.predicate = predicate_ba();
        entry.profile = {{"reversible", true}, {"one-limited", true}, {"complete", false}};
        entry.note = "{b^n a^n, b^(n+1) a^n}; separates the complete class from the 1-limited one";
    } else if (name == "onethree") {
        entry.predicate = predicate_onethree();
        entry.profile = {{"deterministic", false}};
        entry.note = "{a^n b^n} with {a^3n b^n}; needs nondeterminism to guess the ratio";
    } else if (name == "wcb") {
        entry.predicate = predicate_wcb();
        entry.profile = {{"reversible", true}, {"one-limited", false}, {"complete", false}};
        entry.note = "{w c b^n : |w|_b = n}; separates the 1-limited class from the full reversible one";
    } else if (name == "palin") {
        entry.predicate = predicate_palin();
        entry.profile = {{"reversible", true}, {"one-limited", true}, {"complete", false}};
        entry.note = "palindromes over {a,b}, odd and even";
    } else if (name == "vstar") {
        entry.predicate = predicate_vstar();
        entry.profile = {{"reversible", true}, {"one-limited", true}, {"complete", true}};
        entry.note = "every word over {a,b}; the stock complete reversible machine";
    } else {
        throw ValidationError("unknown corpus entry: " + std::string(name));
    }
    entry.automaton = load_automaton(data_dir + "/" + entry.name + ".auto");
    return entry;
}

/// Run the checker named in a profile claim and reduce it to a boolean.
inline bool measure_profile_claim(const Automaton& A, const std::string& property) {
    if (property == "deterministic")
        return check_deterministic(A).ok();
    if (property == "reversible")
        return check_reversible(A).ok();
    if (property == "one-limited")
        return check_one_limited(A).ok();
    if (property == "complete")
        return check_complete(A).ok();
    throw ValidationError("unknown profile property: " + property);
}

}  // namespace twohead
