#include "doctest.h"
#include "support/fixtures.hpp"
#include "twohead/corpus.hpp"
#include "twohead/oracle.hpp"
#include "twohead/simulate.hpp"

using namespace twohead;
namespace tt = twohead::testing;

TEST_CASE("builtin entries load the documented machines") {
    CHECK(*builtin("ba").automaton == tt::machine_ba());
    CHECK(*builtin("wcb").automaton == tt::machine_wcb());
    CHECK(*builtin("palin").automaton == tt::machine_palin());
    CHECK(*builtin("ab").automaton == tt::machine_ab());
    CHECK(*builtin("vstar").automaton == tt::machine_vstar());
    CHECK(builtin("onethree").automaton->state_count() == 5);
    CHECK_THROWS_AS(builtin("nope"), ValidationError);
}

TEST_CASE("the ab entry carries its grammar") {
    CorpusEntry entry = builtin("ab");
    REQUIRE(entry.grammar.has_value());
    CHECK(check_ldlg(*entry.grammar).ok());
    CHECK(generate(*entry.grammar, 2) ==
          std::vector<std::string>{"", "a", "b", "aa", "ab", "bb"});
}

TEST_CASE("every entry agrees with its predicate on short words") {
    // the acceptance suite re-runs this at length 12
    for (const std::string& name : corpus_names()) {
        CorpusEntry entry = builtin(name);
        INFO("entry ", name);
        CHECK(language_equal(make_language(*entry.automaton, name),
                             make_language(entry.predicate), 7)
                  .ok());
    }
}

TEST_CASE("measured profiles match the expected ones") {
    for (const std::string& name : corpus_names()) {
        CorpusEntry entry = builtin(name);
        for (const auto& [property, expected] : entry.profile) {
            INFO("entry ", name, " property ", property);
            CHECK(measure_profile_claim(*entry.automaton, property) == expected);
        }
    }
}

TEST_CASE("the nondeterministic onethree entry hits both branches") {
    CorpusEntry entry = builtin("onethree");
    const Automaton& A = *entry.automaton;
    for (int n = 1; n <= 4; ++n) {
        std::string anbn(static_cast<size_t>(n), 'a');
        anbn += std::string(static_cast<size_t>(n), 'b');
        std::string a3nbn(static_cast<size_t>(3 * n), 'a');
        a3nbn += std::string(static_cast<size_t>(n), 'b');
        CHECK(accepts(A, anbn));
        CHECK(accepts(A, a3nbn));
    }
    CHECK_FALSE(accepts(A, "aab"));
    CHECK_FALSE(accepts(A, "aaaabb"));
    CHECK_FALSE(accepts(A, ""));
}

TEST_CASE("unknown data directory fails loudly") {
    CHECK_THROWS_AS(builtin("ba", "/nonexistent-dir"), ParseError);
}
