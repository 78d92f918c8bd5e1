#include <random>

#include "doctest.h"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "twohead/corpus.hpp"
#include "twohead/oracle.hpp"

using namespace twohead;
namespace tt = twohead::testing;

TEST_CASE("semantic determinism oracle") {
    CHECK(semantic_determinism_oracle(tt::machine_wcb(), 6).ok());
    CHECK(semantic_determinism_oracle(tt::machine_lambda_only(), 4).ok());

    SUBCASE("conflicting transitions show up on a concrete window") {
        Automaton A({"q0", "p"}, {'a', 'b'}, "q0", {"p"},
                    {{"q0", {'a', std::nullopt}, "p"}, {"q0", {'a', 'b'}, "p"}});
        PropertyReport report = semantic_determinism_oracle(A, 2);
        CHECK_FALSE(report.ok());
        bool found = false;
        for (const Witness& w : report.witnesses)
            found = found || w.detail.find("input ab") != std::string::npos;
        CHECK(found);
    }
    SUBCASE("a lone lambda-pair transition is a violation too") {
        Automaton A({"q0", "p"}, {'a'}, "q0", {"p"},
                    {{"q0", {std::nullopt, std::nullopt}, "p"}});
        PropertyReport report = semantic_determinism_oracle(A, 2);
        CHECK_FALSE(report.ok());
        CHECK(report.witnesses[0].kind == "lambda-lambda-step");
    }
}

TEST_CASE("semantic backward oracle") {
    CHECK(semantic_backward_oracle(tt::machine_ba(), 6).ok());

    SUBCASE("the ab machine has a double predecessor") {
        PropertyReport report = semantic_backward_oracle(tt::machine_ab(), 4);
        CHECK_FALSE(report.ok());
    }
    SUBCASE("reachable mode is vacuous for deterministic machines") {
        for (const Automaton& A : {tt::machine_ab(), tt::machine_ba(), tt::machine_wcb()})
            CHECK(semantic_backward_oracle(A, 5, BackwardMode::reachable).ok());
    }
}

TEST_CASE("structural checks match the semantic oracles on random machines") {
    std::mt19937_64 rng(1000);
    for (int i = 0; i < 150; ++i) {
        Automaton A = tt::random_automaton(rng);
        CHECK(check_deterministic(A).ok() == semantic_determinism_oracle(A, 4).ok());
        CHECK(check_backward_deterministic(A).ok() ==
              semantic_backward_oracle(A, 4).ok());
    }
}

TEST_CASE("bounded language comparison") {
    CHECK(language_equal(make_language(tt::machine_palin()),
                         make_language(predicate_palin()), 12)
              .ok());
    CHECK(language_equal(make_language(tt::machine_ba()), make_language(predicate_ba()), 12)
              .ok());

    SUBCASE("first disagreement in length-lex order is the witness") {
        PropertyReport report = language_equal(make_language(tt::machine_ba()),
                                               make_language(predicate_ab()), 2);
        CHECK_FALSE(report.ok());
        REQUIRE(report.witnesses.size() == 1);
        CHECK(report.witnesses[0].detail.find("a is in") != std::string::npos);
    }
    SUBCASE("mismatched alphabets are refused") {
        CHECK_THROWS_AS(language_equal(make_language(tt::machine_ba()),
                                       make_language(predicate_wcb()), 3),
                        PreconditionError);
    }
    SUBCASE("grammars compare through bounded generation") {
        Grammar G({"S"}, {'a', 'b'}, "S",
                  {{"S", RuleBody{'a', "S", ""}},
                   {"S", RuleBody{'b', "S", ""}},
                   {"S", std::nullopt}});
        CHECK(language_equal(make_language(G, 6), make_language(predicate_vstar()), 6).ok());
    }
}

TEST_CASE("search: hierarchy evidence at desk scale") {
    SUBCASE("no 2-state reversible machine matches a*b* up to length 6") {
        FilterSet rev;
        rev.reversible = true;
        SearchReport report = search_automata(predicate_ab(), 2, 6, rev);
        CHECK(report.outcome == SearchReport::Outcome::exhausted);
        CHECK(report.candidates.empty());
    }
    SUBCASE("no 2-state complete reversible machine matches {b^n a^n, b^(n+1) a^n}") {
        FilterSet rc;
        rc.reversible = rc.complete = true;
        SearchReport report = search_automata(predicate_ba(), 2, 6, rc);
        CHECK(report.outcome == SearchReport::Outcome::exhausted);
    }
    SUBCASE("no 2-state 1-limited reversible machine matches {w c b^n}") {
        FilterSet r1;
        r1.reversible = r1.one_limited = true;
        SearchReport report = search_automata(predicate_wcb(), 2, 5, r1);
        CHECK(report.outcome == SearchReport::Outcome::exhausted);
    }
    SUBCASE("V* search finds the stock machine") {
        FilterSet rc;
        rc.reversible = rc.complete = true;
        SearchReport report = search_automata(predicate_vstar(), 1, 4, rc);
        REQUIRE(report.outcome == SearchReport::Outcome::candidates);
        bool found = false;
        for (const Automaton& c : report.candidates)
            found = found || c == tt::machine_vstar();
        CHECK(found);
    }
}

TEST_CASE("search enumeration is complete and canonical") {
    SUBCASE("1-state machines over one letter have a closed-form count") {
        // four read pairs, each present or not, times two final sets
        LanguagePredicate all{"all", {'a'}, [](std::string_view) { return true; }};
        SearchReport report = search_automata(all, 1, 1, {});
        CHECK(report.machines_examined == 32);
    }
    SUBCASE("incremental pruning equals post-hoc filtering") {
        LanguagePredicate aa{"aa", {'a'}, [](std::string_view w) {
                                 return w.size() % 2 == 0;
                             }};
        FilterSet rev;
        rev.reversible = true;
        SearchReport pruned = search_automata(aa, 2, 4, rev);
        SearchReport all = search_automata(aa, 2, 4, {});
        std::vector<Automaton> filtered;
        for (const Automaton& c : all.candidates)
            if (check_reversible(c).ok())
                filtered.push_back(c);
        REQUIRE(pruned.candidates.size() == filtered.size());
        for (size_t i = 0; i < filtered.size(); ++i)
            CHECK(pruned.candidates[i] == filtered[i]);
    }
    SUBCASE("candidates pass the requested filter checkers") {
        FilterSet rc;
        rc.reversible = rc.complete = true;
        SearchReport report = search_automata(predicate_vstar(), 2, 3, rc);
        for (const Automaton& c : report.candidates) {
            CHECK(check_reversible(c).ok());
            CHECK(check_complete(c).ok());
        }
        CHECK(report.outcome == SearchReport::Outcome::candidates);
    }
    SUBCASE("search parameters are validated") {
        CHECK_THROWS_AS(search_automata(predicate_vstar(), 0, 3, {}), PreconditionError);
        CHECK_THROWS_AS(search_automata(predicate_vstar(), 1, 0, {}), PreconditionError);
    }
}

TEST_CASE("search budget produces a resource-limit error with a partial count") {
    SearchBudget tiny;
    tiny.max_machines = 10;
    try {
        search_automata(predicate_ab(), 2, 3, {}, tiny);
        FAIL("expected the budget to run out");
    } catch (const BudgetExceededError& e) {
        CHECK(e.machines_examined() == 10);
    }
}
