#include <random>

#include "doctest.h"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "twohead/oracle.hpp"
#include "twohead/simulate.hpp"
#include "twohead/transform.hpp"

using namespace twohead;
namespace tt = twohead::testing;

namespace {

std::string reversed(std::string w) {
    std::reverse(w.begin(), w.end());
    return w;
}

}  // namespace

TEST_CASE("reversal by head interchange") {
    SUBCASE("reverse of the ba machine accepts a^n b^n and a^n b^(n+1)") {
        Automaton R = reverse(tt::machine_ba());
        LanguagePredicate rev_ba{"rev", {'a', 'b'}, [](std::string_view w) {
                                     size_t a = 0;
                                     while (a < w.size() && w[a] == 'a')
                                         ++a;
                                     size_t b = 0;
                                     while (a + b < w.size() && w[a + b] == 'b')
                                         ++b;
                                     if (a + b != w.size())
                                         return false;
                                     return a == b || b == a + 1;
                                 }};
        CHECK(language_equal(make_language(R), make_language(rev_ba), 10).ok());
    }
    SUBCASE("palindromes are closed under reversal") {
        Automaton P = tt::machine_palin();
        CHECK(language_equal(make_language(reverse(P)), make_language(P), 12).ok());
    }
    SUBCASE("single-letter languages are fixed points") {
        Automaton A({"q0", "q1"}, {'a'}, "q0", {"q1"},
                    {{"q0", {'a', std::nullopt}, "q1"}});
        CHECK(enumerate_language(reverse(A), 4) == std::vector<std::string>{"a"});
    }
}

TEST_CASE("reverse is an involution on transition sets") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 80; ++i) {
        Automaton A = tt::random_automaton(rng);
        CHECK(reverse(reverse(A)) == A);
    }
}

TEST_CASE("reverse preserves the four property flags") {
    std::mt19937_64 rng(32);
    auto flags = [](const Automaton& A) {
        return std::tuple(check_deterministic(A).verdict,
                          check_backward_deterministic(A).verdict,
                          check_one_limited(A).verdict, check_complete(A).verdict);
    };
    for (int i = 0; i < 80; ++i) {
        Automaton A = tt::random_automaton(rng);
        CHECK(flags(A) == flags(reverse(A)));
    }
}

TEST_CASE("reversed language equals letterwise-reversed enumeration") {
    std::mt19937_64 rng(33);
    for (int i = 0; i < 25; ++i) {
        Automaton A = tt::random_automaton(rng);
        std::vector<std::string> expected;
        for (const std::string& w : enumerate_language(A, 5))
            expected.push_back(reversed(w));
        std::sort(expected.begin(), expected.end(), [](const auto& a, const auto& b) {
            return a.size() != b.size() ? a.size() < b.size() : a < b;
        });
        CHECK(enumerate_language(reverse(A), 5) == expected);
    }
}

TEST_CASE("complement of complete reversible machines") {
    SUBCASE("complement of V* accepts nothing") {
        Automaton C = complement_complete(tt::machine_vstar());
        CHECK(enumerate_language(C, 10).empty());
        CHECK(check_reversible(C).ok());
        CHECK(check_complete(C).ok());
    }
    SUBCASE("complement of the even-length machine accepts odd lengths") {
        Automaton C = complement_complete(tt::machine_parity());
        std::vector<std::string> words = enumerate_language(C, 10);
        CHECK(words.size() == 5);
        for (const std::string& w : words)
            CHECK(w.size() % 2 == 1);
    }
    SUBCASE("complement partitions the bounded word space") {
        for (const Automaton& A : {tt::machine_vstar(), tt::machine_parity()}) {
            Automaton C = complement_complete(A);
            for_each_word(A.alphabet(), 10, [&](std::string_view w) {
                CHECK(accepts(A, w) != accepts(C, w));
                return true;
            });
            CHECK(complement_complete(C) == A);
        }
    }
    SUBCASE("incomplete machines are refused with the failing property") {
        try {
            complement_complete(tt::machine_ba());
            FAIL("expected a precondition error");
        } catch (const PreconditionError& e) {
            CHECK(e.property() == "complete");
        }
        CHECK_THROWS_AS(complement_complete(tt::machine_ab()), PreconditionError);
    }
}

TEST_CASE("lambda-pair elimination") {
    SUBCASE("closure of the initial state decides the empty word") {
        Automaton A({"q0", "q1"}, {'a'}, "q0", {"q1"},
                    {{"q0", {std::nullopt, std::nullopt}, "q1"}});
        Automaton E = eliminate_lambda_pairs(A);
        CHECK(E.transitions().empty());
        CHECK(E.is_final(E.state_index("q0")));
        CHECK(accepts(E, ""));
    }
    SUBCASE("transitions are lifted over target closures") {
        Automaton A({"q0", "q1", "q2"}, {'a'}, "q0", {"q2"},
                    {{"q0", {'a', std::nullopt}, "q1"},
                     {"q1", {std::nullopt, std::nullopt}, "q2"}});
        Automaton E = eliminate_lambda_pairs(A);
        for (const Transition& t : E.transitions())
            CHECK_FALSE(t.read.is_lambda_pair());
        CHECK(language_equal(make_language(A), make_language(E), 8).ok());
        CHECK(accepts(E, "a"));
    }
    SUBCASE("lambda-free machines come back unchanged") {
        for (const Automaton& A : {tt::machine_ba(), tt::machine_wcb(), tt::machine_ab()})
            CHECK(eliminate_lambda_pairs(A) == A);
    }
}

TEST_CASE("elimination preserves the language on random machines") {
    std::mt19937_64 rng(34);
    for (int i = 0; i < 60; ++i) {
        tt::AutomatonOptions opt;
        opt.force_lambda_pair = true;
        Automaton A = tt::random_automaton(rng, opt);
        Automaton E = eliminate_lambda_pairs(A);
        for (const Transition& t : E.transitions())
            CHECK_FALSE(t.read.is_lambda_pair());
        CHECK(language_equal(make_language(A), make_language(E), 8).ok());
    }
}
