/* test_mine.cpp -- the counterexample mining harness: green runs on the
 * exhaustive box, fault-injection sensitivity, determinism, budgets.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mftop/errors.hpp"
#include "mftop/mine.hpp"

using namespace mftop;

TEST_CASE("exhaustive 2.18 finds no counterexample") {
    const MineResult result = mine_counterexamples("2.18", MineBounds{});
    CHECK(result.exhaustive);
    CHECK(result.complete);
    CHECK(result.ok());
    // 31 distinct generated topologies across the shapes of the box
    CHECK(result.instances_checked == 31);
}

TEST_CASE("exhaustive runs of the light topology propositions are green") {
    for (const char* prop : {"2.14", "2.16", "2.9", "2.12"}) {
        const MineResult result = mine_counterexamples(prop, MineBounds{});
        CHECK(result.ok());
        CHECK(result.complete);
        CHECK(result.instances_checked > 0);
    }
}

TEST_CASE("exhaustive runs of the product propositions are green") {
    for (const char* prop : {"3.4", "3.6", "3.9", "3.13", "3.17"}) {
        const MineResult result = mine_counterexamples(prop, MineBounds{});
        CHECK(result.ok());
        CHECK(result.complete);
        CHECK(result.instances_checked > 0);
    }
}

TEST_CASE("randomized 2.19 run is green") {
    MineBounds bounds;
    bounds.max_points = 3;
    bounds.max_dim = 2;
    bounds.max_den = 2;
    bounds.samples = 60;
    MineOptions options;
    options.seed = 1;
    const MineResult result = mine_counterexamples("2.19", bounds, options);
    CHECK_FALSE(result.exhaustive);
    CHECK(result.ok());
    CHECK(result.instances_checked == 60);
}

TEST_CASE("drop-n1 fault injection produces a 2.18 witness (harness sensitivity)") {
    MineOptions options;
    options.mutation = Mutation::DropN1;
    const MineResult result = mine_counterexamples("2.18", MineBounds{}, options);
    CHECK_FALSE(result.ok());
    REQUIRE(result.witness.has_value());
    CHECK((*result.witness)["violation"].get<std::string>().find("N1") !=
          std::string::npos);
}

TEST_CASE("mining reports are deterministic for a fixed seed") {
    MineBounds bounds;
    bounds.max_points = 3;
    bounds.max_den = 3;
    bounds.samples = 30;
    MineOptions options;
    options.seed = 7;
    const auto a = mine_counterexamples("1.7", bounds, options).to_json().dump();
    const auto b = mine_counterexamples("1.7", bounds, options).to_json().dump();
    CHECK(a == b);
}

TEST_CASE("budget exhaustion yields a partial report") {
    MineOptions options;
    options.budget = std::chrono::milliseconds(0);
    const MineResult result = mine_counterexamples("1.7", MineBounds{}, options);
    CHECK_FALSE(result.complete);
    CHECK(result.instances_checked == 0);
    CHECK(result.to_json()["complete"] == false);
}

TEST_CASE("unknown propositions are rejected") {
    CHECK_THROWS_AS(mine_counterexamples("9.99", MineBounds{}), ValueError);
}

TEST_CASE("every registered proposition mines clean on a tiny random run") {
    for (const std::string& prop : mined_propositions()) {
        MineBounds bounds;
        bounds.samples = 8;
        MineOptions options;
        options.seed = 3;
        const MineResult result = mine_counterexamples(prop, bounds, options);
        CHECK(result.ok());
    }
}
