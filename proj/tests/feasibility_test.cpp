#include "eqcolor/feasibility.hpp"
#include "eqcolor/oracle.hpp"

#include <doctest.h>

#include <random>

using namespace eqcolor;

TEST_CASE("feasible: K_{7,7} spectrum facts") {
    auto k77 = make_instance({7, 7});
    CHECK_FALSE(feasible(k77, 3));
    CHECK(feasible(k77, 6));
    CHECK(feasible(k77, 14));
    CHECK_FALSE(feasible(k77, 7));  // non-monotone gap
    CHECK(feasible(k77, 6));
}

TEST_CASE("feasible: K_{3,5}") {
    auto k35 = make_instance({3, 5});
    // s = 2 pins both per-set class counts, so only r = 3 is attainable there.
    CHECK_FALSE(feasible(k35, 4));
    CHECK(feasible(k35, 3));
}

TEST_CASE("feasible: r = 1 only for a single partite set") {
    CHECK(feasible(make_instance({9}), 1));
    CHECK(feasible(make_instance({1}), 1));
    CHECK_FALSE(feasible(make_instance({1, 1}), 1));
    CHECK_FALSE(feasible(make_instance({4, 9}), 1));
    CHECK_THROWS_AS(feasible(make_instance({2, 2}), 0), validation_error);
}

TEST_CASE("feasible at and above the vertex count") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<Int> pick(1, 9);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Int> sizes(1 + rng() % 4);
        for (auto& n : sizes) n = pick(rng);
        auto inst = make_instance(sizes);
        CHECK(feasible(inst, inst.total()));
        CHECK(feasible(inst, inst.total() + 1 + static_cast<Int>(rng() % 5)));
    }
}

TEST_CASE("min_equitable") {
    CHECK(min_equitable(make_instance({7, 7})) == 2);
    CHECK(min_equitable(make_instance({1, 1, 1})) == 3);
    CHECK(min_equitable(make_instance({3, 5})) == 3);
}

TEST_CASE("spectrum") {
    auto report = spectrum(make_instance({7, 7}), 14);
    for (Int r = 1; r <= 14; ++r) {
        const bool expected = (r % 2 == 0) || r >= 8;
        CHECK(report.entries.at(r) == expected);
    }

    auto k22 = spectrum(make_instance({2, 2}), 4);
    CHECK_FALSE(k22.entries.at(1));
    CHECK(k22.entries.at(2));
    CHECK(k22.entries.at(3));
    CHECK(k22.entries.at(4));

    auto k1 = spectrum(make_instance({1}), 3);
    CHECK(k1.entries.at(1));
    CHECK(k1.entries.at(2));
    CHECK(k1.entries.at(3));
}

TEST_CASE("feasible agrees with the oracle on random small instances") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<Int> pick(1, 10);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<Int> sizes(1 + rng() % 4);
        for (auto& n : sizes) n = pick(rng);
        auto inst = make_instance(sizes);
        for (Int r = 1; r <= inst.total() + 2; ++r) {
            CAPTURE(inst.name());
            CAPTURE(r);
            CHECK(feasible(inst, r) == oracle_feasible(inst, r));
        }
    }
}
