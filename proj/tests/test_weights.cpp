#include <cmath>
#include <random>

#include "doctest.h"
#include "greedylab/weights.hpp"
#include "oracles.hpp"

using namespace greedylab;

TEST_CASE("weight descriptors evaluate pointwise") {
    Weight c = Weight::constant(2.5);
    CHECK(c.at(1) == 2.5);
    CHECK(c.at(100) == 2.5);

    Weight p = Weight::power(0.4);
    CHECK(p.at(1) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(p.at(32) == doctest::Approx(std::pow(32.0, -0.4)).epsilon(1e-15));

    Weight g = Weight::geometric(0.5);
    CHECK(g.at(1) == 0.5);
    CHECK(g.at(3) == 0.125);

    Weight e = Weight::explicit_list({3.0, 1.0, 2.0}, 0.25);
    CHECK(e.at(1) == 3.0);
    CHECK(e.at(3) == 2.0);
    CHECK(e.at(4) == 0.25);
    CHECK(e.at(99) == 0.25);
}

TEST_CASE("weights must be positive") {
    CHECK_THROWS_AS(Weight::constant(0.0), std::invalid_argument);
    CHECK_THROWS_AS(Weight::constant(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(Weight::geometric(0.0), std::invalid_argument);
    CHECK_THROWS_AS(Weight::explicit_list({1.0, 0.0}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(Weight::explicit_list({1.0}, -0.5), std::invalid_argument);
}

TEST_CASE("nonincreasing detection") {
    CHECK(Weight::constant(1.0).nonincreasing());
    CHECK(Weight::power(0.4).nonincreasing());
    CHECK(Weight::geometric(0.5).nonincreasing());
    CHECK(Weight::explicit_list({3.0, 2.0, 2.0}, 1.0).nonincreasing());
    CHECK_FALSE(Weight::explicit_list({1.0, 3.0}, 1.0).nonincreasing());
    CHECK_FALSE(Weight::explicit_list({3.0, 2.0}, 2.5).nonincreasing());
}

TEST_CASE("measure sums over the set") {
    Weight p = Weight::power(0.4);
    IndexSet A({2, 5, 7});
    double expect = p.at(2) + p.at(5) + p.at(7);
    CHECK(measure(p, A) == doctest::Approx(expect).epsilon(1e-15));
    CHECK(measure(p, IndexSet()) == 0.0);
}

TEST_CASE("equivalence constants bound the ratio and invert exactly") {
    const int W = 16;
    Weight v = Weight::power(0.4);
    Weight w = Weight::explicit_list({1.0, 3.0, 0.5}, 1.25);

    auto [a, b] = equivalence_constants(v, w, W);
    for (int n = 1; n <= W; ++n) {
        CHECK(a * v.at(n) <= w.at(n) * (1.0 + 1e-12));
        CHECK(w.at(n) <= b * v.at(n) * (1.0 + 1e-12));
    }
    // Tightness: both bounds are attained somewhere.
    bool tight_a = false, tight_b = false;
    for (int n = 1; n <= W; ++n) {
        if (std::fabs(a * v.at(n) - w.at(n)) <= 1e-12 * w.at(n)) tight_a = true;
        if (std::fabs(b * v.at(n) - w.at(n)) <= 1e-12 * w.at(n)) tight_b = true;
    }
    CHECK(tight_a);
    CHECK(tight_b);

    auto [a2, b2] = equivalence_constants(w, v, W);
    CHECK(a2 == 1.0 / b);
    CHECK(b2 == 1.0 / a);
}

TEST_CASE("gap index matches the exhaustive pair search") {
    for (int W = 4; W <= 10; W += 2) {
        CAPTURE(W);
        for (const Weight& w :
             {Weight::constant(1.0), Weight::geometric(0.5), Weight::power(0.4),
              Weight::explicit_list({3.0, 1.0, 2.0, 5.0}, 0.5),
              Weight::explicit_list({0.001, 0.001, 0.001}, 1.0)}) {
            SwResult r = s_w_window(w, W);
            CHECK(r.value == oracle::sw_index(w, W));
        }
    }
}

TEST_CASE("gap index endpoints") {
    CHECK(s_w_window(Weight::constant(1.0), 10).value == 5);
    for (int W = 4; W <= 12; ++W) CHECK(s_w_window(Weight::geometric(0.5), W).value == 0);
    // Tiny listed weights against a heavy tail saturate the structural limit.
    SwResult grow = s_w_window(Weight::explicit_list({0.001, 0.001, 0.001, 0.001, 0.001, 0.001, 0.001}, 1.0), 8);
    CHECK(grow.value == 7);
    CHECK(grow.saturated);
    CHECK_FALSE(s_w_window(Weight::constant(1.0), 10).saturated);
}

TEST_CASE("gap index is monotone in the window") {
    for (const Weight& w : {Weight::constant(1.0), Weight::power(0.4)}) {
        int prev = 0;
        for (int W = 2; W <= 14; ++W) {
            int cur = s_w_window(w, W).value;
            CHECK(cur >= prev);
            prev = cur;
        }
    }
}

TEST_CASE("descriptor equality and ordering") {
    CHECK(Weight::constant(1.0) == Weight::constant(1.0));
    CHECK_FALSE(Weight::constant(1.0) == Weight::constant(2.0));
    CHECK_FALSE(Weight::power(0.4) == Weight::geometric(0.4));
    Weight a = Weight::power(0.3), b = Weight::power(0.4);
    CHECK(Weight::compare(a, b) == -Weight::compare(b, a));
    CHECK(Weight::compare(a, a) == 0);
}
