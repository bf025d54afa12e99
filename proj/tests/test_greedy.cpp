#include <cmath>
#include <random>

#include "doctest.h"
#include "greedylab/greedy.hpp"
#include "oracles.hpp"

using namespace greedylab;

namespace {

CoefVec vec(std::vector<double> c) { return CoefVec::from_coeffs(std::move(c)); }

// Coefficients from a small value set so that ties actually happen.
CoefVec tied_random(std::mt19937_64& rng, int n) {
    static const double vals[] = {0.0, 0.5, -0.5, 1.0, -1.0, 2.0};
    std::uniform_int_distribution<int> pick(0, 5);
    CoefVec x(n);
    for (int i = 1; i <= n; ++i) x.set(i, vals[pick(rng)]);
    return x;
}

}  // namespace

TEST_CASE("greedy ordering sorts by modulus with index tiebreak") {
    CoefVec x = vec({1.0, -3.0, 2.0, -2.0, 0.0});
    auto ord = greedy_ordering(x);
    REQUIRE(ord.size() == 5);
    CHECK(ord[0] == 2);
    CHECK(ord[1] == 3);  // |2| ties resolved toward the smaller index
    CHECK(ord[2] == 4);
    CHECK(ord[3] == 1);
    CHECK(ord[4] == 5);
}

TEST_CASE("canonical greedy sets nest") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 40; ++t) {
        CoefVec x = tied_random(rng, 9);
        for (int m = 1; m < 9; ++m) {
            IndexSet a = greedy_set(x, m);
            IndexSet b = greedy_set(x, m + 1);
            CHECK(a.size() == m);
            for (int n : a) CHECK(b.contains(n));
        }
    }
}

TEST_CASE("all greedy sets match the threshold filter") {
    std::mt19937_64 rng(22);
    for (int t = 0; t < 50; ++t) {
        CoefVec x = tied_random(rng, 8);
        for (int m = 1; m <= 8; ++m) {
            GreedySets gs = all_greedy_sets(x, m, 256);
            REQUIRE_FALSE(gs.truncated);
            auto expect = oracle::greedy_sets(x, m);
            REQUIRE(gs.sets.size() == expect.size());
            auto sorted = gs.sets;
            std::sort(sorted.begin(), sorted.end());
            std::sort(expect.begin(), expect.end());
            for (size_t i = 0; i < sorted.size(); ++i) CHECK(sorted[i] == expect[i]);
        }
    }
}

TEST_CASE("every reported greedy set satisfies the defining inequality") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 40; ++t) {
        CoefVec x = tied_random(rng, 10);
        for (int m : {1, 3, 5}) {
            for (const IndexSet& A : all_greedy_sets(x, m, 64).sets) {
                double inner = std::numeric_limits<double>::infinity();
                for (int n : A) inner = std::min(inner, std::fabs(x.at(n)));
                double outer = 0.0;
                for (int n = 1; n <= 10; ++n)
                    if (!A.contains(n)) outer = std::max(outer, std::fabs(x.at(n)));
                CHECK(inner >= outer);
            }
        }
    }
}

TEST_CASE("greedy set enumeration cap sets the flag") {
    CoefVec x(8);
    for (int n = 1; n <= 8; ++n) x.set(n, 1.0);
    GreedySets gs = all_greedy_sets(x, 4, 16);
    CHECK(gs.truncated);
    CHECK(gs.sets.size() == 16);
    GreedySets full = all_greedy_sets(x, 4, 128);
    CHECK_FALSE(full.truncated);
    CHECK(full.sets.size() == 70);
    CHECK(full.sets.front() == greedy_set(x, 4));
}

TEST_CASE("greedy sets are invariant under scaling and sign flips") {
    std::mt19937_64 rng(24);
    for (int t = 0; t < 30; ++t) {
        CoefVec x = tied_random(rng, 8);
        CoefVec y(8), z(8);
        for (int n = 1; n <= 8; ++n) {
            y.set(n, 2.5 * x.at(n));
            z.set(n, (n % 2 == 0 ? -1.0 : 1.0) * x.at(n));
        }
        for (int m : {1, 2, 4}) {
            auto a = all_greedy_sets(x, m, 64).sets;
            auto b = all_greedy_sets(y, m, 64).sets;
            auto c = all_greedy_sets(z, m, 64).sets;
            REQUIRE(a.size() == b.size());
            REQUIRE(a.size() == c.size());
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            std::sort(c.begin(), c.end());
            for (size_t i = 0; i < a.size(); ++i) {
                CHECK(a[i] == b[i]);
                CHECK(a[i] == c[i]);
            }
        }
    }
}

TEST_CASE("projection and residual are complementary") {
    CoefVec x = vec({1.0, -2.0, 3.0, 0.0, 5.0});
    IndexSet A({2, 4, 5});
    CoefVec p = project(x, A), r = residual(x, A);
    for (int n = 1; n <= 5; ++n) {
        CHECK(p.at(n) + r.at(n) == x.at(n));
        if (A.contains(n)) CHECK(r.at(n) == 0.0);
        else CHECK(p.at(n) == 0.0);
    }
}

TEST_CASE("tga projects onto the canonical greedy set") {
    CoefVec x = vec({1.0, -4.0, 3.0, -2.0});
    CoefVec g2 = tga(x, 2);
    CHECK(g2.at(1) == 0.0);
    CHECK(g2.at(2) == -4.0);
    CHECK(g2.at(3) == 3.0);
    CHECK(g2.at(4) == 0.0);
    CoefVec g0 = tga(x, 0);
    for (int n = 1; n <= 4; ++n) CHECK(g0.at(n) == 0.0);
}

TEST_CASE("partial sums take initial segments") {
    CoefVec x = vec({1.0, 2.0, 3.0, 4.0});
    CoefVec s2 = partial_sum(x, 2);
    CHECK(s2.at(1) == 1.0);
    CHECK(s2.at(2) == 2.0);
    CHECK(s2.at(3) == 0.0);
    CoefVec s0 = partial_sum(x, 0);
    for (int n = 1; n <= 4; ++n) CHECK(s0.at(n) == 0.0);
}

TEST_CASE("truncation clamps large coordinates and fixes the rest") {
    CoefVec x = vec({0.5, -2.0, 1.0, -0.25});
    CoefVec t = truncate(x, 1.0);
    CHECK(t.at(1) == 0.5);
    CHECK(t.at(2) == -1.0);
    CHECK(t.at(3) == 1.0);
    CHECK(t.at(4) == -0.25);
    // Idempotent at the same height.
    CoefVec tt = truncate(t, 1.0);
    for (int n = 1; n <= 4; ++n) CHECK(tt.at(n) == t.at(n));
    CoefVec z = truncate(x, 0.0);
    for (int n = 1; n <= 4; ++n) CHECK(z.at(n) == 0.0);
}
