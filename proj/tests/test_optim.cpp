#include <cmath>
#include <random>

#include "doctest.h"
#include "greedylab/greedy.hpp"
#include "greedylab/optim.hpp"
#include "oracles.hpp"

using namespace greedylab;

namespace {

CoefVec random_vec(std::mt19937_64& rng, int n, double zero_prob = 0.25) {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::uniform_real_distribution<double> z(0.0, 1.0);
    CoefVec x(n);
    for (int i = 1; i <= n; ++i)
        if (z(rng) >= zero_prob) x.set(i, u(rng));
    return x;
}

IndexSet random_set(std::mt19937_64& rng, int window, int size) {
    std::vector<int> idx(static_cast<size_t>(window));
    for (int i = 0; i < window; ++i) idx[static_cast<size_t>(i)] = i + 1;
    std::shuffle(idx.begin(), idx.end(), rng);
    idx.resize(static_cast<size_t>(size));
    return IndexSet(idx);
}

}  // namespace

TEST_CASE("lattice minimization is the projection") {
    std::mt19937_64 rng(31);
    NormModel l2(SpaceNode::lp(2.0), 8);
    for (int t = 0; t < 30; ++t) {
        CoefVec x = random_vec(rng, 8);
        IndexSet A = random_set(rng, 8, 1 + t % 4);
        MinimizeResult r = min_norm_over_coeffs(l2, x, A);
        CHECK(r.used_shortcut);
        CHECK(r.value == doctest::Approx(l2.norm(residual(x, A))).epsilon(1e-13));
        REQUIRE(static_cast<int>(r.coeffs.size()) == A.size());
        for (int i = 0; i < A.size(); ++i) CHECK(r.coeffs[static_cast<size_t>(i)] == x.at(A[i]));
    }
}

TEST_CASE("numeric descent agrees with the lattice shortcut") {
    std::mt19937_64 rng(32);
    std::vector<NormModel> models;
    models.emplace_back(SpaceNode::lp(1.0), 7);
    models.emplace_back(SpaceNode::lp(2.0), 7);
    models.emplace_back(SpaceNode::rosenthal_woo(2.0, 1.0, Weight::power(0.4)), 7);
    for (int t = 0; t < 15; ++t) {
        for (const NormModel& m : models) {
            CoefVec x = random_vec(rng, 7);
            IndexSet A = random_set(rng, 7, 1 + t % 3);
            MinimizeOptions numeric;
            numeric.force_numeric = true;
            double shortcut = min_norm_over_coeffs(m, x, A).value;
            double descent = min_norm_over_coeffs(m, x, A, numeric).value;
            CHECK(std::fabs(descent - shortcut) <= 1e-6 * (1.0 + shortcut));
        }
    }
}

TEST_CASE("numeric descent never loses to its own candidates") {
    std::mt19937_64 rng(33);
    NormModel james(SpaceNode::james(2.0), 7);
    CHECK_FALSE(james.is_lattice());
    for (int t = 0; t < 20; ++t) {
        CoefVec x = random_vec(rng, 7);
        IndexSet A = random_set(rng, 7, 2);
        MinimizeResult r = min_norm_over_coeffs(james, x, A);
        CHECK_FALSE(r.used_shortcut);
        CHECK(r.value <= james.norm(x) + 1e-9);
        CHECK(r.value <= james.norm(residual(x, A)) + 1e-9);
    }
}

TEST_CASE("chebyshev greedy approximand equals tga on lattices") {
    std::mt19937_64 rng(34);
    NormModel m(SpaceNode::lp(2.0), 8);
    for (int t = 0; t < 20; ++t) {
        CoefVec x = random_vec(rng, 8, 0.0);
        for (int k : {1, 3}) {
            CoefVec a = cga(m, x, k), b = tga(x, k);
            for (int n = 1; n <= 8; ++n) CHECK(a.at(n) == doctest::Approx(b.at(n)).epsilon(1e-13));
        }
    }
}

TEST_CASE("sigma with unit weight reproduces classical best m-term errors") {
    std::mt19937_64 rng(35);
    Weight w1 = Weight::constant(1.0);
    NormModel l1(SpaceNode::lp(1.0), 8);
    NormModel l2(SpaceNode::lp(2.0), 8);
    NormModel li(SpaceNode::lp(kInf), 8);
    for (int t = 0; t < 25; ++t) {
        CoefVec x = random_vec(rng, 8, 0.2);
        std::vector<double> c;
        for (int n = 1; n <= 8; ++n) c.push_back(x.at(n));
        for (int m = 0; m <= 4; ++m) {
            double delta = static_cast<double>(m);
            CHECK(sigma_w(l1, x, w1, delta).value ==
                  doctest::Approx(oracle::lp_best_m_term(c, 1.0, m)).epsilon(1e-12));
            CHECK(sigma_w(l2, x, w1, delta).value ==
                  doctest::Approx(oracle::lp_best_m_term(c, 2.0, m)).epsilon(1e-12));
            CHECK(sigma_w(li, x, w1, delta).value ==
                  doctest::Approx(oracle::lp_best_m_term(c, kInf, m)).epsilon(1e-12));
        }
    }
}

TEST_CASE("sigma is monotone in delta and below the projection variant") {
    std::mt19937_64 rng(36);
    Weight wp = Weight::power(0.4);
    NormModel m(SpaceNode::rosenthal_woo(2.0, 1.0, wp), 8);
    for (int t = 0; t < 15; ++t) {
        CoefVec x = random_vec(rng, 8, 0.2);
        double prev = kInf;
        for (double delta : {0.0, 0.5, 1.0, 2.0, 4.0}) {
            double s = sigma_w(m, x, wp, delta).value;
            double sp = sigma_w_tilde(m, x, wp, delta).value;
            CHECK(s <= prev * (1.0 + 1e-12));
            CHECK(s <= sp * (1.0 + 1e-12));
            prev = s;
        }
    }
}

TEST_CASE("sigma at delta below the lightest weight returns the norm") {
    NormModel m(SpaceNode::lp(2.0), 6);
    Weight w1 = Weight::constant(1.0);
    CoefVec x = CoefVec::from_coeffs({1.0, 2.0, 0.0, -1.0, 0.0, 0.5});
    SigmaResult r = sigma_w(m, x, w1, 0.5);
    CHECK(r.value == doctest::Approx(m.norm(x)).epsilon(1e-14));
    CHECK(r.best_set.empty());
}

TEST_CASE("sigma budget exhaustion flags an upper bound") {
    NormModel m(SpaceNode::lp(2.0), 10);
    Weight w1 = Weight::constant(1.0);
    CoefVec x(10);
    for (int n = 1; n <= 10; ++n) x.set(n, 1.0 + 0.01 * n);
    SigmaOptions tight;
    tight.budget = 5;
    SigmaResult capped = sigma_w(m, x, w1, 5.0, tight);
    CHECK(capped.budget_exhausted);
    SigmaResult full = sigma_w(m, x, w1, 5.0);
    CHECK_FALSE(full.budget_exhausted);
    CHECK(capped.value >= full.value - 1e-12);
}

TEST_CASE("sigma respects the weight budget") {
    NormModel m(SpaceNode::lp(1.0), 6);
    Weight w = Weight::explicit_list({1.0, 1.0, 10.0}, 1.0);
    CoefVec x = CoefVec::from_coeffs({1.0, 1.0, 5.0, 1.0, 0.0, 0.0});
    // delta = 2: the heavy third coordinate cannot be picked up.
    SigmaResult r = sigma_w(m, x, w, 2.0);
    CHECK_FALSE(r.best_set.contains(3));
    CHECK(r.value >= 5.0 - 1e-12);
}
