#include <cmath>
#include <random>

#include "doctest.h"
#include "greedylab/spaces.hpp"
#include "oracles.hpp"

using namespace greedylab;

namespace {

CoefVec vec(std::vector<double> c) { return CoefVec::from_coeffs(std::move(c)); }

std::vector<double> random_coeffs(std::mt19937_64& rng, int n, double zero_prob = 0.2) {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::uniform_real_distribution<double> z(0.0, 1.0);
    std::vector<double> c(static_cast<size_t>(n));
    for (auto& v : c) v = z(rng) < zero_prob ? 0.0 : u(rng);
    return c;
}

}  // namespace

TEST_CASE("lp norms against direct formulas") {
    std::mt19937_64 rng(11);
    NormModel l1(SpaceNode::lp(1.0), 8);
    NormModel l2(SpaceNode::lp(2.0), 8);
    NormModel l3(SpaceNode::lp(3.0), 8);
    NormModel li(SpaceNode::lp(kInf), 8);
    for (int t = 0; t < 50; ++t) {
        auto c = random_coeffs(rng, 8);
        double s1 = 0.0, s2 = 0.0, s3 = 0.0, sm = 0.0;
        for (double v : c) {
            s1 += std::fabs(v);
            s2 += v * v;
            s3 += std::pow(std::fabs(v), 3.0);
            sm = std::max(sm, std::fabs(v));
        }
        CoefVec x = vec(c);
        CHECK(l1.norm(x) == doctest::Approx(s1).epsilon(1e-13));
        CHECK(l2.norm(x) == doctest::Approx(std::sqrt(s2)).epsilon(1e-13));
        CHECK(l3.norm(x) == doctest::Approx(std::pow(s3, 1.0 / 3.0)).epsilon(1e-13));
        CHECK(li.norm(x) == doctest::Approx(sm).epsilon(1e-13));
    }
}

TEST_CASE("weighted lp norm") {
    std::mt19937_64 rng(12);
    Weight w = Weight::power(0.4);
    NormModel m(SpaceNode::weighted_lp(2.0, w), 8);
    for (int t = 0; t < 30; ++t) {
        auto c = random_coeffs(rng, 8);
        double s = 0.0;
        for (int n = 1; n <= 8; ++n) s += c[static_cast<size_t>(n - 1)] * c[static_cast<size_t>(n - 1)] * w.at(n);
        CHECK(m.norm(vec(c)) == doctest::Approx(std::sqrt(s)).epsilon(1e-13));
    }
}

TEST_CASE("schreier norm equals the admissible-set maximum") {
    std::mt19937_64 rng(13);
    NormModel m(SpaceNode::schreier(), 14);
    for (int t = 0; t < 60; ++t) {
        auto c = random_coeffs(rng, 14, 0.4);
        CHECK(m.norm(vec(c)) == doctest::Approx(oracle::schreier_norm(c)).epsilon(1e-12));
    }
    // The defining example values.
    NormModel big(SpaceNode::schreier(), 42);
    for (int N = 2; N <= 6; ++N) {
        CoefVec block(42);
        for (int n = N * N + 1; n <= N * N + N; ++n) block.set(n, 1.0);
        CHECK(big.norm(block) == doctest::Approx(static_cast<double>(N)).epsilon(1e-15));
        CoefVec initial(42);
        for (int n = 1; n <= N; ++n) initial.set(n, 1.0);
        CHECK(big.norm(initial) <= std::sqrt(static_cast<double>(N)) + 1e-12);
    }
}

TEST_CASE("james dynamic program equals the exhaustive tiling maximum") {
    std::mt19937_64 rng(14);
    NormModel m(SpaceNode::james(2.0), 9);
    NormModel m3(SpaceNode::james(3.0), 9);
    for (int t = 0; t < 60; ++t) {
        auto c = random_coeffs(rng, 9, 0.3);
        CHECK(m.norm(vec(c)) == doctest::Approx(oracle::james_norm(c, 2.0)).epsilon(1e-12));
        CHECK(m3.norm(vec(c)) == doctest::Approx(oracle::james_norm(c, 3.0)).epsilon(1e-12));
    }
    CHECK(m.norm(vec({1.0, -1.0, 1.0})) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
}

TEST_CASE("f1q norm equals the midpoint-membership integral") {
    std::mt19937_64 rng(15);
    for (const std::vector<int>& levels :
         {std::vector<int>{0}, {0, 1}, {1, 2}, {0, 2}, {0, 1, 2}}) {
        int dim = 0;
        for (int k : levels) dim += 1 << k;
        NormModel m(SpaceNode::f1q(2.0, levels), dim);
        for (int t = 0; t < 25; ++t) {
            auto c = random_coeffs(rng, dim, 0.3);
            CHECK(m.norm(vec(c)) == doctest::Approx(oracle::f1q_norm(c, 2.0, levels)).epsilon(1e-12));
        }
    }
}

TEST_CASE("ebasis norm equals the paired closed form") {
    std::mt19937_64 rng(16);
    for (int W : {1, 2, 5, 8, 15, 16}) {
        NormModel m(SpaceNode::ebasis(), W);
        for (int t = 0; t < 25; ++t) {
            auto c = random_coeffs(rng, W, 0.3);
            CHECK(m.norm(vec(c)) == doctest::Approx(oracle::ebasis_norm(c)).epsilon(1e-12));
        }
    }
    // Unit vectors are normalized.
    NormModel m(SpaceNode::ebasis(), 6);
    for (int n = 1; n <= 6; ++n) {
        CoefVec e(6);
        e.set(n, 1.0);
        CHECK(m.norm(e) == doctest::Approx(1.0).epsilon(1e-15));
    }
}

TEST_CASE("rosenthal-woo norm is the max of its two expressions") {
    std::mt19937_64 rng(17);
    Weight w = Weight::power(0.4);
    NormModel m(SpaceNode::rosenthal_woo(2.0, 1.0, w), 10);
    NormModel mi(SpaceNode::rosenthal_woo(kInf, 1.0, w), 10);
    for (int t = 0; t < 40; ++t) {
        auto c = random_coeffs(rng, 10, 0.3);
        double q2 = 0.0, p1 = 0.0, qi = 0.0;
        for (int n = 1; n <= 10; ++n) {
            double v = c[static_cast<size_t>(n - 1)];
            q2 += v * v;
            p1 += std::fabs(v) * w.at(n);
            qi = std::max(qi, std::fabs(v));
        }
        CHECK(m.norm(vec(c)) == doctest::Approx(std::max(std::sqrt(q2), p1)).epsilon(1e-13));
        CHECK(mi.norm(vec(c)) == doctest::Approx(std::max(qi, p1)).epsilon(1e-13));
    }
    // Indicator closed form |A|^{1/q} vs w(A)^{1/p}.
    IndexSet A({1, 2, 3, 4});
    CoefVec ind(10);
    for (int n : A) ind.set(n, 1.0);
    CHECK(m.norm(ind) == doctest::Approx(std::max(2.0, measure(w, A))).epsilon(1e-13));
}

TEST_CASE("rw summing norm") {
    std::mt19937_64 rng(18);
    Weight w = Weight::power(0.4);
    NormModel m(SpaceNode::rw_summing(2.0, w), 9);
    for (int t = 0; t < 30; ++t) {
        auto c = random_coeffs(rng, 9, 0.3);
        double q2 = 0.0;
        for (double v : c) q2 += v * v;
        double best = 0.0;
        for (int j = 1; j <= 9; ++j) {
            double s = 0.0;
            for (int n = j; n <= 9; ++n) s += c[static_cast<size_t>(n - 1)] * w.at(n);
            best = std::max(best, std::fabs(s));
        }
        CHECK(m.norm(vec(c)) == doctest::Approx(std::max(std::sqrt(q2), best)).epsilon(1e-12));
    }
}

TEST_CASE("direct sums split the window into blocks") {
    std::vector<SpaceNode> parts;
    SpaceNode a = SpaceNode::lp(1.0);
    a.dim = 2;
    parts.push_back(a);
    parts.push_back(SpaceNode::lp(2.0));
    NormModel sum(SpaceNode::dsum_l1(parts), 5);
    NormModel sup(SpaceNode::dsum_inf(parts), 5);

    CoefVec x = vec({1.0, -2.0, 3.0, 0.0, 4.0});
    double left = 3.0, right = 5.0;
    CHECK(sum.norm(x) == doctest::Approx(left + right).epsilon(1e-14));
    CHECK(sup.norm(x) == doctest::Approx(std::max(left, right)).epsilon(1e-14));

    std::vector<SpaceNode> lay;
    lay.push_back(SpaceNode::lp(1.0));
    lay.push_back(SpaceNode::lp(kInf));
    NormModel over(SpaceNode::max_of(lay), 4);
    CoefVec y = vec({1.0, -1.0, 0.5, 0.0});
    CHECK(over.norm(y) == doctest::Approx(2.5).epsilon(1e-14));
}

TEST_CASE("padding and window guards") {
    NormModel m(SpaceNode::lp(2.0), 6);
    CHECK(m.norm(vec({3.0, 4.0})) == doctest::Approx(5.0).epsilon(1e-15));
    CoefVec longvec = vec({0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0});
    CHECK_THROWS_AS(m.norm(longvec), std::invalid_argument);
}

TEST_CASE("lattice flags") {
    CHECK(NormModel(SpaceNode::lp(1.0), 6).is_lattice());
    CHECK(NormModel(SpaceNode::weighted_lp(2.0, Weight::power(0.4)), 6).is_lattice());
    CHECK(NormModel(SpaceNode::schreier(), 6).is_lattice());
    CHECK(NormModel(SpaceNode::rosenthal_woo(2.0, 1.0, Weight::power(0.4)), 6).is_lattice());
    CHECK_FALSE(NormModel(SpaceNode::james(2.0), 6).is_lattice());
    CHECK_FALSE(NormModel(SpaceNode::ebasis(), 6).is_lattice());
    std::vector<SpaceNode> parts;
    parts.push_back(SpaceNode::lp(1.0));
    parts.front().dim = 3;
    parts.push_back(SpaceNode::james(2.0));
    CHECK_FALSE(NormModel(SpaceNode::dsum_l1(parts), 6).is_lattice());
}

TEST_CASE("frame bounds bracket the unit vectors") {
    for (const SpaceNode& spec :
         {SpaceNode::lp(2.0), SpaceNode::schreier(), SpaceNode::james(2.0), SpaceNode::ebasis(),
          SpaceNode::rosenthal_woo(2.0, 1.0, Weight::power(0.4))}) {
        NormModel m(spec, 8);
        FrameBounds fb = m.frame_bounds();
        for (int n = 1; n <= 8; ++n) {
            CoefVec e(8);
            e.set(n, 1.0);
            double en = m.norm(e);
            CHECK(fb.c1 <= en * (1.0 + 1e-12));
            CHECK(fb.c2 >= en * (1.0 - 1e-12));
        }
        CHECK(fb.c1 > 0.0);
    }
    CHECK(NormModel(SpaceNode::lp(2.0), 8).frame_bounds().exact);
}

TEST_CASE("declared constants for lattice models") {
    NormModel l2(SpaceNode::lp(2.0), 8);
    CHECK(l2.known_Kb() == 1.0);
    CHECK(l2.known_Ku() == 1.0);
    CHECK(l2.known_Cq() == 1.0);
    CHECK(l2.known_Ca(Weight::constant(1.0)) == 1.0);
    CHECK(l2.known_Cs(Weight::constant(1.0)) == 1.0);
    CHECK(l2.known_Cc(Weight::constant(1.0)) == 1.0);
    CHECK_FALSE(l2.known_Ca(Weight::explicit_list({1.0, 3.0}, 1.0)).has_value());

    NormModel sch(SpaceNode::schreier(), 8);
    CHECK(sch.known_Cc(Weight::power(0.4)) == 1.0);
    CHECK_FALSE(sch.known_Ca(Weight::constant(1.0)).has_value());

    Weight wp = Weight::power(0.4);
    NormModel rwi(SpaceNode::rosenthal_woo(kInf, 1.0, wp), 8);
    CHECK(rwi.known_Ca(wp) == 1.0);
    CHECK(rwi.known_Cs(wp) == 1.0);
    CHECK_FALSE(rwi.known_Ca(Weight::constant(1.0)).has_value());

    NormModel james(SpaceNode::james(2.0), 8);
    CHECK_FALSE(james.known_Cq().has_value());
}

TEST_CASE("dual norms where closed forms exist") {
    NormModel l2(SpaceNode::lp(2.0), 6);
    CHECK(l2.has_dual_closed_form());
    CoefVec f = vec({3.0, 4.0});
    CHECK(l2.dual_norm(f).value() == doctest::Approx(5.0).epsilon(1e-14));

    NormModel l1(SpaceNode::lp(1.0), 6);
    REQUIRE(l1.has_dual_closed_form());
    CHECK(l1.dual_norm(f).value() == doctest::Approx(4.0).epsilon(1e-14));

    // Weak duality against sampled unit vectors.
    std::mt19937_64 rng(19);
    for (int t = 0; t < 20; ++t) {
        auto c = random_coeffs(rng, 6, 0.2);
        auto g = random_coeffs(rng, 6, 0.2);
        CoefVec x = vec(c), fun = vec(g);
        double pairing = 0.0;
        for (int n = 1; n <= 6; ++n) pairing += x.at(n) * fun.at(n);
        double nx = l2.norm(x);
        if (nx > 1e-12)
            CHECK(std::fabs(pairing) <= l2.dual_norm(fun).value() * nx * (1.0 + 1e-9));
    }

    CHECK_FALSE(NormModel(SpaceNode::schreier(), 6).has_dual_closed_form());
}

TEST_CASE("layout description names the blocks") {
    std::vector<SpaceNode> parts;
    parts.push_back(SpaceNode::f1q(2.0, {0, 1}));
    parts.push_back(SpaceNode::james(2.0));
    NormModel m(SpaceNode::dsum_l1(parts), 7);
    std::string d = m.describe_layout();
    CHECK(d.find("f1q") != std::string::npos);
    CHECK(d.find("james") != std::string::npos);
}
