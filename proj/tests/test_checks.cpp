#include <cmath>

#include "doctest.h"
#include "greedylab/checks.hpp"

using namespace greedylab;

namespace {

SearchFamily fam(int window, int random_count = 20) {
    SearchFamily f;
    f.window = window;
    f.random_count = random_count;
    f.max_support = 4;
    f.pair_size_cap = 3;
    f.sign_cap = 4;
    f.sigma_budget = 300000;
    return f;
}

const Weight kOnes = Weight::constant(1.0);

}  // namespace

TEST_CASE("the check registry is fixed") {
    const auto& ids = check_ids();
    REQUIRE(ids.size() == 12);
    CHECK(ids[0] == "greedy-char-upper");
    CHECK(ids[1] == "almost-greedy-char-upper");
    CHECK(ids[2] == "partially-greedy-forward");
    CHECK(ids[3] == "partially-greedy-reverse");
    CHECK(ids[4] == "propA-implies-superdem");
    CHECK(ids[5] == "propC-superdem-implies-propA");
    CHECK(ids[6] == "weight-transfer");
    CHECK(ids[7] == "truncation-lemma");
    CHECK(ids[8] == "part1-lemma");
    CHECK(ids[9] == "find-c0-bound");
    CHECK(ids[10] == "propA-formulations");
    CHECK(ids[11] == "semi-greedy-implies-propA");
}

TEST_CASE("bad inputs are rejected") {
    NormModel m(SpaceNode::lp(2.0), 8);
    CHECK_THROWS_AS(run_check("no-such-check", m, kOnes, fam(8)), std::invalid_argument);
    CHECK_THROWS_AS(run_check("truncation-lemma", m, kOnes, fam(6)), std::invalid_argument);
    CHECK_THROWS_AS(run_check("weight-transfer", m, kOnes, fam(8)), std::invalid_argument);
}

TEST_CASE("greedy characterization bounds hold exactly on lp(2)") {
    NormModel m(SpaceNode::lp(2.0), 8);
    for (const char* id : {"greedy-char-upper", "almost-greedy-char-upper"}) {
        CheckReport r = run_check(id, m, kOnes, fam(8));
        CAPTURE(id);
        CHECK(r.mode == CheckMode::Exact);
        CHECK(r.all_pass);
        CHECK(r.instance_count > 0);
        CHECK(r.max_ratio <= 1.0 + 1e-9);
    }
}

TEST_CASE("truncation bound is exact on unconditional models") {
    for (double p : {1.0, 3.0}) {
        NormModel m(SpaceNode::lp(p), 8);
        CheckReport r = run_check("truncation-lemma", m, kOnes, fam(8));
        CHECK(r.mode == CheckMode::Exact);
        CHECK(r.all_pass);
        CHECK(r.constants.count("Cq") == 1);
        CHECK(r.constants.at("Cq") == 1.0);
    }
}

TEST_CASE("partially greedy bounds on lp(1)") {
    NormModel m(SpaceNode::lp(1.0), 8);
    CheckReport fwd = run_check("partially-greedy-forward", m, kOnes, fam(8));
    CHECK(fwd.mode == CheckMode::Exact);
    CHECK(fwd.all_pass);
    CheckReport rev = run_check("partially-greedy-reverse", m, kOnes, fam(8));
    CHECK(rev.mode == CheckMode::Estimate);
    CHECK(rev.all_pass);
    CHECK(rev.instance_count > 0);
}

TEST_CASE("property chain on lp(2) records its constants") {
    NormModel m(SpaceNode::lp(2.0), 8);
    CheckReport a = run_check("propA-implies-superdem", m, kOnes, fam(8));
    CHECK(a.all_pass);
    CHECK(a.constants.count("Ca") == 1);
    CheckReport c = run_check("propC-superdem-implies-propA", m, kOnes, fam(8));
    CHECK(c.all_pass);
    CHECK(c.constants.count("Cs") == 1);
}

TEST_CASE("property chain holds on the paired basis in estimate mode") {
    NormModel m(SpaceNode::ebasis(), 8);
    for (const char* id : {"propA-implies-superdem", "propC-superdem-implies-propA"}) {
        CheckReport r = run_check(id, m, kOnes, fam(8));
        CAPTURE(id);
        CHECK(r.mode == CheckMode::Estimate);
        CHECK(r.all_pass);
    }
}

TEST_CASE("weight transfer carries the constant with the explicit factor") {
    NormModel m(SpaceNode::lp(2.0), 8);
    Weight w = Weight::explicit_list({1.0, 3.0, 2.0, 1.5, 2.5, 1.0, 3.0, 2.0}, 1.0);
    CheckOptions opts;
    opts.base_weight = kOnes;
    CheckReport r = run_check("weight-transfer", m, w, fam(8), opts);
    CHECK(r.mode == CheckMode::Exact);
    CHECK(r.all_pass);
    REQUIRE(r.constants.count("K") == 1);
    CHECK(std::fabs(r.constants.at("K") - 9.0) <= 1e-12 * 9.0);
    CHECK(r.constants.at("a") == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(r.constants.at("b") == 1.0);
}

TEST_CASE("embedding lemmas hold on lp(1) and record the route") {
    NormModel m(SpaceNode::lp(1.0), 8);
    CheckReport part1 = run_check("part1-lemma", m, kOnes, fam(8));
    CHECK(part1.all_pass);
    CHECK(part1.instance_count > 0);
    CheckReport c0 = run_check("find-c0-bound", m, kOnes, fam(8));
    CHECK(c0.all_pass);
    CHECK(c0.instance_count > 0);
}

TEST_CASE("the four formulations stay equivalent on lp(2)") {
    NormModel m(SpaceNode::lp(2.0), 8);
    CheckReport r = run_check("propA-formulations", m, kOnes, fam(8));
    CHECK(r.all_pass);
    for (const char* key : {"Ca_a", "Ca_b", "Ca_c", "Ca_d"}) {
        CAPTURE(key);
        CHECK(r.constants.count(key) == 1);
        CHECK(r.constants.at(key) >= 1.0 - 1e-12);
    }
}

TEST_CASE("semi-greedy implication is reported qualitatively") {
    NormModel m(SpaceNode::lp(2.0), 8);
    CheckReport r = run_check("semi-greedy-implies-propA", m, kOnes, fam(8));
    CHECK(r.mode == CheckMode::Qualitative);
    CHECK(r.all_pass);
    CHECK(!r.notes.empty());
}

TEST_CASE("every instance carries a usable ratio") {
    NormModel m(SpaceNode::schreier(), 8);
    CheckReport r = run_check("truncation-lemma", m, kOnes, fam(8));
    CHECK(r.all_pass);
    for (const auto& inst : r.instances) {
        CHECK(inst.rhs > 0.0);
        CHECK(inst.ratio == doctest::Approx(inst.lhs / inst.rhs).epsilon(1e-12));
        CHECK(!inst.witness.empty());
    }
}
