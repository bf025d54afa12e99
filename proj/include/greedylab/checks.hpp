#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "greedylab/constants.hpp"
#include "greedylab/spaces.hpp"
#include "greedylab/types.hpp"
#include "greedylab/weights.hpp"

namespace greedylab {

// Exact: every constant in the bound is analytically known for the model, so
// all_pass is a genuine verdict.  Estimate: constants come from family
// searches and the report is for human review.  Qualitative: no numeric
// inequality is asserted, only a boundedness trend.
enum class CheckMode { Exact, Estimate, Qualitative };

struct CheckInstance {
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;  // lhs / rhs
    bool pass = true;
    std::string witness;
};

struct CheckReport {
    std::string check_id;
    CheckMode mode = CheckMode::Estimate;
    bool all_pass = true;
    double max_ratio = 0.0;
    long long instance_count = 0;
    // Worst instances by ratio plus every failure, up to a cap.
    std::vector<CheckInstance> instances;
    bool instances_truncated = false;
    bool budget_exhausted = false;
    bool greedy_cap_hit = false;
    std::map<std::string, double> constants;
    std::vector<std::string> notes;
};

struct CheckOptions {
    // weight-transfer: the weight the Property (A) constant is carried over
    // from; the check's main weight is the target.
    std::optional<Weight> base_weight;
};

const std::vector<std::string>& check_ids();

CheckReport run_check(const std::string& check_id, const NormModel& model,
                      const Weight& w, const SearchFamily& family,
                      const CheckOptions& opts = {});

}  // namespace greedylab
