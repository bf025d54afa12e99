#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "greedylab/constants.hpp"
#include "greedylab/spaces.hpp"
#include "greedylab/types.hpp"
#include "greedylab/weights.hpp"

namespace greedylab {

// JSON grammar for the domain objects.  p and q accept a number or the
// string "inf"; weights and space nodes are one object per tree node.

double pq_from_json(const nlohmann::json& j);
nlohmann::json pq_to_json(double v);

Weight weight_from_json(const nlohmann::json& j);
nlohmann::json weight_to_json(const Weight& w);

SpaceNode space_from_json(const nlohmann::json& j);
nlohmann::json space_to_json(const SpaceNode& n);

// Dense array (index 1 first) or {"coeffs": [...], "window": W}.  window = 0
// infers the window from the payload.
CoefVec vector_from_json(const nlohmann::json& j, int window = 0);
nlohmann::json vector_to_json(const CoefVec& x);

// Missing fields keep their defaults; window is stamped by the caller.
SearchFamily family_from_json(const nlohmann::json& j, int window);
nlohmann::json family_to_json(const SearchFamily& f);

// One experiment: a model, weights, a family, and the requested items.
struct ExperimentConfig {
    SpaceNode space;
    Weight weight = Weight::constant(1.0);
    std::optional<Weight> base_weight;
    int window = 12;
    SearchFamily family;
    std::vector<std::string> estimates;
    std::vector<std::string> checks;
    int m = 0;  // D(m)/d(m) argument
    std::optional<std::pair<int, int>> democracy;  // (max_m, sign_cap)
};

ExperimentConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const ExperimentConfig& c);

}  // namespace greedylab
