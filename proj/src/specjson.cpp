#include "greedylab/specjson.hpp"

#include <cmath>
#include <stdexcept>

namespace greedylab {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument("spec json: " + msg); }

const json& field(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
    return *it;
}

double num_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number()) bad(std::string("field \"") + key + "\" must be a number");
    return v.get<double>();
}

std::string kind_of(const json& j) {
    if (!j.is_object()) bad("expected an object with a \"kind\" field");
    const json& k = field(j, "kind");
    if (!k.is_string()) bad("\"kind\" must be a string");
    return k.get<std::string>();
}

}  // namespace

double pq_from_json(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "inf") return kInf;
        bad("exponent string must be \"inf\"");
    }
    if (!j.is_number()) bad("exponent must be a number or \"inf\"");
    double v = j.get<double>();
    if (!(v >= 1.0)) bad("exponent must be >= 1");
    return v;
}

json pq_to_json(double v) {
    if (std::isinf(v)) return json("inf");
    return json(v);
}

Weight weight_from_json(const json& j) {
    std::string kind = kind_of(j);
    if (kind == "constant") return Weight::constant(num_field(j, "c"));
    if (kind == "power") return Weight::power(num_field(j, "theta"));
    if (kind == "geometric") return Weight::geometric(num_field(j, "r"));
    if (kind == "explicit") {
        const json& vals = field(j, "values");
        if (!vals.is_array()) bad("\"values\" must be an array");
        std::vector<double> values;
        for (const json& v : vals) {
            if (!v.is_number()) bad("\"values\" entries must be numbers");
            values.push_back(v.get<double>());
        }
        return Weight::explicit_list(std::move(values), num_field(j, "tail"));
    }
    bad("unknown weight kind \"" + kind + "\"");
}

json weight_to_json(const Weight& w) {
    json j;
    switch (w.kind()) {
        case Weight::Kind::Constant:
            j["kind"] = "constant";
            j["c"] = w.param();
            break;
        case Weight::Kind::Power:
            j["kind"] = "power";
            j["theta"] = w.param();
            break;
        case Weight::Kind::Geometric:
            j["kind"] = "geometric";
            j["r"] = w.param();
            break;
        case Weight::Kind::Explicit:
            j["kind"] = "explicit";
            j["values"] = w.values();
            j["tail"] = w.tail();
            break;
    }
    return j;
}

SpaceNode space_from_json(const json& j) {
    std::string kind = kind_of(j);
    SpaceNode node;
    if (kind == "lp") {
        node = SpaceNode::lp(pq_from_json(field(j, "p")));
    } else if (kind == "weighted_lp") {
        node = SpaceNode::weighted_lp(pq_from_json(field(j, "p")),
                                      weight_from_json(field(j, "weight")));
    } else if (kind == "dsum_inf" || kind == "dsum_l1" || kind == "max_of") {
        const json& parts = field(j, "parts");
        if (!parts.is_array() || parts.empty()) bad("\"parts\" must be a nonempty array");
        std::vector<SpaceNode> out;
        for (const json& p : parts) out.push_back(space_from_json(p));
        if (kind == "dsum_inf") node = SpaceNode::dsum_inf(std::move(out));
        else if (kind == "dsum_l1") node = SpaceNode::dsum_l1(std::move(out));
        else node = SpaceNode::max_of(std::move(out));
    } else if (kind == "schreier") {
        node = SpaceNode::schreier();
    } else if (kind == "james") {
        node = SpaceNode::james(pq_from_json(field(j, "q")));
    } else if (kind == "f1q") {
        const json& lv = field(j, "levels");
        if (!lv.is_array()) bad("\"levels\" must be an array");
        std::vector<int> levels;
        for (const json& v : lv) {
            if (!v.is_number_integer()) bad("\"levels\" entries must be integers");
            levels.push_back(v.get<int>());
        }
        node = SpaceNode::f1q(pq_from_json(field(j, "q")), std::move(levels));
    } else if (kind == "rosenthal_woo") {
        node = SpaceNode::rosenthal_woo(pq_from_json(field(j, "q")), pq_from_json(field(j, "p")),
                                        weight_from_json(field(j, "weight")));
    } else if (kind == "rw_summing") {
        node = SpaceNode::rw_summing(pq_from_json(field(j, "q")),
                                     weight_from_json(field(j, "weight")));
    } else if (kind == "ebasis") {
        node = SpaceNode::ebasis();
    } else {
        bad("unknown space kind \"" + kind + "\"");
    }
    if (auto it = j.find("dim"); it != j.end()) {
        if (!it->is_number_integer()) bad("\"dim\" must be an integer");
        node.dim = it->get<int>();
        if (node.dim < 0) bad("\"dim\" must be >= 0");
    }
    return node;
}

json space_to_json(const SpaceNode& n) {
    json j;
    switch (n.kind) {
        case SpaceNode::Kind::Lp:
            j["kind"] = "lp";
            j["p"] = pq_to_json(n.p);
            break;
        case SpaceNode::Kind::WeightedLp:
            j["kind"] = "weighted_lp";
            j["p"] = pq_to_json(n.p);
            j["weight"] = weight_to_json(n.weight);
            break;
        case SpaceNode::Kind::DsumInf:
        case SpaceNode::Kind::DsumL1:
        case SpaceNode::Kind::MaxOf: {
            j["kind"] = n.kind == SpaceNode::Kind::DsumInf  ? "dsum_inf"
                        : n.kind == SpaceNode::Kind::DsumL1 ? "dsum_l1"
                                                            : "max_of";
            json parts = json::array();
            for (const SpaceNode& p : n.parts) parts.push_back(space_to_json(p));
            j["parts"] = std::move(parts);
            break;
        }
        case SpaceNode::Kind::Schreier:
            j["kind"] = "schreier";
            break;
        case SpaceNode::Kind::James:
            j["kind"] = "james";
            j["q"] = pq_to_json(n.q);
            break;
        case SpaceNode::Kind::F1q:
            j["kind"] = "f1q";
            j["q"] = pq_to_json(n.q);
            j["levels"] = n.levels;
            break;
        case SpaceNode::Kind::RosenthalWoo:
            j["kind"] = "rosenthal_woo";
            j["q"] = pq_to_json(n.q);
            j["p"] = pq_to_json(n.p);
            j["weight"] = weight_to_json(n.weight);
            break;
        case SpaceNode::Kind::RwSumming:
            j["kind"] = "rw_summing";
            j["q"] = pq_to_json(n.q);
            j["weight"] = weight_to_json(n.weight);
            break;
        case SpaceNode::Kind::Ebasis:
            j["kind"] = "ebasis";
            break;
    }
    if (n.dim != 0) j["dim"] = n.dim;
    return j;
}

CoefVec vector_from_json(const json& j, int window) {
    std::vector<double> coeffs;
    if (j.is_array()) {
        for (const json& v : j) {
            if (!v.is_number()) bad("vector entries must be numbers");
            coeffs.push_back(v.get<double>());
        }
    } else if (j.is_object()) {
        const json& cs = field(j, "coeffs");
        if (!cs.is_array()) bad("\"coeffs\" must be an array");
        for (const json& v : cs) {
            if (!v.is_number()) bad("vector entries must be numbers");
            coeffs.push_back(v.get<double>());
        }
        if (auto it = j.find("window"); it != j.end()) {
            if (!it->is_number_integer()) bad("vector \"window\" must be an integer");
            window = it->get<int>();
        }
    } else {
        bad("vector must be an array or {\"coeffs\", \"window\"}");
    }
    if (window > 0) {
        if (static_cast<int>(coeffs.size()) > window)
            bad("vector longer than its window");
        coeffs.resize(static_cast<size_t>(window), 0.0);
    }
    return CoefVec::from_coeffs(std::move(coeffs));
}

json vector_to_json(const CoefVec& x) {
    json j;
    j["window"] = x.window();
    json cs = json::array();
    for (int n = 1; n <= x.window(); ++n) cs.push_back(x.at(n));
    j["coeffs"] = std::move(cs);
    return j;
}

SearchFamily family_from_json(const json& j, int window) {
    SearchFamily f;
    f.window = window;
    if (!j.is_object()) bad("family must be an object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& key = it.key();
        const json& v = it.value();
        if (key == "grid") {
            if (!v.is_array() || v.empty()) bad("family \"grid\" must be a nonempty array");
            f.grid.clear();
            for (const json& g : v) {
                if (!g.is_number()) bad("family \"grid\" entries must be numbers");
                f.grid.push_back(g.get<double>());
            }
        } else if (key == "max_support") {
            f.max_support = v.get<int>();
        } else if (key == "random_count") {
            f.random_count = v.get<int>();
        } else if (key == "seed") {
            f.seed = v.get<unsigned long long>();
        } else if (key == "pair_size_cap") {
            f.pair_size_cap = v.get<int>();
        } else if (key == "sign_cap") {
            f.sign_cap = v.get<int>();
        } else if (key == "greedy_cap") {
            f.greedy_cap = v.get<int>();
        } else if (key == "sigma_budget") {
            f.sigma_budget = v.get<long long>();
        } else if (key == "min_tol") {
            f.min_tol = v.get<double>();
        } else if (key == "window") {
            f.window = v.get<int>();
        } else {
            bad("unknown family field \"" + key + "\"");
        }
    }
    return f;
}

json family_to_json(const SearchFamily& f) {
    json j;
    j["window"] = f.window;
    j["grid"] = f.grid;
    j["max_support"] = f.max_support;
    j["random_count"] = f.random_count;
    j["seed"] = f.seed;
    j["pair_size_cap"] = f.pair_size_cap;
    j["sign_cap"] = f.sign_cap;
    j["greedy_cap"] = f.greedy_cap;
    j["sigma_budget"] = f.sigma_budget;
    j["min_tol"] = f.min_tol;
    return j;
}

ExperimentConfig config_from_json(const json& j) {
    if (!j.is_object()) bad("config must be an object");
    ExperimentConfig c;
    c.space = space_from_json(field(j, "space"));
    if (auto it = j.find("weight"); it != j.end()) c.weight = weight_from_json(*it);
    if (auto it = j.find("base_weight"); it != j.end()) c.base_weight = weight_from_json(*it);
    if (auto it = j.find("window"); it != j.end()) {
        if (!it->is_number_integer()) bad("\"window\" must be an integer");
        c.window = it->get<int>();
    }
    if (c.window < 1) bad("\"window\" must be >= 1");
    if (auto it = j.find("family"); it != j.end())
        c.family = family_from_json(*it, c.window);
    else
        c.family.window = c.window;
    auto names = [&](const char* key, std::vector<std::string>& out) {
        auto it = j.find(key);
        if (it == j.end()) return;
        if (!it->is_array()) bad(std::string("\"") + key + "\" must be an array");
        for (const json& v : *it) {
            if (!v.is_string()) bad(std::string("\"") + key + "\" entries must be strings");
            out.push_back(v.get<std::string>());
        }
    };
    names("estimates", c.estimates);
    names("checks", c.checks);
    if (auto it = j.find("m"); it != j.end()) c.m = it->get<int>();
    if (auto it = j.find("democracy"); it != j.end()) {
        if (!it->is_object()) bad("\"democracy\" must be an object");
        int max_m = field(*it, "max_m").get<int>();
        int sign_cap = it->value("sign_cap", 0);
        c.democracy = std::make_pair(max_m, sign_cap);
    }
    return c;
}

json config_to_json(const ExperimentConfig& c) {
    json j;
    j["space"] = space_to_json(c.space);
    j["weight"] = weight_to_json(c.weight);
    if (c.base_weight) j["base_weight"] = weight_to_json(*c.base_weight);
    j["window"] = c.window;
    j["family"] = family_to_json(c.family);
    if (!c.estimates.empty()) j["estimates"] = c.estimates;
    if (!c.checks.empty()) j["checks"] = c.checks;
    if (c.m != 0) j["m"] = c.m;
    if (c.democracy) {
        json d;
        d["max_m"] = c.democracy->first;
        d["sign_cap"] = c.democracy->second;
        j["democracy"] = d;
    }
    return j;
}

}  // namespace greedylab
