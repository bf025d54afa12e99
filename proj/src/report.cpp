#include "greedylab/report.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace greedylab {

using nlohmann::json;

std::string format12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", v);
    return buf;
}

json witness_to_json(const Witness& w) {
    json j;
    j["x"] = [&] {
        json v;
        v["window"] = w.x.window();
        json cs = json::array();
        for (int n = 1; n <= w.x.window(); ++n) cs.push_back(w.x.at(n));
        v["coeffs"] = std::move(cs);
        return v;
    }();
    if (!w.A.empty()) j["A"] = w.A.elems();
    if (!w.B.empty()) j["B"] = w.B.elems();
    if (w.eps.size() > 0) j["eps"] = w.eps.signs;
    if (w.eta.size() > 0) j["eta"] = w.eta.signs;
    if (w.m != 0) j["m"] = w.m;
    if (w.t != 0.0) j["t"] = w.t;
    j["numerator"] = w.numerator;
    j["denominator"] = w.denominator;
    j["formula"] = w.formula;
    return j;
}

json estimate_to_json(const Estimate& e) {
    json j;
    j["item"] = "estimate";
    j["name"] = e.name;
    j["value"] = e.value;
    j["instance_count"] = e.instance_count;
    j["truncated"] = e.truncated;
    j["budget_exhausted"] = e.budget_exhausted;
    j["skipped_unsupported"] = e.skipped_unsupported;
    if (!e.skipped_unsupported) j["witness"] = witness_to_json(e.witness);
    return j;
}

json check_to_json(const CheckReport& r) {
    json j;
    j["item"] = "check";
    j["check_id"] = r.check_id;
    switch (r.mode) {
        case CheckMode::Exact: j["mode"] = "exact"; break;
        case CheckMode::Estimate: j["mode"] = "estimate"; break;
        case CheckMode::Qualitative: j["mode"] = "qualitative"; break;
    }
    j["all_pass"] = r.all_pass;
    j["max_ratio"] = r.max_ratio;
    j["instance_count"] = r.instance_count;
    j["instances_truncated"] = r.instances_truncated;
    j["budget_exhausted"] = r.budget_exhausted;
    j["greedy_cap_hit"] = r.greedy_cap_hit;
    if (!r.constants.empty()) j["constants"] = r.constants;
    if (!r.notes.empty()) j["notes"] = r.notes;
    json inst = json::array();
    for (const CheckInstance& c : r.instances) {
        json e;
        e["lhs"] = c.lhs;
        e["rhs"] = c.rhs;
        e["ratio"] = c.ratio;
        e["pass"] = c.pass;
        e["witness"] = c.witness;
        inst.push_back(std::move(e));
    }
    j["instances"] = std::move(inst);
    return j;
}

json democracy_to_json(const DemocracyTable& t) {
    json j;
    j["item"] = "democracy";
    j["upper"] = t.upper;
    j["lower"] = t.lower;
    j["full_signs"] = t.full_signs;
    j["evaluations"] = t.evaluations;
    return j;
}

json report_to_json(const Report& r) {
    json j;
    j["format_version"] = kFormatVersion;
    j["title"] = r.title;
    j["config"] = r.config;
    j["items"] = r.items;
    json tables = json::array();
    for (const Table& t : r.tables) {
        json tj;
        tj["name"] = t.name;
        tj["columns"] = t.columns;
        tj["rows"] = t.rows;
        tables.push_back(std::move(tj));
    }
    j["tables"] = std::move(tables);
    if (!r.notes.empty()) j["notes"] = r.notes;
    j["all_pass"] = r.all_pass;
    j["budget_exhausted"] = r.budget_exhausted;
    j["wall_seconds"] = r.wall_seconds;
    return j;
}

namespace {

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string table_to_csv(const Table& t) {
    std::string out = "# greedylab csv format_version " + std::to_string(kFormatVersion) + "\n";
    for (size_t i = 0; i < t.columns.size(); ++i) {
        if (i) out += ',';
        out += csv_cell(t.columns[i]);
    }
    out += '\n';
    for (const auto& row : t.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += csv_cell(row[i]);
        }
        out += '\n';
    }
    return out;
}

std::vector<std::string> write_report(const Report& r, const std::string& out_prefix) {
    std::vector<std::string> paths;
    {
        std::string path = out_prefix + ".json";
        std::ofstream f(path);
        if (!f) throw std::runtime_error("cannot write " + path);
        f << report_to_json(r).dump(2) << '\n';
        paths.push_back(path);
    }
    for (const Table& t : r.tables) {
        std::string path = out_prefix + "." + t.name + ".csv";
        std::ofstream f(path);
        if (!f) throw std::runtime_error("cannot write " + path);
        f << table_to_csv(t);
        paths.push_back(path);
    }
    return paths;
}

}  // namespace greedylab
