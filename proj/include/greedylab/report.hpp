#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "greedylab/checks.hpp"
#include "greedylab/constants.hpp"

namespace greedylab {

inline constexpr int kFormatVersion = 1;

// Fixed-point rendering with 12 digits after the point; used for stdout
// values and every CSV cell so that report bodies are byte-stable.
std::string format12(double v);

// A named rectangular table of pre-rendered cells.  Tables never carry
// wall-clock data, so identical runs serialize identically.
struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

struct Report {
    std::string title;
    nlohmann::json config;            // verbatim echo of the run configuration
    std::vector<nlohmann::json> items;
    std::vector<Table> tables;
    std::vector<std::string> notes;
    bool all_pass = true;
    bool budget_exhausted = false;
    double wall_seconds = 0.0;  // excluded from the reproducibility claim
};

nlohmann::json witness_to_json(const Witness& w);
nlohmann::json estimate_to_json(const Estimate& e);
nlohmann::json check_to_json(const CheckReport& r);
nlohmann::json democracy_to_json(const DemocracyTable& t);
nlohmann::json report_to_json(const Report& r);

// RFC-4180 style; first line is "# greedylab csv format_version N".
std::string table_to_csv(const Table& t);

// Writes PREFIX.json plus PREFIX.<table>.csv per table; returns the paths.
std::vector<std::string> write_report(const Report& r, const std::string& out_prefix);

}  // namespace greedylab
