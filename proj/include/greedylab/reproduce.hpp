#pragma once

#include <string>
#include <vector>

#include "greedylab/report.hpp"

namespace greedylab {

// Named frozen experiments.  Every parameter, seed, and pass criterion is
// baked into the binary; the report echoes the frozen config and all_pass is
// the conjunction of the asserted criteria.
const std::vector<std::string>& reproduction_names();

bool is_reproduction(const std::string& name);

Report run_reproduction(const std::string& name);

}  // namespace greedylab
