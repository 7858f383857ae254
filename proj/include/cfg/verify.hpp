#pragma once

#include "cfg/combinat.hpp"

#include <vector>

namespace cfg {

/// Identifiers accepted by run_suite, in execution order (excludes "all").
const std::vector<std::string>& suite_names();

/// Run one named verification suite ("all" runs every suite).  max_n bounds
/// the exhaustive enumerations; order bounds the series identities.
Report run_suite(const std::string& id, int max_n = 7, int order = 10);

}  // namespace cfg
