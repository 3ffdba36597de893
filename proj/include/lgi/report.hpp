#pragma once

#include <string>

#include "lgi/registry.hpp"

namespace lgi::report {

// 15 significant digits, the fixed precision of every emitted number.
std::string fmt15(double v);
double round15(double v);

// timing = false drops every wall-time field so reruns diff cleanly.
std::string to_json(const registry::Report& rep, bool timing = true);
std::string to_markdown(const registry::Report& rep, bool timing = true);

std::string section_title(int section);

}  // namespace lgi::report
