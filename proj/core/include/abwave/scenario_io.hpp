#pragma once

#include <string>

#include "abwave/scenario.hpp"

namespace abwave {

// Sectioned key-value scenario files: [source], [apertures], [field],
// [screen], [model]; `#` comments; case-sensitive keys; unknown keys are
// errors.  Errors cite line numbers.  The grammar is documented in the
// project README and by export_scenario, whose output is a parse fixed
// point.
Scenario parse_scenario(const std::string& text,
                        const std::string& fallback_name = "scenario");

std::string export_scenario(const Scenario& s);

}  // namespace abwave
