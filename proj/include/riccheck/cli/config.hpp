#pragma once

#include <string>

#include "riccheck/gallery/gallery.hpp"

namespace riccheck::cli {

// Parses the scenario config text format (documented in the README) into a
// fully assembled Scenario. origin names the source in error messages.
// Throws usage_error on malformed input.
gallery::Scenario parse_scenario_text(const std::string& text,
                                      const std::string& origin = "<config>");
gallery::Scenario parse_scenario_file(const std::string& path);

}  // namespace riccheck::cli
