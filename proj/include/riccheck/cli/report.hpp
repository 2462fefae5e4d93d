#pragma once

#include <string>
#include <vector>

#include "riccheck/cli/runner.hpp"

namespace riccheck::cli {

// Renderers return the complete document; numbers are printed with enough
// digits to round-trip, so equal runs give byte-identical output.
std::string render_text(const RunReport& rep, const RunConfig& cfg);
std::string render_csv(const RunReport& rep, const RunConfig& cfg);
std::string render_json(const RunReport& rep, const RunConfig& cfg);

std::string render_identities_text(const std::vector<IdentityLine>& lines);
std::string render_identities_json(const std::vector<IdentityLine>& lines);

std::string render_sweep_text(const std::vector<SweepRow>& rows, const std::string& param);
std::string render_sweep_csv(const std::vector<SweepRow>& rows, const std::string& param);
std::string render_sweep_json(const std::vector<SweepRow>& rows, const std::string& scenario,
                              const std::string& checker, const std::string& param);

// Writes to the path, or stdout when the path is empty.
void write_output(const std::string& content, const std::string& out_path);

}  // namespace riccheck::cli
