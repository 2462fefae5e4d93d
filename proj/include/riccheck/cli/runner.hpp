#pragma once

#include <map>
#include <string>
#include <vector>

#include "riccheck/gallery/gallery.hpp"

namespace riccheck::cli {

// One residual evaluation. domain_error marks points where the computation
// threw (metric degenerate, factor nonpositive, ...); such points make the
// whole check inconclusive rather than passed or failed.
struct PointResult {
  geom::ChartPoint p;
  double residual = 0.0;
  bool domain_error = false;
  std::string error;
};

struct CheckOutcome {
  std::string scenario_id;
  std::string checker;
  bool declared = false;  // expectation came from the scenario itself
  bool expect_pass = true;
  double threshold = 0.0;  // tol when expect_pass, floor otherwise
  std::vector<PointResult> points;
  double max_residual = 0.0;
  int errors = 0;
  std::string status;  // pass | fail | inconclusive
  bool satisfied = false;
  std::map<std::string, double> diagnostics;  // fitted constants etc.
};

struct RunConfig {
  std::vector<std::string> scenario_ids;
  std::vector<std::string> scenario_files;
  std::vector<std::string> checkers;  // empty: run the declared expectations
  int points = 8;
  unsigned seed = 1;
  double tol = -1.0;  // > 0 overrides the pass tolerance
  bool require_pass = false;
  std::string format = "text";  // text | csv | json
  std::string out;              // empty: stdout
};

struct RunReport {
  std::vector<CheckOutcome> outcomes;
  int expectations = 0;
  int satisfied = 0;
  int inconclusive = 0;
  int exit_code = 0;  // 0 ok, 1 unmet expectation, 3 inconclusive
};

// All checker names, in reporting order.
const std::vector<std::string>& checker_ids();
bool is_checker(const std::string& name);

// Whether the scenario carries the bundles this checker consumes.
bool checker_applies(const std::string& checker, const gallery::Scenario& s);

// Evaluates one checker over sampled points. The expectation supplies the
// thresholds; declared marks whether it came from the scenario catalog.
CheckOutcome run_checker(const gallery::Scenario& s, const std::string& checker,
                         const gallery::Expectation& e, bool declared, int points, unsigned seed);

// Runs scenarios x checkers per the config. Throws usage_error for unknown
// scenarios, unknown checkers, or checkers that do not apply.
RunReport run_verify(const RunConfig& cfg);

// Exact symbolic identities replayed against their stored forms.
struct IdentityLine {
  std::string label;
  std::string value;
  bool ok = false;
};
std::vector<IdentityLine> identity_suite();

// Residual of one checker while a scalar parameter (lambda, nu, a) moves
// over an inclusive grid.
struct SweepRow {
  double value = 0.0;
  double max_residual = 0.0;
  std::string status;
};
std::vector<SweepRow> run_sweep(const std::string& scenario_id, const std::string& checker,
                                const std::string& param, double from, double to, int steps,
                                int points, unsigned seed, double tol);

}  // namespace riccheck::cli
