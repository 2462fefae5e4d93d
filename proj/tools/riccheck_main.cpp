#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "json.hpp"

#include "riccheck/cli/report.hpp"
#include "riccheck/cli/runner.hpp"
#include "riccheck/errors.hpp"
#include "riccheck/gallery/gallery.hpp"

namespace {

using riccheck::usage_error;

void check_format(const std::string& fmt, bool allow_csv) {
  if (fmt == "text" || fmt == "json") return;
  if (allow_csv && fmt == "csv") return;
  throw usage_error("unknown format: " + fmt);
}

int do_list(const std::string& format, bool verbose, const std::string& out) {
  check_format(format, false);
  std::string doc;
  if (format == "text") {
    std::string text;
    for (const auto& id : riccheck::gallery::catalog_ids()) {
      const auto& s = riccheck::gallery::build(id);
      text += id;
      for (std::size_t i = id.size(); i < 28; ++i) text += ' ';
      text += s.kind;
      for (std::size_t i = s.kind.size(); i < 20; ++i) text += ' ';
      text += s.summary + "\n";
      if (verbose) {
        text += "---\n" + s.source;
        if (!s.source.empty() && s.source.back() != '\n') text += '\n';
        text += "---\n";
      }
    }
    doc = text;
  } else {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& id : riccheck::gallery::catalog_ids()) {
      const auto& s = riccheck::gallery::build(id);
      nlohmann::ordered_json item;
      item["id"] = s.id;
      item["kind"] = s.kind;
      item["dim"] = s.dim;
      item["summary"] = s.summary;
      nlohmann::ordered_json checks = nlohmann::ordered_json::array();
      for (const auto& e : s.expected) checks.push_back(e.checker);
      item["checkers"] = checks;
      if (verbose) item["source"] = s.source;
      arr.push_back(item);
    }
    doc = arr.dump(2) + "\n";
  }
  riccheck::cli::write_output(doc, out);
  return 0;
}

int do_verify(const riccheck::cli::RunConfig& cfg) {
  check_format(cfg.format, true);
  riccheck::cli::RunReport rep = riccheck::cli::run_verify(cfg);
  std::string doc;
  if (cfg.format == "text")
    doc = riccheck::cli::render_text(rep, cfg);
  else if (cfg.format == "csv")
    doc = riccheck::cli::render_csv(rep, cfg);
  else
    doc = riccheck::cli::render_json(rep, cfg);
  riccheck::cli::write_output(doc, cfg.out);
  return rep.exit_code;
}

int do_identities(const std::string& format, const std::string& out) {
  check_format(format, false);
  auto lines = riccheck::cli::identity_suite();
  std::string doc = format == "text" ? riccheck::cli::render_identities_text(lines)
                                     : riccheck::cli::render_identities_json(lines);
  riccheck::cli::write_output(doc, out);
  for (const auto& l : lines)
    if (!l.ok) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"curvature residual checks for rescaled and warped soliton metrics"};
  app.require_subcommand(1);

  // list
  auto* list_cmd = app.add_subcommand("list", "list the scenario catalog");
  std::string list_format = "text", list_out;
  bool list_verbose = false;
  list_cmd->add_option("--format", list_format, "text or json");
  list_cmd->add_flag("--verbose", list_verbose, "include scenario sources");
  list_cmd->add_option("--out", list_out, "write to a file instead of stdout");

  // verify / report share their options
  riccheck::cli::RunConfig vcfg;
  auto* verify_cmd = app.add_subcommand("verify", "evaluate checkers over sampled points");
  verify_cmd->add_option("--scenario", vcfg.scenario_ids, "catalog scenario id (repeatable)");
  verify_cmd->add_option("--scenario-file", vcfg.scenario_files,
                         "scenario config file (repeatable)");
  verify_cmd->add_option("--checker", vcfg.checkers,
                         "checker to run (repeatable; default: declared expectations)");
  verify_cmd->add_option("--points", vcfg.points, "sample points per check");
  verify_cmd->add_option("--seed", vcfg.seed, "sampling seed");
  verify_cmd->add_option("--tol", vcfg.tol, "override pass tolerance");
  verify_cmd->add_option("--format", vcfg.format, "text, csv or json");
  verify_cmd->add_option("--out", vcfg.out, "write to a file instead of stdout");
  verify_cmd->add_flag("--require-pass", vcfg.require_pass,
                       "treat every expectation as a pass expectation");

  riccheck::cli::RunConfig rcfg;
  rcfg.format = "json";
  auto* report_cmd = app.add_subcommand("report", "verify and write a machine-readable report");
  report_cmd->add_option("--scenario", rcfg.scenario_ids, "catalog scenario id (repeatable)");
  report_cmd->add_option("--scenario-file", rcfg.scenario_files,
                         "scenario config file (repeatable)");
  report_cmd->add_option("--checker", rcfg.checkers, "checker to run (repeatable)");
  report_cmd->add_option("--points", rcfg.points, "sample points per check");
  report_cmd->add_option("--seed", rcfg.seed, "sampling seed");
  report_cmd->add_option("--tol", rcfg.tol, "override pass tolerance");
  report_cmd->add_option("--format", rcfg.format, "json or csv");
  report_cmd->add_option("--out", rcfg.out, "output file")->required();
  report_cmd->add_flag("--require-pass", rcfg.require_pass,
                       "treat every expectation as a pass expectation");

  // identities
  auto* ident_cmd = app.add_subcommand("identities", "replay the exact symbolic identities");
  std::string ident_format = "text", ident_out;
  ident_cmd->add_option("--format", ident_format, "text or json");
  ident_cmd->add_option("--out", ident_out, "write to a file instead of stdout");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "move a constant and track one checker");
  std::string sw_scenario, sw_checker, sw_param = "lambda", sw_format = "text", sw_out;
  double sw_from = 0.0, sw_to = 1.0;
  int sw_steps = 11, sw_points = 4;
  unsigned sw_seed = 1;
  double sw_tol = -1.0;
  sweep_cmd->add_option("--scenario", sw_scenario, "catalog scenario id")->required();
  sweep_cmd->add_option("--checker", sw_checker, "checker to track")->required();
  sweep_cmd->add_option("--param", sw_param, "lambda, nu or a");
  sweep_cmd->add_option("--from", sw_from, "first parameter value");
  sweep_cmd->add_option("--to", sw_to, "last parameter value");
  sweep_cmd->add_option("--steps", sw_steps, "number of grid values");
  sweep_cmd->add_option("--points", sw_points, "sample points per value");
  sweep_cmd->add_option("--seed", sw_seed, "sampling seed");
  sweep_cmd->add_option("--tol", sw_tol, "pass tolerance for the status column");
  sweep_cmd->add_option("--format", sw_format, "text, csv or json");
  sweep_cmd->add_option("--out", sw_out, "write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (list_cmd->parsed()) return do_list(list_format, list_verbose, list_out);
    if (verify_cmd->parsed()) return do_verify(vcfg);
    if (report_cmd->parsed()) return do_verify(rcfg);
    if (ident_cmd->parsed()) return do_identities(ident_format, ident_out);
    if (sweep_cmd->parsed()) {
      check_format(sw_format, true);
      auto rows = riccheck::cli::run_sweep(sw_scenario, sw_checker, sw_param, sw_from, sw_to,
                                           sw_steps, sw_points, sw_seed, sw_tol);
      std::string doc;
      if (sw_format == "text")
        doc = riccheck::cli::render_sweep_text(rows, sw_param);
      else if (sw_format == "csv")
        doc = riccheck::cli::render_sweep_csv(rows, sw_param);
      else
        doc = riccheck::cli::render_sweep_json(rows, sw_scenario, sw_checker, sw_param);
      riccheck::cli::write_output(doc, sw_out);
      return 0;
    }
  } catch (const riccheck::usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
