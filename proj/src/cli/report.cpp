#include "riccheck/cli/report.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

#include "riccheck/errors.hpp"

namespace riccheck::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt_short(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

std::string coords(const geom::ChartPoint& p) {
  std::string out;
  for (int i = 0; i < p.size(); ++i) {
    if (i) out += ' ';
    out += fmt(p(i));
  }
  return out;
}

std::string csv_quote(const std::string& s) {
  bool needs = s.find_first_of(",\"\n ") != std::string::npos;
  if (!needs) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string diag_string(const CheckOutcome& o) {
  std::string out;
  for (const auto& [k, v] : o.diagnostics) {
    if (!out.empty()) out += ';';
    out += k + "=" + fmt(v);
  }
  return out;
}

}  // namespace

std::string render_text(const RunReport& rep, const RunConfig& cfg) {
  std::ostringstream out;
  out << "verify: " << rep.expectations << " expectation(s), " << cfg.points
      << " point(s) per check, seed " << cfg.seed << "\n";
  std::string current;
  for (const auto& o : rep.outcomes) {
    if (o.scenario_id != current) {
      current = o.scenario_id;
      out << "\nscenario " << current << "\n";
    }
    out << "  " << o.checker;
    for (std::size_t i = o.checker.size(); i < 20; ++i) out << ' ';
    out << (o.expect_pass ? " expect pass < " : " expect fail >= ") << fmt_short(o.threshold);
    out << "  max " << fmt_short(o.max_residual);
    if (o.errors > 0) out << "  errors " << o.errors;
    out << "  " << o.status << (o.satisfied ? "  [ok]" : "  [UNMET]");
    std::string d = diag_string(o);
    if (!d.empty()) out << "  (" << d << ")";
    out << "\n";
    if (o.errors > 0) {
      for (const auto& pr : o.points)
        if (pr.domain_error) {
          out << "      error at (" << coords(pr.p) << "): " << pr.error << "\n";
          break;
        }
    }
  }
  out << "\nsummary: " << rep.satisfied << "/" << rep.expectations << " satisfied";
  if (rep.inconclusive > 0) out << ", " << rep.inconclusive << " inconclusive";
  out << "\n";
  return out.str();
}

std::string render_csv(const RunReport& rep, const RunConfig& cfg) {
  std::ostringstream out;
  out << "scenario,checker,expected,threshold,row,index,coords,residual,error,status,"
         "satisfied,diagnostics\n";
  (void)cfg;
  for (const auto& o : rep.outcomes) {
    const std::string expected = o.expect_pass ? "pass" : "fail";
    for (std::size_t i = 0; i < o.points.size(); ++i) {
      const auto& pr = o.points[i];
      out << o.scenario_id << ',' << o.checker << ',' << expected << ',' << fmt(o.threshold)
          << ",point," << i << ',' << csv_quote(coords(pr.p)) << ','
          << (pr.domain_error ? "" : fmt(pr.residual)) << ',' << csv_quote(pr.error)
          << ",,,\n";
    }
    out << o.scenario_id << ',' << o.checker << ',' << expected << ',' << fmt(o.threshold)
        << ",summary,,," << fmt(o.max_residual) << ",," << o.status << ','
        << (o.satisfied ? "true" : "false") << ',' << csv_quote(diag_string(o)) << "\n";
  }
  out << ",,,,exit," << rep.exit_code << ",," << rep.expectations << ',' << rep.satisfied << ','
      << rep.inconclusive << ",,\n";
  return out.str();
}

std::string render_json(const RunReport& rep, const RunConfig& cfg) {
  ordered_json doc;
  doc["command"] = "verify";
  doc["points"] = cfg.points;
  doc["seed"] = cfg.seed;
  ordered_json scenarios = ordered_json::array();
  ordered_json* current = nullptr;
  std::string current_id;
  for (const auto& o : rep.outcomes) {
    if (current == nullptr || o.scenario_id != current_id) {
      scenarios.push_back(ordered_json{{"id", o.scenario_id}, {"checks", ordered_json::array()}});
      current = &scenarios.back();
      current_id = o.scenario_id;
    }
    ordered_json check;
    check["checker"] = o.checker;
    check["expected"] = o.expect_pass ? "pass" : "fail";
    check["threshold"] = o.threshold;
    check["declared"] = o.declared;
    check["max_residual"] = o.max_residual;
    check["errors"] = o.errors;
    check["status"] = o.status;
    check["satisfied"] = o.satisfied;
    if (!o.diagnostics.empty()) {
      ordered_json diag;
      for (const auto& [k, v] : o.diagnostics) diag[k] = v;
      check["diagnostics"] = diag;
    }
    ordered_json pts = ordered_json::array();
    for (const auto& pr : o.points) {
      ordered_json pj;
      ordered_json cj = ordered_json::array();
      for (int i = 0; i < pr.p.size(); ++i) cj.push_back(pr.p(i));
      pj["coords"] = cj;
      if (pr.domain_error)
        pj["error"] = pr.error;
      else
        pj["residual"] = pr.residual;
      pts.push_back(pj);
    }
    check["points"] = pts;
    (*current)["checks"].push_back(check);
  }
  doc["scenarios"] = scenarios;
  doc["summary"] = ordered_json{{"expectations", rep.expectations},
                                {"satisfied", rep.satisfied},
                                {"inconclusive", rep.inconclusive},
                                {"exit_code", rep.exit_code}};
  return doc.dump(2) + "\n";
}

std::string render_identities_text(const std::vector<IdentityLine>& lines) {
  std::ostringstream out;
  int ok = 0;
  for (const auto& l : lines) {
    out << (l.ok ? "ok   " : "FAIL ") << l.label << ": " << l.value << "\n";
    if (l.ok) ++ok;
  }
  out << "identities: " << ok << "/" << lines.size() << " ok\n";
  return out.str();
}

std::string render_identities_json(const std::vector<IdentityLine>& lines) {
  ordered_json doc;
  doc["command"] = "identities";
  ordered_json arr = ordered_json::array();
  bool all = true;
  for (const auto& l : lines) {
    arr.push_back(ordered_json{{"label", l.label}, {"value", l.value}, {"ok", l.ok}});
    all = all && l.ok;
  }
  doc["identities"] = arr;
  doc["ok"] = all;
  return doc.dump(2) + "\n";
}

std::string render_sweep_text(const std::vector<SweepRow>& rows, const std::string& param) {
  std::ostringstream out;
  out << param << "  max_residual  status\n";
  for (const auto& r : rows)
    out << fmt_short(r.value) << "  " << fmt_short(r.max_residual) << "  " << r.status << "\n";
  return out.str();
}

std::string render_sweep_csv(const std::vector<SweepRow>& rows, const std::string& param) {
  std::ostringstream out;
  out << param << ",max_residual,status\n";
  for (const auto& r : rows)
    out << fmt(r.value) << ',' << fmt(r.max_residual) << ',' << r.status << "\n";
  return out.str();
}

std::string render_sweep_json(const std::vector<SweepRow>& rows, const std::string& scenario,
                              const std::string& checker, const std::string& param) {
  ordered_json doc;
  doc["command"] = "sweep";
  doc["scenario"] = scenario;
  doc["checker"] = checker;
  doc["param"] = param;
  ordered_json arr = ordered_json::array();
  for (const auto& r : rows)
    arr.push_back(ordered_json{
        {"value", r.value}, {"max_residual", r.max_residual}, {"status", r.status}});
  doc["rows"] = arr;
  return doc.dump(2) + "\n";
}

void write_output(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw usage_error("cannot open output file: " + out_path);
  f << content;
}

}  // namespace riccheck::cli
