#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#ifndef _WIN32
#include <sys/wait.h>
#include <unistd.h>
#endif

namespace {

std::string g_cli;
std::filesystem::path g_tmp;

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

RunResult run(const std::string& args) {
  auto out = g_tmp / "stdout.txt";
  auto err = g_tmp / "stderr.txt";
  std::string cmd =
      '"' + g_cli + "\" " + args + " > \"" + out.string() + "\" 2> \"" + err.string() + '"';
  int rc = std::system(cmd.c_str());
  RunResult r;
#ifdef _WIN32
  r.code = rc;
#else
  r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
#endif
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

int count_fields(const std::string& line) {
  // fields never contain commas, quoted or not
  int n = 1;
  for (char c : line) n += (c == ',');
  return n;
}

}  // namespace

TEST_CASE("list shows the catalog") {
  auto r = run("list");
  CHECK(r.code == 0);
  CHECK(r.out.find("cigar_2d") != std::string::npos);
  CHECK(r.out.find("quasi-soliton") != std::string::npos);
  CHECK(r.out.find("ricci-hessian") != std::string::npos);

  auto j = run("list --format json");
  REQUIRE(j.code == 0);
  auto doc = nlohmann::json::parse(j.out);
  REQUIRE(doc.is_array());
  CHECK(doc.size() == 34);
  for (const auto& e : doc) {
    CHECK(e.contains("id"));
    CHECK(e.contains("kind"));
    CHECK(e.contains("dim"));
    CHECK(e.contains("summary"));
    CHECK(e.contains("checkers"));
  }

  auto v = run("list --verbose");
  CHECK(v.code == 0);
  CHECK(v.out.find("[scenario]") != std::string::npos);
}

TEST_CASE("verify exits 0 on a passing scenario") {
  auto r = run("verify --scenario gaussian_2d --points 4 --seed 1");
  CHECK(r.code == 0);
  CHECK(r.out.find("[ok]") != std::string::npos);
  CHECK(r.out.find("UNMET") == std::string::npos);
}

TEST_CASE("declared negative expectations count as satisfied") {
  auto r = run("verify --scenario cigar_wrong_lambda --points 4");
  CHECK(r.code == 0);
  // forcing the declared failure into a pass expectation must yield exit 1
  auto f = run("verify --scenario cigar_wrong_lambda --points 4 --require-pass");
  CHECK(f.code == 1);
  CHECK(f.out.find("UNMET") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("verify --scenario does_not_exist").code == 2);
  CHECK(run("verify --scenario gaussian_2d --checker bogus").code == 2);
  CHECK(run("verify --scenario gaussian_2d --checker quasi_soliton").code == 2);
  CHECK(run("verify --format yaml").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("--help").code == 0);
  CHECK(run("sweep --scenario cigar_2d").code == 2);  // --checker required
}

TEST_CASE("verify output is deterministic for a fixed seed") {
  auto a = g_tmp / "det_a.json";
  auto b = g_tmp / "det_b.json";
  std::string args = "verify --scenario cigar_2d --scenario gaussian_2d --points 6 --seed 7";
  CHECK(run(args + " --format json --out \"" + a.string() + '"').code == 0);
  CHECK(run(args + " --format json --out \"" + b.string() + '"').code == 0);
  auto ja = slurp(a), jb = slurp(b);
  CHECK(!ja.empty());
  CHECK(ja == jb);

  auto c = g_tmp / "det_a.csv";
  auto d = g_tmp / "det_b.csv";
  CHECK(run(args + " --format csv --out \"" + c.string() + '"').code == 0);
  CHECK(run(args + " --format csv --out \"" + d.string() + '"').code == 0);
  auto ca = slurp(c), cb = slurp(d);
  CHECK(!ca.empty());
  CHECK(ca == cb);
}

TEST_CASE("json report structure") {
  auto r = run("verify --scenario sphere_chart --points 4 --seed 2 --format json");
  REQUIRE(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["command"] == "verify");
  CHECK(doc["points"] == 4);
  CHECK(doc["seed"] == 2);
  REQUIRE(doc["scenarios"].size() == 1);
  const auto& sc = doc["scenarios"][0];
  CHECK(sc["id"] == "sphere_chart");
  REQUIRE(!sc["checks"].empty());
  const auto& ck = sc["checks"][0];
  CHECK(ck.contains("checker"));
  CHECK(ck.contains("max_residual"));
  CHECK(ck["points"].size() == 4);
  CHECK(doc["summary"]["exit_code"] == 0);
  CHECK(doc["summary"]["satisfied"] == doc["summary"]["expectations"]);
}

TEST_CASE("csv report has a fixed column layout") {
  auto r = run("verify --scenario gaussian_2d --checker soliton --points 3 --format csv");
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  REQUIRE(std::getline(lines, line));
  CHECK(line ==
        "scenario,checker,expected,threshold,row,index,coords,residual,error,status,satisfied,"
        "diagnostics");
  int rows = 0;
  bool saw_summary = false, saw_exit = false;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    CHECK(count_fields(line) == 12);
    ++rows;
    if (line.find(",summary,") != std::string::npos) saw_summary = true;
    if (line.find(",exit,") != std::string::npos) saw_exit = true;
  }
  CHECK(rows == 5);  // 3 points + summary + exit
  CHECK(saw_summary);
  CHECK(saw_exit);
}

TEST_CASE("explicit checker selection restricts the run") {
  auto r = run(
      "verify --scenario gaussian_2d --checker soliton --checker lie_form --format json");
  REQUIRE(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  REQUIRE(doc["scenarios"].size() == 1);
  CHECK(doc["scenarios"][0]["checks"].size() == 2);
  CHECK(doc["scenarios"][0]["checks"][0]["checker"] == "soliton");
  CHECK(doc["scenarios"][0]["checks"][1]["checker"] == "lie_form");
}

TEST_CASE("identities subcommand replays the symbolic suite") {
  auto r = run("identities");
  CHECK(r.code == 0);
  CHECK(r.out.find("7/7 ok") != std::string::npos);
  auto j = run("identities --format json");
  REQUIRE(j.code == 0);
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["identities"].size() == 7);
  CHECK(doc["ok"] == true);
  for (const auto& l : doc["identities"]) CHECK(l["ok"] == true);
}

TEST_CASE("sweep traces a residual across a parameter range") {
  auto r = run(
      "sweep --scenario cigar_2d --checker soliton --param lambda --from 0 --to 1 --steps 5 "
      "--format csv");
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  REQUIRE(std::getline(lines, line));
  CHECK(line == "lambda,max_residual,status");
  std::vector<std::pair<double, std::string>> rows;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    auto c1 = line.find(','), c2 = line.rfind(',');
    REQUIRE(c1 != std::string::npos);
    REQUIRE(c2 > c1);
    rows.push_back({std::stod(line.substr(c1 + 1, c2 - c1 - 1)), line.substr(c2 + 1)});
  }
  REQUIRE(rows.size() == 5);
  CHECK(rows.front().first < 1e-12);
  CHECK(rows.front().second == "pass");
  CHECK(rows.back().first > 0.9);
  CHECK(rows.back().second == "fail");
}

TEST_CASE("external scenario files run end to end") {
  auto good = g_tmp / "good.conf";
  spit(good,
       "[scenario]\n"
       "id = external_flat\n"
       "kind = soliton\n"
       "dim = 2\n"
       "box = -1 1 -1 1\n"
       "[constants]\n"
       "lambda = 1\n"
       "a = 2\n"
       "[metric]\n"
       "g11 = 1\n"
       "g22 = 1\n"
       "[scalars]\n"
       "f = 0.5*(x1^2 + x2^2)\n"
       "[expect]\n"
       "soliton = pass 1e-12\n"
       "soliton_scalar = pass 1e-10\n");
  auto r = run("verify --scenario-file \"" + good.string() + '"');
  CHECK(r.code == 0);
  CHECK(r.out.find("external_flat") != std::string::npos);

  auto bad = g_tmp / "bad.conf";
  spit(bad, "[scenario]\nid = x\nkind = soliton\ndim = 2\nbox = 0 1 0 1\n[metric]\ng11 = "
            "1\ng11 = 2\ng22 = 1\n");
  auto rb = run("verify --scenario-file \"" + bad.string() + '"');
  CHECK(rb.code == 2);
  CHECK(rb.err.find("duplicate") != std::string::npos);

  auto rm = run("verify --scenario-file \"" + (g_tmp / "missing.conf").string() + '"');
  CHECK(rm.code == 2);
}

TEST_CASE("domain errors make a check inconclusive and exit 3") {
  auto f = g_tmp / "domain.conf";
  spit(f,
       "[scenario]\n"
       "id = domain_trouble\n"
       "kind = soliton\n"
       "dim = 2\n"
       "box = -1 1 -1 1\n"
       "[constants]\n"
       "lambda = 0\n"
       "[metric]\n"
       "g11 = sqrt(x1)\n"
       "g22 = 1\n"
       "[expect]\n"
       "soliton = pass 1e-9\n");
  auto r = run("verify --scenario-file \"" + f.string() + '"');
  CHECK(r.code == 3);
  CHECK(r.out.find("inconclusive") != std::string::npos);
  auto j = run("verify --scenario-file \"" + f.string() + "\" --format json");
  CHECK(j.code == 3);
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["summary"]["inconclusive"] == 1);
  CHECK(doc["summary"]["exit_code"] == 3);
}

TEST_CASE("report subcommand writes a machine-readable file") {
  auto out = g_tmp / "report.json";
  auto r = run("report --scenario gaussian_2d --points 4 --out \"" + out.string() + '"');
  CHECK(r.code == 0);
  auto doc = nlohmann::json::parse(slurp(out));
  CHECK(doc["summary"]["exit_code"] == 0);
  CHECK(run("report --scenario gaussian_2d").code == 2);  // --out is required
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <riccheck-binary> [doctest args]\n", argv[0]);
    return 1;
  }
  g_cli = argv[1];
  g_tmp = std::filesystem::temp_directory_path() /
          ("riccheck_cli_test_" + std::to_string(static_cast<long>(::getpid())));
  std::filesystem::create_directories(g_tmp);

  std::vector<char*> args;
  args.push_back(argv[0]);
  for (int i = 2; i < argc; ++i) args.push_back(argv[i]);
  doctest::Context ctx(static_cast<int>(args.size()), args.data());
  int rc = ctx.run();
  std::error_code ec;
  std::filesystem::remove_all(g_tmp, ec);
  return rc;
}
