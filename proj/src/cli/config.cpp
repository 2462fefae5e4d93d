#include "riccheck/cli/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "riccheck/cli/expr.hpp"
#include "riccheck/construct/warped.hpp"
#include "riccheck/errors.hpp"

namespace riccheck::cli {

namespace {

using gallery::Expectation;
using gallery::Scenario;

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

struct Section {
  std::string name;
  std::vector<std::pair<std::string, std::string>> entries;

  const std::string* find(const std::string& key) const {
    for (const auto& [k, v] : entries)
      if (k == key) return &v;
    return nullptr;
  }
};

struct RawConfig {
  std::string origin;
  std::vector<Section> sections;

  [[noreturn]] void fail(const std::string& msg) const { throw usage_error(origin + ": " + msg); }

  const Section* find(const std::string& name) const {
    for (const auto& s : sections)
      if (s.name == name) return &s;
    return nullptr;
  }

  const Section& require(const std::string& name) const {
    const Section* s = find(name);
    if (!s) fail("missing required section [" + name + "]");
    return *s;
  }
};

RawConfig split_sections(const std::string& text, const std::string& origin) {
  RawConfig raw;
  raw.origin = origin;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  Section* current = nullptr;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        raw.fail("line " + std::to_string(lineno) + ": malformed section header");
      std::string name = trim(line.substr(1, line.size() - 2));
      if (raw.find(name)) raw.fail("duplicate section [" + name + "]");
      raw.sections.push_back({name, {}});
      current = &raw.sections.back();
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos)
      raw.fail("line " + std::to_string(lineno) + ": expected key = value");
    if (!current) raw.fail("line " + std::to_string(lineno) + ": entry outside any section");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) raw.fail("line " + std::to_string(lineno) + ": empty key");
    if (current->find(key))
      raw.fail("duplicate key '" + key + "' in section [" + current->name + "]");
    current->entries.emplace_back(std::move(key), std::move(value));
  }
  return raw;
}

double parse_double(const RawConfig& raw, const std::string& key, const std::string& text) {
  const char* first = text.data();
  const char* last = text.data() + text.size();
  double v = 0.0;
  auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc{} || res.ptr != last)
    raw.fail("value of '" + key + "' is not a number: \"" + text + "\"");
  return v;
}

int parse_int(const RawConfig& raw, const std::string& key, const std::string& text) {
  double v = parse_double(raw, key, text);
  int i = static_cast<int>(v);
  if (static_cast<double>(i) != v) raw.fail("value of '" + key + "' is not an integer");
  return i;
}

std::vector<double> parse_numbers(const RawConfig& raw, const std::string& key,
                                  const std::string& text) {
  std::vector<double> out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) out.push_back(parse_double(raw, key, tok));
  return out;
}

std::vector<std::string> chart_vars(int n) {
  std::vector<std::string> vars;
  vars.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
  return vars;
}

geom::Box parse_box(const RawConfig& raw, const std::string& key, const std::string& text,
                    int dim) {
  std::vector<double> nums = parse_numbers(raw, key, text);
  if (static_cast<int>(nums.size()) != 2 * dim)
    raw.fail("'" + key + "' needs " + std::to_string(2 * dim) + " numbers (lo hi per coordinate)");
  geom::Box box;
  box.lo.resize(dim);
  box.hi.resize(dim);
  for (int i = 0; i < dim; ++i) {
    box.lo(i) = nums[static_cast<std::size_t>(2 * i)];
    box.hi(i) = nums[static_cast<std::size_t>(2 * i + 1)];
    if (!(box.lo(i) < box.hi(i)))
      raw.fail("'" + key + "': coordinate " + std::to_string(i + 1) + " has lo >= hi");
  }
  return box;
}

// Matrix entry keys like g11, b12, j34: prefix letter then two single-digit
// indices (chart dimensions here never exceed 9).
bool entry_indices(const std::string& key, char prefix, int dim, int& i, int& j) {
  if (key.size() != 3 || key[0] != prefix) return false;
  if (!std::isdigit(static_cast<unsigned char>(key[1])) ||
      !std::isdigit(static_cast<unsigned char>(key[2])))
    return false;
  i = key[1] - '0';
  j = key[2] - '0';
  return i >= 1 && j >= 1 && i <= dim && j <= dim;
}

// Collects prefix-matching entries, ignoring other keys; call sites validate
// that every key in the section is accounted for.
geom::MetricField parse_metric_entries(const RawConfig& raw, const Section& sec, char prefix,
                                       int dim) {
  auto vars = chart_vars(dim);
  std::map<std::pair<int, int>, Expr> entries;
  for (const auto& [key, value] : sec.entries) {
    int i = 0, j = 0;
    if (!entry_indices(key, prefix, dim, i, j)) continue;
    if (i > j) raw.fail("metric entry '" + key + "': specify only the upper triangle");
    entries.emplace(std::make_pair(i - 1, j - 1), Expr::parse(value, vars));
  }
  if (entries.empty())
    raw.fail("section [" + sec.name + "] defines no '" + std::string(1, prefix) + "' entries");
  geom::MetricField g;
  g.dim = dim;
  g.fn = [entries, dim](const geom::JetVec& xs) {
    geom::JetMat m(dim, geom::Jet::constant(xs[0].dim(), xs[0].order(), 0.0));
    for (const auto& [ij, e] : entries) {
      geom::Jet v = e.eval(xs);
      m.at(ij.first, ij.second) = v;
      if (ij.first != ij.second) m.at(ij.second, ij.first) = v;
    }
    return m;
  };
  return g;
}

geom::EndoField parse_endo_entries(const RawConfig& raw, const Section& sec, int dim) {
  auto vars = chart_vars(dim);
  std::map<std::pair<int, int>, Expr> entries;
  for (const auto& [key, value] : sec.entries) {
    int i = 0, j = 0;
    if (!entry_indices(key, 'j', dim, i, j))
      raw.fail("bad entry key '" + key + "' in [" + sec.name + "] (expect j<row><col>)");
    entries.emplace(std::make_pair(i - 1, j - 1), Expr::parse(value, vars));
  }
  if (entries.empty()) raw.fail("section [" + sec.name + "] defines no entries");
  geom::EndoField J;
  J.dim = dim;
  J.fn = [entries, dim](const geom::JetVec& xs) {
    geom::JetMat m(dim, geom::Jet::constant(xs[0].dim(), xs[0].order(), 0.0));
    for (const auto& [ij, e] : entries) m.at(ij.first, ij.second) = e.eval(xs);
    return m;
  };
  return J;
}

geom::VectorField parse_vector(const RawConfig& raw, const std::string& key,
                               const std::string& value, int dim) {
  auto vars = chart_vars(dim);
  std::vector<Expr> comps;
  std::string piece;
  std::istringstream in(value);
  while (std::getline(in, piece, ',')) comps.push_back(Expr::parse(trim(piece), vars));
  if (static_cast<int>(comps.size()) != dim)
    raw.fail("field '" + key + "' needs " + std::to_string(dim) + " comma-separated components");
  geom::VectorField v;
  v.dim = dim;
  v.fn = [comps](const geom::JetVec& xs) {
    geom::JetVec out;
    out.reserve(comps.size());
    for (const auto& e : comps) out.push_back(e.eval(xs));
    return out;
  };
  return v;
}

const std::set<std::string> kKinds = {"soliton",       "conformal-soliton", "quasi-soliton",
                                      "ricci-hessian", "kahler",            "classifier"};

}  // namespace

Scenario parse_scenario_text(const std::string& text, const std::string& origin) {
  RawConfig raw = split_sections(text, origin);
  for (const auto& sec : raw.sections) {
    static const std::set<std::string> known = {"scenario", "constants", "metric", "endo",
                                                "kahler",   "warped",    "scalars", "fields",
                                                "expect"};
    if (!known.count(sec.name)) raw.fail("unknown section [" + sec.name + "]");
  }

  Scenario s;
  s.source = text;

  const Section& head = raw.require("scenario");
  for (const auto& [key, value] : head.entries) {
    static const std::set<std::string> known = {"id",  "kind",      "dim",    "box",
                                                "margin", "exclusion", "summary"};
    if (!known.count(key)) raw.fail("unknown key '" + key + "' in [scenario]");
  }
  if (const std::string* v = head.find("id")) s.id = *v;
  else raw.fail("[scenario] needs an id");
  if (const std::string* v = head.find("kind")) s.kind = *v;
  else raw.fail("[scenario] needs a kind");
  if (!kKinds.count(s.kind)) raw.fail("unknown kind '" + s.kind + "'");
  if (const std::string* v = head.find("dim")) s.dim = parse_int(raw, "dim", *v);
  else raw.fail("[scenario] needs dim");
  if (s.dim < 1 || s.dim > 9) raw.fail("dim must be between 1 and 9");
  if (const std::string* v = head.find("box")) s.box = parse_box(raw, "box", *v, s.dim);
  else raw.fail("[scenario] needs a box");
  if (const std::string* v = head.find("margin")) s.margin = parse_double(raw, "margin", *v);
  if (s.margin <= 0) raw.fail("margin must be positive");
  if (const std::string* v = head.find("summary")) s.summary = *v;
  if (const std::string* v = head.find("exclusion")) {
    Expr e = Expr::parse(*v, chart_vars(s.dim));
    s.exclusion = [e](const geom::ChartPoint& p) { return e.value(p); };
  }

  // constants
  std::map<std::string, double> consts;
  if (const Section* sec = raw.find("constants")) {
    for (const auto& [key, value] : sec->entries) {
      static const std::set<std::string> known = {"lambda", "a", "nu"};
      if (!known.count(key)) raw.fail("unknown constant '" + key + "'");
      consts[key] = parse_double(raw, key, value);
    }
  }
  auto has_const = [&](const std::string& k) { return consts.count(k) != 0; };
  auto get_const = [&](const std::string& k, double dflt) {
    auto it = consts.find(k);
    return it == consts.end() ? dflt : it->second;
  };

  // scalars
  std::map<std::string, Expr> scalars;
  if (const Section* sec = raw.find("scalars")) {
    for (const auto& [key, value] : sec->entries) {
      static const std::set<std::string> known = {"f", "tau", "sigma", "alpha", "gamma", "mu",
                                                  "profile"};
      if (!known.count(key)) raw.fail("unknown scalar '" + key + "'");
      if (key == "profile") scalars.emplace(key, Expr::parse(value, {"s"}));
      else scalars.emplace(key, Expr::parse(value, chart_vars(s.dim)));
    }
  }
  auto scalar_or_empty = [&](const std::string& k) {
    auto it = scalars.find(k);
    return it == scalars.end() ? geom::ScalarField{} : it->second.scalar_field();
  };

  // chart pieces
  const Section* metric_sec = raw.find("metric");
  const Section* endo_sec = raw.find("endo");
  const Section* kahler_sec = raw.find("kahler");
  const Section* warped_sec = raw.find("warped");

  if (metric_sec && kahler_sec) raw.fail("give either [metric] or [kahler], not both");
  if (warped_sec && s.kind != "quasi-soliton")
    raw.fail("[warped] is only meaningful for kind quasi-soliton");

  if (kahler_sec) {
    int m = 0;
    const std::string* mv = kahler_sec->find("m");
    if (!mv) raw.fail("[kahler] needs m");
    m = parse_int(raw, "m", *mv);
    if (2 * m != s.dim) raw.fail("[kahler] m is inconsistent with dim");
    const std::string* pot = kahler_sec->find("potential");
    if (!pot) raw.fail("[kahler] needs a potential");
    for (const auto& [key, value] : kahler_sec->entries)
      if (key != "m" && key != "potential") raw.fail("unknown key '" + key + "' in [kahler]");
    Expr pe = Expr::parse(*pot, chart_vars(s.dim));
    s.kahler = construct::kahler_from_potential(m, pe.scalar_field());
    s.has_kahler = true;
    s.g = s.kahler.g;
    s.J = s.kahler.J;
    s.has_J = true;
  } else if (metric_sec) {
    for (const auto& [key, value] : metric_sec->entries) {
      int i = 0, j = 0;
      if (!entry_indices(key, 'g', s.dim, i, j))
        raw.fail("unknown key '" + key + "' in [metric] (expect g<row><col>)");
    }
    s.g = parse_metric_entries(raw, *metric_sec, 'g', s.dim);
  }

  if (endo_sec) {
    if (s.has_J) raw.fail("[endo] conflicts with the [kahler] complex structure");
    s.J = parse_endo_entries(raw, *endo_sec, s.dim);
    s.has_J = true;
  }

  if (warped_sec) {
    const std::string* bd = warped_sec->find("base_dim");
    const std::string* fd = warped_sec->find("fiber_dim");
    const std::string* ell = warped_sec->find("ell");
    const std::string* fbox = warped_sec->find("fiber_box");
    if (!bd || !fd || !ell || !fbox)
      raw.fail("[warped] needs base_dim, fiber_dim, ell, fiber_box");
    int b = parse_int(raw, "base_dim", *bd);
    int k = parse_int(raw, "fiber_dim", *fd);
    if (b != s.dim) raw.fail("[warped] base_dim must equal the scenario dim");
    if (k < 1 || k > 9) raw.fail("[warped] fiber_dim out of range");
    for (const auto& [key, value] : warped_sec->entries) {
      if (key == "base_dim" || key == "fiber_dim" || key == "ell" || key == "fiber_box") continue;
      int i = 0, j = 0;
      if (!entry_indices(key, 'b', b, i, j) && !entry_indices(key, 'f', k, i, j))
        raw.fail("unknown key '" + key + "' in [warped]");
    }
    geom::MetricField gb = parse_metric_entries(raw, *warped_sec, 'b', b);
    geom::MetricField gf = parse_metric_entries(raw, *warped_sec, 'f', k);
    Expr le = Expr::parse(*ell, chart_vars(b));
    s.quasi.wp = construct::warped_product(gb, gf, le.scalar_field());
    s.quasi.wp.base_box = s.box;
    s.quasi.wp.fiber_box = parse_box(raw, "fiber_box", *fbox, k);
    s.quasi.f = scalar_or_empty("f");
    s.quasi.lambda = get_const("lambda", 0.0);
    s.quasi.nu = get_const("nu", 0.0);
    s.quasi.nu_given = has_const("nu");
    s.has_quasi = true;
    s.g = s.quasi.wp.base;
    if (scalars.count("profile")) {
      s.warp_profile = scalars.at("profile").profile();
      s.has_profile = true;
    }
  }

  if (!s.g.valid()) raw.fail("the scenario defines no metric");

  // fields
  if (const Section* sec = raw.find("fields")) {
    for (const auto& [key, value] : sec->entries) {
      if (key == "v") {
        s.v = parse_vector(raw, key, value, s.dim);
        s.has_v = true;
      } else if (key == "w") {
        s.w = parse_vector(raw, key, value, s.dim);
        s.has_w = true;
      } else {
        raw.fail("unknown field '" + key + "' (expect v or w)");
      }
    }
  }

  // kind-specific assembly
  bool conf_wanted = s.kind == "soliton" || s.kind == "conformal-soliton" ||
                     ((s.kind == "kahler" || s.kind == "classifier") &&
                      (scalars.count("f") || scalars.count("tau") || has_const("lambda")));
  if (conf_wanted) {
    s.conf.g = s.g;
    s.conf.tau = scalar_or_empty("tau");
    s.conf.f = scalar_or_empty("f");
    s.conf.lambda = get_const("lambda", 0.0);
    s.conf.a = get_const("a", 0.0);
    s.conf.a_given = has_const("a");
    if (s.has_J) s.conf.J = s.J;
    s.conf.dim = s.dim;
    s.has_conf = true;
    if (s.conf.tau.valid()) {
      s.pair = construct::conformal_rescale(s.g, s.conf.tau);
      s.has_pair = true;
    }
  }

  if (s.kind == "ricci-hessian") {
    if (!scalars.count("sigma") || !scalars.count("alpha") || !scalars.count("gamma"))
      raw.fail("kind ricci-hessian needs sigma, alpha and gamma scalars");
    s.rh.g = s.g;
    s.rh.sigma = scalars.at("sigma").scalar_field();
    s.rh.alpha = scalars.at("alpha").scalar_field();
    s.rh.gamma = scalars.at("gamma").scalar_field();
    s.rh.mu = scalar_or_empty("mu");
    s.rh.lambda = get_const("lambda", 0.0);
    if (s.has_J) s.rh.J = s.J;
    s.rh.dim = s.dim;
    s.has_rh = true;
  }

  if (s.kind == "kahler" && !s.has_kahler) {
    // raw kahler bundle from explicit metric and complex structure, used by
    // invariance controls that are not honest potential charts
    if (!s.has_J) raw.fail("kind kahler needs [kahler] or an explicit [endo]");
    if (s.dim % 2 != 0) raw.fail("kind kahler needs even dim");
    s.kahler.m = s.dim / 2;
    s.kahler.g = s.g;
    s.kahler.J = s.J;
    s.has_kahler = true;
  }

  if (scalars.count("sigma")) {
    s.sigma = scalars.at("sigma").scalar_field();
    s.has_sigma = true;
  }

  // expectations
  if (const Section* sec = raw.find("expect")) {
    for (const auto& [key, value] : sec->entries) {
      std::istringstream in(value);
      std::string verdict, num;
      in >> verdict >> num;
      std::string rest;
      if (in >> rest) raw.fail("expectation '" + key + "': trailing input");
      if (num.empty()) raw.fail("expectation '" + key + "' needs a verdict and a threshold");
      Expectation e;
      e.checker = key;
      if (verdict == "pass") {
        e.expect_pass = true;
        e.tol = parse_double(raw, key, num);
        if (e.tol <= 0) raw.fail("expectation '" + key + "': tolerance must be positive");
      } else if (verdict == "fail") {
        e.expect_pass = false;
        e.floor = parse_double(raw, key, num);
        if (e.floor <= 0) raw.fail("expectation '" + key + "': floor must be positive");
      } else {
        raw.fail("expectation '" + key + "': verdict must be pass or fail");
      }
      for (const auto& prev : s.expected)
        if (prev.checker == e.checker) raw.fail("duplicate expectation for '" + key + "'");
      s.expected.push_back(std::move(e));
    }
  }

  return s;
}

Scenario parse_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot open scenario file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario_text(buf.str(), path);
}

}  // namespace riccheck::cli
