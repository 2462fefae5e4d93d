#include "riccheck/cli/runner.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "riccheck/cli/config.hpp"
#include "riccheck/construct/conformal.hpp"
#include "riccheck/construct/warped.hpp"
#include "riccheck/diffalg/systems.hpp"
#include "riccheck/errors.hpp"
#include "riccheck/geom/calculus.hpp"
#include "riccheck/geom/sampling.hpp"
#include "riccheck/residuals/classifiers.hpp"
#include "riccheck/residuals/quasi.hpp"
#include "riccheck/residuals/ricci_hessian.hpp"
#include "riccheck/residuals/soliton.hpp"

namespace riccheck::cli {

namespace {

using gallery::Scenario;
using geom::ChartPoint;

double classifier_norm(const std::string& checker, const Scenario& s, const ChartPoint& p) {
  const geom::VectorField& x = s.has_w ? s.w : s.v;
  if (checker == "killing") return residuals::killing_residual(x, s.g, p);
  if (checker == "conformal_field") return residuals::conformal_field_residual(x, s.g, p);
  if (checker == "commutator_inv") return residuals::commutator_residual(x, s.J, s.g, p);
  return residuals::holomorphy_residual(x, s.J, s.g, p);
}

double conf_transport_defect(const Scenario& s, const ChartPoint& p) {
  Eigen::MatrixXd pred = construct::conformal_ricci_rhs(s.g, s.pair.tau, p);
  Eigen::MatrixXd direct = geom::values(geom::ricci(s.pair.ghat.at(p, 2)));
  return geom::metric_op_norm(pred - direct, s.pair.ghat.values_at(p));
}

double conformal_formulas_defect(const Scenario& s, const ChartPoint& p) {
  const geom::ScalarField& f_test =
      (s.has_conf && s.conf.f.valid()) ? s.conf.f : s.pair.tau;
  geom::JetMat gh = s.pair.ghat.at(p, 2);
  geom::Jet fj = f_test.at(p, 2);
  Eigen::MatrixXd dh = geom::values(geom::hessian(fj, gh));
  Eigen::MatrixXd ph = construct::conformal_hessian_rhs(s.g, s.pair.tau, f_test, p);
  double hess_defect = geom::metric_op_norm(ph - dh, s.pair.ghat.values_at(p));
  double dl = geom::laplacian(fj, gh).value();
  double pl = construct::conformal_laplacian_rhs(s.g, s.pair.tau, f_test, p);
  return std::max(hess_defect, std::abs(pl - dl));
}

double hermitian_checker(const Scenario& s, const ChartPoint& p) {
  Eigen::MatrixXd jv = s.J.values_at(p);
  Eigen::MatrixXd t;
  if (s.has_conf && s.conf.tau.valid()) {
    t = geom::values(geom::hessian(s.conf.tau.at(p, 2), s.g.at(p, 2)));
  } else if (s.has_conf && s.conf.f.valid()) {
    // lambda 0 keeps exactly Ric + nabla df
    t = residuals::soliton_residual(s.g, s.conf.f, 0.0, p);
  } else {
    t = geom::values(geom::ricci(s.g.at(p, 2)));
  }
  return residuals::hermitian_defect(t, jv);
}

double quasi_defect(const residuals::QuasiSolitonScenario& q, const ChartPoint& pb,
                    const ChartPoint& pf) {
  residuals::QuasiResiduals r = residuals::quasi_soliton_residual(q, pb, pf);
  double rb = geom::metric_op_norm(r.base, q.wp.base.values_at(pb));
  double rf = geom::metric_op_norm(r.fiber, q.wp.fiber.values_at(pf));
  return std::max({rb, rf, std::abs(r.scalar)});
}

double warped_blocks_defect(const Scenario& s, const ChartPoint& pb, const ChartPoint& pf) {
  const construct::WarpedProduct& wp = s.quasi.wp;
  const int b = wp.base_dim;
  const int k = wp.fiber_dim;
  ChartPoint pj = wp.join(pb, pf);
  geom::JetMat gj = wp.total.at(pj, 3);
  Eigen::MatrixXd ric = geom::values(geom::ricci(gj));
  Eigen::MatrixXd gbar = wp.total.values_at(pj);
  construct::WarpedBlocks blocks = construct::warped_block_formulas(wp, s.quasi.f, pb, pf);

  Eigen::MatrixXd gb = gbar.topLeftCorner(b, b);
  Eigen::MatrixXd gf = gbar.bottomRightCorner(k, k);
  double defect = geom::metric_op_norm(ric.topLeftCorner(b, b) - blocks.ric_base, gb);
  defect = std::max(defect,
                    geom::metric_op_norm(ric.bottomRightCorner(k, k) - blocks.ric_fiber, gf));
  defect = std::max(defect, geom::sup_norm(Eigen::MatrixXd(ric.topRightCorner(b, k))));

  if (s.quasi.f.valid()) {
    geom::JetVec xs = geom::seed_coordinates(pj, 3);
    geom::JetVec xb(xs.begin(), xs.begin() + b);
    Eigen::MatrixXd hess = geom::values(geom::hessian(s.quasi.f.fn(xb), gj));
    defect = std::max(defect,
                      geom::metric_op_norm(hess.topLeftCorner(b, b) - blocks.hess_base, gb));
    defect = std::max(
        defect, geom::metric_op_norm(hess.bottomRightCorner(k, k) - blocks.hess_fiber, gf));
    defect = std::max(defect, geom::sup_norm(Eigen::MatrixXd(hess.topRightCorner(b, k))));
  }
  return defect;
}

double rels_wedge_defect(const Scenario& s, const ChartPoint& p) {
  residuals::IdentityResiduals r = residuals::rels_wedge_identities(s.rh, p);
  double m = std::max({std::abs(r.trace), std::abs(r.d_trace), std::abs(r.divergence),
                       std::abs(r.interior), std::abs(r.wedge_a), std::abs(r.wedge_b),
                       std::abs(r.wedge_c)});
  if (r.has_mu) m = std::max(m, std::abs(r.wedge_d));
  return m;
}

double kahler_invariants_defect(const Scenario& s, const ChartPoint& p) {
  geom::JetMat gj = s.kahler.g.at(p, 2);
  geom::JetMat jj = s.kahler.J.at(p, 2);
  Eigen::MatrixXd gv = geom::values(gj);
  Eigen::MatrixXd jv = geom::values(jj);
  const int n = gv.rows();
  double defect = geom::endo_norm(jv * jv + Eigen::MatrixXd::Identity(n, n), gv);
  defect = std::max(defect, geom::metric_op_norm(jv.transpose() * gv * jv - gv, gv));
  geom::JetR3 dj = geom::covariant_derivative_endo(jj, gj);
  for (int k = 0; k < n; ++k) {
    Eigen::MatrixXd slice(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) slice(i, j) = dj.at(k, i, j).value();
    defect = std::max(defect, geom::endo_norm(slice, gv));
  }
  return defect;
}

double prop_dy_defect(const Scenario& s, const ChartPoint& p) {
  geom::JetMat gj = s.g.at(p, 4);
  geom::Jet sj = s.sigma.at(p, 4);
  Eigen::VectorXd dy = geom::values(geom::differential(geom::laplacian(sj, gj)));
  Eigen::VectorXd iric =
      geom::values(geom::interior_product(geom::gradient(sj, gj), geom::ricci(gj)));
  Eigen::VectorXd divh = geom::values(geom::divergence_sym2(geom::hessian(sj, gj), gj));
  Eigen::MatrixXd gv = geom::values(gj);
  return std::max(geom::covector_norm(2.0 * iric + dy, gv),
                  geom::covector_norm(2.0 * divh - dy, gv));
}

}  // namespace

const std::vector<std::string>& checker_ids() {
  static const std::vector<std::string> ids = {
      "soliton",        "soliton_scalar", "conf_soliton",     "conf_scalar",
      "conf_transport", "conformal_formulas", "lie_form",     "two_form",
      "quasi_soliton",  "special_qs",     "warped_blocks",    "ricci_hessian",
      "rels_wedge",     "gamma_formula",  "kahler_invariants", "prop_dy",
      "hermitian",      "killing",        "conformal_field",  "commutator_inv",
      "holomorphy",     "span_alignment"};
  return ids;
}

bool is_checker(const std::string& name) {
  const auto& ids = checker_ids();
  return std::find(ids.begin(), ids.end(), name) != ids.end();
}

bool checker_applies(const std::string& c, const Scenario& s) {
  const bool field = s.has_v || s.has_w;
  if (c == "soliton" || c == "soliton_scalar" || c == "conf_soliton" || c == "conf_scalar" ||
      c == "lie_form" || c == "two_form")
    return s.has_conf;
  if (c == "conf_transport" || c == "conformal_formulas") return s.has_pair;
  if (c == "hermitian") return s.has_J && s.g.valid();
  if (c == "killing" || c == "conformal_field") return field && s.g.valid();
  if (c == "commutator_inv" || c == "holomorphy") return field && s.has_J;
  if (c == "span_alignment") return s.has_v && s.has_w && s.has_J;
  if (c == "quasi_soliton" || c == "warped_blocks") return s.has_quasi;
  if (c == "special_qs") return s.has_quasi && s.has_profile;
  if (c == "ricci_hessian" || c == "rels_wedge") return s.has_rh;
  if (c == "gamma_formula") return s.has_rh && s.rh.mu.valid();
  if (c == "kahler_invariants") return s.has_kahler;
  if (c == "prop_dy") return s.has_sigma && s.g.valid();
  return false;
}

CheckOutcome run_checker(const Scenario& s, const std::string& checker,
                         const gallery::Expectation& e, bool declared, int points,
                         unsigned seed) {
  CheckOutcome out;
  out.scenario_id = s.id;
  out.checker = checker;
  out.declared = declared;
  out.expect_pass = e.expect_pass;
  out.threshold = e.expect_pass ? e.tol : e.floor;

  std::vector<ChartPoint> pts, fpts;
  std::string setup_error;
  try {
    pts = geom::sample_box(s.box, points, seed, s.exclusion, s.margin);
    if (s.has_quasi && (checker == "quasi_soliton" || checker == "warped_blocks"))
      fpts = geom::sample_box(s.quasi.wp.fiber_box, points, seed + 1);
  } catch (const riccheck::error& ex) {
    setup_error = ex.what();
  }

  residuals::ConformalSolitonScenario conf = s.conf;
  residuals::QuasiSolitonScenario quasi = s.quasi;
  if (setup_error.empty() && !pts.empty()) {
    try {
      if (checker == "soliton_scalar" && s.has_conf && !conf.a_given) {
        conf.a = residuals::fit_soliton_constant(s.g, conf.f, conf.lambda, pts.front());
        conf.a_given = true;
        out.diagnostics["fitted_a"] = conf.a;
      }
      if (checker == "conf_scalar" && s.has_conf && !conf.a_given) {
        conf.a = residuals::fit_conf_scalar_constant(conf, pts.front());
        conf.a_given = true;
        out.diagnostics["fitted_a"] = conf.a;
      }
      if ((checker == "quasi_soliton" || checker == "special_qs") && s.has_quasi &&
          !quasi.nu_given) {
        quasi.nu = residuals::fit_fiber_constant(quasi, pts.front());
        quasi.nu_given = true;
        out.diagnostics["fitted_nu"] = quasi.nu;
      }
    } catch (const riccheck::error& ex) {
      setup_error = ex.what();
    }
  }

  if (!setup_error.empty()) {
    PointResult pr;
    pr.p = ChartPoint::Zero(std::max(1, s.dim));
    pr.domain_error = true;
    pr.error = setup_error;
    out.points.push_back(std::move(pr));
    out.errors = 1;
    out.status = "inconclusive";
    out.satisfied = false;
    return out;
  }

  for (std::size_t i = 0; i < pts.size(); ++i) {
    PointResult pr;
    pr.p = pts[i];
    try {
      const ChartPoint& p = pts[i];
      if (checker == "soliton") {
        pr.residual = geom::metric_op_norm(
            residuals::soliton_residual(s.g, conf.f, conf.lambda, p), s.g.values_at(p));
      } else if (checker == "soliton_scalar") {
        pr.residual =
            std::abs(residuals::soliton_scalar_residual(s.g, conf.f, conf.lambda, conf.a, p));
      } else if (checker == "conf_soliton") {
        pr.residual =
            geom::metric_op_norm(residuals::conf_soliton_residual(conf, p), s.g.values_at(p));
      } else if (checker == "conf_scalar") {
        pr.residual = std::abs(residuals::conf_scalar_residual(conf, p));
      } else if (checker == "conf_transport") {
        pr.residual = conf_transport_defect(s, p);
      } else if (checker == "conformal_formulas") {
        pr.residual = conformal_formulas_defect(s, p);
      } else if (checker == "lie_form") {
        Eigen::MatrixXd d =
            residuals::lie_form_residual(conf, p) - residuals::conf_soliton_residual(conf, p);
        pr.residual = geom::metric_op_norm(d, s.g.values_at(p));
      } else if (checker == "two_form") {
        residuals::TwoFormResidual t = residuals::two_form_residual(conf, p);
        Eigen::MatrixXd d = t.tensor - residuals::conf_soliton_residual(conf, p);
        pr.residual = std::max(geom::metric_op_norm(d, s.g.values_at(p)),
                               std::abs(t.gamma - residuals::conf_gamma(conf, p)));
      } else if (checker == "hermitian") {
        pr.residual = hermitian_checker(s, p);
      } else if (checker == "killing" || checker == "conformal_field" ||
                 checker == "commutator_inv" || checker == "holomorphy") {
        pr.residual = classifier_norm(checker, s, p);
      } else if (checker == "span_alignment") {
        pr.residual = residuals::span_alignment(s.v, s.w, s.J, s.g, p);
      } else if (checker == "quasi_soliton") {
        pr.residual = quasi_defect(quasi, p, fpts[i]);
      } else if (checker == "special_qs") {
        pr.residual = geom::metric_op_norm(
            residuals::special_qs_residual(quasi, s.warp_profile, p),
            quasi.wp.base.values_at(p));
      } else if (checker == "warped_blocks") {
        pr.residual = warped_blocks_defect(s, p, fpts[i]);
      } else if (checker == "ricci_hessian") {
        pr.residual =
            geom::metric_op_norm(residuals::ricci_hessian_residual(s.rh, p), s.g.values_at(p));
      } else if (checker == "rels_wedge") {
        pr.residual = rels_wedge_defect(s, p);
      } else if (checker == "gamma_formula") {
        pr.residual = std::abs(residuals::gamma_formula_defect(s.rh, p));
      } else if (checker == "kahler_invariants") {
        pr.residual = kahler_invariants_defect(s, p);
      } else if (checker == "prop_dy") {
        pr.residual = prop_dy_defect(s, p);
      } else {
        throw usage_error("unknown checker: " + checker);
      }
    } catch (const riccheck::usage_error&) {
      throw;
    } catch (const riccheck::error& ex) {
      pr.domain_error = true;
      pr.error = ex.what();
    }
    out.points.push_back(std::move(pr));
  }

  out.max_residual = 0.0;
  for (const auto& pr : out.points) {
    if (pr.domain_error)
      ++out.errors;
    else
      out.max_residual = std::max(out.max_residual, pr.residual);
  }
  if (out.errors > 0) {
    out.status = "inconclusive";
    out.satisfied = false;
  } else if (out.expect_pass) {
    out.status = out.max_residual < out.threshold ? "pass" : "fail";
    out.satisfied = out.max_residual < out.threshold;
  } else {
    out.status = out.max_residual >= out.threshold ? "fail" : "pass";
    out.satisfied = out.max_residual >= out.threshold;
  }
  return out;
}

RunReport run_verify(const RunConfig& cfg) {
  std::deque<Scenario> owned;
  std::vector<const Scenario*> scen;
  for (const auto& id : cfg.scenario_ids) scen.push_back(&gallery::build(id));
  for (const auto& path : cfg.scenario_files) {
    owned.push_back(parse_scenario_file(path));
    scen.push_back(&owned.back());
  }
  if (scen.empty())
    for (const auto& id : gallery::catalog_ids()) scen.push_back(&gallery::build(id));

  const double default_tol = cfg.tol > 0 ? cfg.tol : 1e-8;
  RunReport rep;
  for (const Scenario* s : scen) {
    if (!cfg.checkers.empty()) {
      for (const auto& c : cfg.checkers) {
        if (!is_checker(c)) throw usage_error("unknown checker: " + c);
        if (!checker_applies(c, *s))
          throw usage_error("checker " + c + " does not apply to scenario " + s->id);
        gallery::Expectation e;
        bool declared = false;
        if (const gallery::Expectation* d = s->expectation_for(c)) {
          e = *d;
          declared = true;
        } else {
          e.checker = c;
          e.expect_pass = true;
          e.tol = default_tol;
        }
        if (cfg.require_pass && !e.expect_pass) {
          e.expect_pass = true;
          e.tol = default_tol;
        }
        if (cfg.tol > 0 && e.expect_pass) e.tol = cfg.tol;
        rep.outcomes.push_back(run_checker(*s, c, e, declared, cfg.points, cfg.seed));
      }
    } else {
      for (const auto& d : s->expected) {
        gallery::Expectation e = d;
        if (cfg.require_pass && !e.expect_pass) {
          e.expect_pass = true;
          e.tol = default_tol;
        }
        if (cfg.tol > 0 && e.expect_pass) e.tol = cfg.tol;
        rep.outcomes.push_back(run_checker(*s, e.checker, e, true, cfg.points, cfg.seed));
      }
    }
  }

  rep.expectations = static_cast<int>(rep.outcomes.size());
  for (const auto& o : rep.outcomes) {
    if (o.satisfied) ++rep.satisfied;
    if (o.status == "inconclusive") ++rep.inconclusive;
  }
  if (rep.inconclusive > 0)
    rep.exit_code = 3;
  else if (rep.satisfied < rep.expectations)
    rep.exit_code = 1;
  else
    rep.exit_code = 0;
  return rep;
}

std::vector<IdentityLine> identity_suite() {
  using diffalg::DiffRat;
  namespace gen = diffalg::gen;
  auto ri = [](long v) { return DiffRat::integer(v); };
  DiffRat x = DiffRat::variable(gen::x);
  DiffRat c = DiffRat::variable(gen::c);
  DiffRat m = DiffRat::variable(gen::m);

  std::vector<IdentityLine> lines;
  auto plain = diffalg::delem_quantities(diffalg::first_order_reduction_symbolic(false));
  lines.push_back({"plain reduction: elimination denominator", plain.first.str(),
                   plain.first.str() == "x^2*al1 - 2*x*c*al1 + c^2*al1"});
  lines.push_back({"plain reduction: elimination numerator", plain.second.str(),
                   plain.second.is_zero()});

  auto conf = diffalg::delem_quantities(diffalg::first_order_reduction_symbolic(true));
  DiffRat xc = x - c;
  DiffRat x2c = x - ri(2) * c;
  DiffRat target = xc * xc *
                   (x2c * x * DiffRat::alpha(1) + ri(2) * xc * DiffRat::alpha(0) + ri(2) -
                    ri(2) * m) /
                   (x * x2c);
  lines.push_back({"conformal reduction: denominator carries the coefficient equation",
                   conf.first.str(), conf.first == target});
  lines.push_back({"conformal reduction: elimination numerator", conf.second.str(),
                   conf.second.is_zero()});

  DiffRat fam = diffalg::alpha_family_symbolic();
  DiffRat ode = diffalg::alpha_ode_symbolic();
  lines.push_back({"coefficient family solves its equation", fam.str(),
                   substitute_alpha(ode, fam).is_zero()});
  DiffRat collapsed = substitute_alpha(conf.first, fam);
  lines.push_back({"family collapses the conformal denominator", collapsed.str(),
                   collapsed.is_zero()});

  DiffRat r = (x * x - c * c) / (x * (x - ri(2) * c));
  bool serial_ok = r.str() == "(x^2 - c^2)/(x^2 - 2*x*c)" &&
                   (ri(7) * m * m).str() == "7*m^2" && (-x).str() == "-x";
  lines.push_back({"canonical serialization forms", r.str(), serial_ok});
  return lines;
}

std::vector<SweepRow> run_sweep(const std::string& scenario_id, const std::string& checker,
                                const std::string& param, double from, double to, int steps,
                                int points, unsigned seed, double tol) {
  if (steps < 1) throw usage_error("sweep needs at least one step");
  if (!is_checker(checker)) throw usage_error("unknown checker: " + checker);
  const Scenario& base = gallery::build(scenario_id);
  if (!checker_applies(checker, base))
    throw usage_error("checker " + checker + " does not apply to scenario " + scenario_id);
  if (param != "lambda" && param != "nu" && param != "a")
    throw usage_error("unknown sweep parameter: " + param + " (expect lambda, nu or a)");
  if (param == "nu" && !base.has_quasi)
    throw usage_error("parameter nu needs a warped scenario");
  if (param == "a" && !base.has_conf)
    throw usage_error("parameter a needs a soliton scenario");
  if (param == "lambda" && !(base.has_conf || base.has_quasi || base.has_rh))
    throw usage_error("parameter lambda does not act on scenario " + scenario_id);

  std::vector<SweepRow> rows;
  for (int i = 0; i < steps; ++i) {
    double v = steps == 1 ? from : from + (to - from) * i / (steps - 1);
    Scenario s = base;
    if (param == "lambda") {
      if (s.has_conf) s.conf.lambda = v;
      if (s.has_quasi) s.quasi.lambda = v;
      if (s.has_rh) s.rh.lambda = v;
    } else if (param == "nu") {
      s.quasi.nu = v;
      s.quasi.nu_given = true;
    } else {
      s.conf.a = v;
      s.conf.a_given = true;
    }
    gallery::Expectation e;
    e.checker = checker;
    e.expect_pass = true;
    e.tol = tol > 0 ? tol : 1e-8;
    CheckOutcome o = run_checker(s, checker, e, false, points, seed);
    rows.push_back({v, o.max_residual, o.status});
  }
  return rows;
}

}  // namespace riccheck::cli
