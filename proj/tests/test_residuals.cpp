#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "riccheck/construct/conformal.hpp"
#include "riccheck/construct/kahler.hpp"
#include "riccheck/residuals/classifiers.hpp"
#include "riccheck/residuals/quasi.hpp"
#include "riccheck/residuals/ricci_hessian.hpp"
#include "riccheck/residuals/soliton.hpp"

using namespace riccheck;
using geom::ChartPoint;
using geom::Jet;
using geom::JetMat;
using geom::JetVec;

namespace {

geom::MetricField flat_metric(int n) {
  geom::MetricField g;
  g.dim = n;
  g.fn = [n](const JetVec& x) {
    JetMat m(n, Jet::constant(x[0].dim(), x[0].order(), 0.0));
    for (int i = 0; i < n; ++i) m.at(i, i) = Jet::constant(x[0].dim(), x[0].order(), 1.0);
    return m;
  };
  return g;
}

geom::MetricField sphere_metric() {
  geom::MetricField g;
  g.dim = 2;
  g.fn = [](const JetVec& x) {
    Jet c = 4.0 * recip(pow(1.0 + x[0] * x[0] + x[1] * x[1], 2));
    JetMat m(2, Jet::constant(x[0].dim(), x[0].order(), 0.0));
    m.at(0, 0) = c;
    m.at(1, 1) = c;
    return m;
  };
  return g;
}

geom::MetricField cigar_metric() {
  geom::MetricField g;
  g.dim = 2;
  g.fn = [](const JetVec& x) {
    Jet c = recip(1.0 + x[0] * x[0] + x[1] * x[1]);
    JetMat m(2, Jet::constant(x[0].dim(), x[0].order(), 0.0));
    m.at(0, 0) = c;
    m.at(1, 1) = c;
    return m;
  };
  return g;
}

geom::MetricField bumpy_metric3() {
  geom::MetricField g;
  g.dim = 3;
  g.fn = [](const JetVec& x) {
    JetMat m(3, Jet::constant(x[0].dim(), x[0].order(), 0.0));
    m.at(0, 0) = 1.0 + 0.2 * sin(x[1]);
    m.at(1, 1) = 1.0 + 0.1 * exp(0.3 * x[0]);
    m.at(2, 2) = 1.0 + 0.15 * cosh(0.2 * (x[0] + x[2]));
    m.at(0, 1) = 0.05 * x[2];
    m.at(1, 0) = m.at(0, 1);
    m.at(1, 2) = 0.04 * sin(x[0] + x[1]);
    m.at(2, 1) = m.at(1, 2);
    return m;
  };
  return g;
}

geom::ScalarField scalar(int n, std::function<Jet(const JetVec&)> f) {
  geom::ScalarField s;
  s.dim = n;
  s.fn = std::move(f);
  return s;
}

geom::VectorField vector_field(int n, std::function<JetVec(const JetVec&)> f) {
  geom::VectorField v;
  v.dim = n;
  v.fn = std::move(f);
  return v;
}

Jet radial2(const JetVec& x) {
  Jet s(x[0].dim(), x[0].order(), 0.0);
  for (const auto& xi : x) s += xi * xi;
  return s;
}

double frob(const Eigen::MatrixXd& m) { return m.norm(); }

}  // namespace

TEST_CASE("gaussian soliton is exact") {
  int n = 3;
  double lambda = 1.0;
  auto g = flat_metric(n);
  auto f = scalar(n, [lambda](const JetVec& x) { return 0.5 * lambda * radial2(x); });
  ChartPoint pts[2];
  pts[0] = ChartPoint(3);
  pts[0] << 0.4, -0.2, 0.9;
  pts[1] = ChartPoint(3);
  pts[1] << -1.1, 0.3, 0.0;
  for (const auto& p : pts) {
    CHECK(frob(residuals::soliton_residual(g, f, lambda, p)) < 1e-12);
    CHECK(std::abs(residuals::soliton_scalar_residual(g, f, lambda, n * lambda, p)) < 1e-12);
  }
  CHECK(residuals::fit_soliton_constant(g, f, lambda, pts[0]) ==
        doctest::Approx(n * lambda).epsilon(1e-12));
}

TEST_CASE("einstein metric is a trivial soliton") {
  auto g = sphere_metric();
  ChartPoint p(2);
  p << 0.5, -0.3;
  CHECK(frob(residuals::soliton_residual(g, geom::ScalarField{}, 1.0, p)) < 1e-10);
  auto fc = scalar(2, [](const JetVec& x) { return Jet::constant(x[0].dim(), x[0].order(), 0.7); });
  CHECK(std::abs(residuals::soliton_scalar_residual(g, fc, 1.0, 2.0 * 1.0 * 0.7, p)) < 1e-11);
}

TEST_CASE("cigar is a steady soliton with constant scalar charge") {
  auto g = cigar_metric();
  auto f = scalar(2, [](const JetVec& x) { return -log(1.0 + x[0] * x[0] + x[1] * x[1]); });
  ChartPoint anchor(2);
  anchor << 0.3, 0.4;
  double astar = residuals::fit_soliton_constant(g, f, 0.0, anchor);
  CHECK(astar == doctest::Approx(-4.0).epsilon(1e-10));
  ChartPoint pts[3];
  pts[0] = ChartPoint(2);
  pts[0] << 1.2, -0.5;
  pts[1] = ChartPoint(2);
  pts[1] << -0.1, 0.05;
  pts[2] = ChartPoint(2);
  pts[2] << 2.0, 1.5;
  for (const auto& p : pts) {
    CHECK(frob(residuals::soliton_residual(g, f, 0.0, p)) < 1e-9);
    CHECK(std::abs(residuals::soliton_scalar_residual(g, f, 0.0, astar, p)) < 1e-8);
  }
}

namespace {

residuals::ConformalSolitonScenario random_scenario() {
  residuals::ConformalSolitonScenario s;
  s.g = bumpy_metric3();
  s.tau = scalar(3, [](const JetVec& x) { return 1.0 + 0.3 * exp(0.2 * x[0]) + 0.1 * sin(x[1]); });
  s.f = scalar(3, [](const JetVec& x) { return 0.4 * x[0] * x[2] + 0.2 * cos(x[1]); });
  s.lambda = 0.7;
  s.a = 0.0;
  s.dim = 3;
  return s;
}

}  // namespace

TEST_CASE("conformal residual equals the soliton residual of the rescaled metric") {
  auto s = random_scenario();
  auto pair = construct::conformal_rescale(s.g, s.tau);
  ChartPoint pts[2];
  pts[0] = ChartPoint(3);
  pts[0] << 0.3, -0.4, 0.2;
  pts[1] = ChartPoint(3);
  pts[1] << -0.6, 0.1, 0.5;
  for (const auto& p : pts) {
    Eigen::MatrixXd direct = residuals::soliton_residual(pair.ghat, s.f, s.lambda, p);
    Eigen::MatrixXd conf = residuals::conf_soliton_residual(s, p);
    CHECK(frob(conf - direct) < 1e-10);
    // same matrix, so the operator norms differ by the conformal factor squared
    double t = s.tau.value_at(p);
    double ng = geom::metric_op_norm(direct, pair.ghat.values_at(p));
    double ngh = geom::metric_op_norm(direct, s.g.values_at(p));
    CHECK(ng == doctest::Approx(t * t * ngh).epsilon(1e-9));
  }
}

TEST_CASE("three organizations of the conformal equation agree off shell") {
  auto s = random_scenario();
  ChartPoint pts[2];
  pts[0] = ChartPoint(3);
  pts[0] << 0.25, 0.4, -0.3;
  pts[1] = ChartPoint(3);
  pts[1] << -0.2, -0.5, 0.6;
  for (const auto& p : pts) {
    Eigen::MatrixXd conf = residuals::conf_soliton_residual(s, p);
    Eigen::MatrixXd lie = residuals::lie_form_residual(s, p);
    auto two = residuals::two_form_residual(s, p);
    CHECK(frob(conf - lie) < 1e-10);
    CHECK(frob(conf - two.tensor) < 1e-10);
    CHECK(two.gamma == doctest::Approx(residuals::conf_gamma(s, p)).epsilon(1e-12));
    CHECK(residuals::conf_scalar_residual(s, p) == doctest::Approx(two.scalar).epsilon(1e-11));
  }
}

TEST_CASE("unit factor reduces the conformal forms to the plain soliton") {
  residuals::ConformalSolitonScenario s;
  s.g = bumpy_metric3();
  s.f = scalar(3, [](const JetVec& x) { return 0.3 * x[0] + 0.2 * x[1] * x[2]; });
  s.lambda = 0.5;
  s.dim = 3;
  ChartPoint p(3);
  p << 0.2, -0.3, 0.4;
  Eigen::MatrixXd plain = residuals::soliton_residual(s.g, s.f, s.lambda, p);
  CHECK(frob(residuals::conf_soliton_residual(s, p) - plain) < 1e-12);
  CHECK(frob(residuals::lie_form_residual(s, p) - plain) < 1e-10);
  CHECK(frob(residuals::two_form_residual(s, p).tensor - plain) < 1e-11);
  CHECK(residuals::conf_gamma(s, p) == doctest::Approx(s.lambda));
  auto triple = residuals::derived_potentials(s, p);
  CHECK(triple(0) == doctest::Approx(0.0));
  CHECK(triple(1) == doctest::Approx(s.f.value_at(p)));
}

TEST_CASE("constant shifts of the potential move only the scalar charge") {
  auto g = cigar_metric();
  auto f = scalar(2, [](const JetVec& x) { return -log(1.0 + x[0] * x[0] + x[1] * x[1]); });
  double c = 1.7, lambda = 0.4;
  auto f_shift = scalar(2, [f, c](const JetVec& x) { return f.fn(x) + c; });
  ChartPoint p(2);
  p << 0.6, -0.2;
  CHECK(frob(residuals::soliton_residual(g, f, lambda, p) -
             residuals::soliton_residual(g, f_shift, lambda, p)) < 1e-12);
  double a0 = residuals::fit_soliton_constant(g, f, lambda, p);
  double a1 = residuals::fit_soliton_constant(g, f_shift, lambda, p);
  CHECK(a1 - a0 == doctest::Approx(2.0 * lambda * c).epsilon(1e-10));
}

TEST_CASE("sphere chart conformal to the flat plane is on shell") {
  residuals::ConformalSolitonScenario s;
  s.g = sphere_metric();
  // tau^-2 g = delta
  s.tau = scalar(2, [](const JetVec& x) { return 2.0 * recip(1.0 + x[0] * x[0] + x[1] * x[1]); });
  s.lambda = 0.0;
  s.dim = 2;
  ChartPoint pts[2];
  pts[0] = ChartPoint(2);
  pts[0] << 0.4, 0.1;
  pts[1] = ChartPoint(2);
  pts[1] << -0.8, 0.6;
  for (const auto& p : pts) {
    CHECK(frob(residuals::conf_soliton_residual(s, p)) < 1e-8);
    CHECK(std::abs(residuals::conf_scalar_residual(s, p)) < 1e-10);
  }
}

TEST_CASE("classical fields hit their classifiers") {
  int n = 4;
  auto g = flat_metric(n);
  auto J = construct::standard_complex_structure(2);
  ChartPoint p(4);
  p << 0.3, -0.2, 0.5, 0.1;

  auto rotation = vector_field(4, [](const JetVec& x) {
    return JetVec{-x[1], x[0], Jet::constant(x[0].dim(), x[0].order(), 0.0),
                  Jet::constant(x[0].dim(), x[0].order(), 0.0)};
  });
  CHECK(residuals::killing_residual(rotation, g, p) < 1e-12);
  CHECK(residuals::conformal_field_residual(rotation, g, p) < 1e-12);
  CHECK(residuals::commutator_residual(rotation, J, g, p) < 1e-12);

  auto euler = vector_field(4, [](const JetVec& x) { return x; });
  CHECK(residuals::killing_residual(euler, g, p) == doctest::Approx(2.0));
  CHECK(residuals::conformal_field_residual(euler, g, p) < 1e-12);
  CHECK(residuals::holomorphy_residual(euler, J, g, p) < 1e-12);
  CHECK(residuals::commutator_residual(euler, J, g, p) < 1e-12);

  auto shear = vector_field(4, [](const JetVec& x) {
    Jet zero = Jet::constant(x[0].dim(), x[0].order(), 0.0);
    return JetVec{x[0] * x[1], zero, zero, zero};
  });
  CHECK(residuals::killing_residual(shear, g, p) > 1e-3);
  CHECK(residuals::conformal_field_residual(shear, g, p) > 1e-3);
}

TEST_CASE("hermitian defect separates invariant from generic tensors") {
  Eigen::MatrixXd j(4, 4);
  j.setZero();
  j(0, 1) = -1;
  j(1, 0) = 1;
  j(2, 3) = -1;
  j(3, 2) = 1;
  Eigen::MatrixXd g = Eigen::MatrixXd::Identity(4, 4);
  CHECK(residuals::hermitian_defect(g, j) < 1e-15);
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(4, 4);
  t(0, 0) = 1.0;  // dtau (x) dtau for tau = x1
  CHECK(residuals::hermitian_defect(t, j) > 0.5);

  // combined Lie term of a gradient scenario on a flat Kahler chart
  residuals::ConformalSolitonScenario s;
  s.g = flat_metric(4);
  s.f = scalar(4, [](const JetVec& x) { return 0.5 * radial2(x); });
  s.lambda = 1.0;
  s.dim = 4;
  ChartPoint p(4);
  p << 0.2, -0.4, 0.6, 0.3;
  CHECK(residuals::hermitian_defect(residuals::combined_lie_term(s, p), j) < 1e-10);
}

TEST_CASE("span alignment distinguishes planes") {
  Eigen::MatrixXd j(4, 4);
  j.setZero();
  j(0, 1) = -1;
  j(1, 0) = 1;
  j(2, 3) = -1;
  j(3, 2) = 1;
  Eigen::MatrixXd g = Eigen::MatrixXd::Identity(4, 4);
  Eigen::VectorXd v(4), w(4), u(4);
  v << 1, 0, 0, 0;
  w << 2, 1, 0, 0;  // 2v + Jv
  u << 0, 0, 1, 0;
  CHECK(residuals::span_alignment(v, w, j, g) < 1e-12);
  CHECK(residuals::span_alignment(v, Eigen::VectorXd(j * v), j, g) < 1e-12);
  CHECK(residuals::span_alignment(v, u, j, g) > 0.1);
  Eigen::VectorXd zero = Eigen::VectorXd::Zero(4);
  CHECK_THROWS_AS(residuals::span_alignment(v, zero, j, g), precondition_error);
}

TEST_CASE("hyperbolic warped scenario satisfies the quasi-soliton system") {
  for (int k : {2, 3}) {
    residuals::QuasiSolitonScenario q;
    auto ell = scalar(1, [](const JetVec& x) { return exp(x[0]); });
    q.wp = construct::warped_product(flat_metric(1), flat_metric(k), ell);
    q.lambda = -k;
    q.nu = 0.0;
    ChartPoint pb(1), pf(k);
    pb << 0.4;
    for (int i = 0; i < k; ++i) pf(i) = 0.2 * i - 0.1;
    auto r = residuals::quasi_soliton_residual(q, pb, pf);
    CHECK(frob(r.base) < 1e-9);
    CHECK(frob(r.fiber) < 1e-9);
    CHECK(std::abs(r.scalar) < 1e-9);
    CHECK(residuals::fit_fiber_constant(q, pb) == doctest::Approx(0.0).epsilon(1e-10));
  }
}

TEST_CASE("unit warp decouples into base soliton and fiber einstein") {
  residuals::QuasiSolitonScenario q;
  auto one = scalar(2, [](const JetVec& x) { return Jet::constant(x[0].dim(), x[0].order(), 1.0); });
  q.wp = construct::warped_product(flat_metric(2), sphere_metric(), one);
  q.f = scalar(2, [](const JetVec& x) { return 0.5 * radial2(x); });
  q.lambda = 1.0;
  q.nu = 1.0;  // = lambda when the warp is 1
  ChartPoint pb(2), pf(2);
  pb << 0.3, -0.6;
  pf << 0.2, 0.4;
  auto r = residuals::quasi_soliton_residual(q, pb, pf);
  CHECK(frob(r.base) < 1e-10);
  CHECK(frob(r.fiber) < 1e-10);
  CHECK(std::abs(r.scalar) < 1e-12);
}

TEST_CASE("cigar as a warped product over the half line") {
  residuals::QuasiSolitonScenario q;
  auto ell = scalar(1, [](const JetVec& x) { return tanh(x[0]); });
  q.wp = construct::warped_product(flat_metric(1), flat_metric(1), ell);
  q.f = scalar(1, [](const JetVec& x) { return -2.0 * log(cosh(x[0])); });
  q.lambda = 0.0;
  q.nu = 0.0;
  for (double r0 : {0.3, 0.8, 1.5}) {
    ChartPoint pb(1), pf(1);
    pb << r0;
    pf << 0.7;
    auto r = residuals::quasi_soliton_residual(q, pb, pf);
    CHECK(frob(r.base) < 1e-8);
    CHECK(frob(r.fiber) < 1e-10);
    CHECK(std::abs(r.scalar) < 1e-8);

    // independent oracle: the product-chart soliton residual of gbar
    auto fp = residuals::pullback_to_product(q.f, 1, 2);
    ChartPoint p = q.wp.join(pb, pf);
    CHECK(frob(residuals::soliton_residual(q.wp.total, fp, 0.0, p)) < 1e-8);
  }

  // profile form: f = log(1 - ell^2)
  skr::Profile prof;
  prof.fn = [](const Jet& t) { return log(1.0 - t * t); };
  ChartPoint pb(1);
  pb << 0.9;
  Eigen::MatrixXd special = residuals::special_qs_residual(q, prof, pb);
  CHECK(frob(special) < 1e-9);
  auto blocks = residuals::quasi_soliton_residual(q, pb, (ChartPoint(1) << 0.2).finished());
  CHECK(frob(special - blocks.base) < 1e-10);
}

TEST_CASE("special form rejects a potential that is not warp dependent") {
  residuals::QuasiSolitonScenario q;
  auto ell = scalar(2, [](const JetVec& x) { return 1.0 + x[0] * x[0]; });
  q.wp = construct::warped_product(flat_metric(2), flat_metric(1), ell);
  q.f = scalar(2, [](const JetVec& x) { return x[1]; });
  skr::Profile prof = skr::identity_profile();
  ChartPoint pb(2);
  pb << 0.5, 0.3;
  CHECK_THROWS_AS(residuals::special_qs_residual(q, prof, pb), precondition_error);
}

TEST_CASE("warped blocks reassemble the product soliton residual") {
  residuals::QuasiSolitonScenario q;
  geom::MetricField gb;
  gb.dim = 2;
  gb.fn = [](const JetVec& x) {
    JetMat m(2, Jet::constant(x[0].dim(), x[0].order(), 0.0));
    m.at(0, 0) = 1.0 + 0.2 * sin(x[1]);
    m.at(1, 1) = 1.0 + 0.1 * exp(0.2 * x[0]);
    m.at(0, 1) = 0.03 * x[0];
    m.at(1, 0) = m.at(0, 1);
    return m;
  };
  auto ell = scalar(2, [](const JetVec& x) { return 1.0 + 0.3 * exp(-radial2(x)); });
  q.wp = construct::warped_product(gb, sphere_metric(), ell);
  q.f = scalar(2, [](const JetVec& x) { return sin(x[0]) + 0.2 * x[1]; });
  q.lambda = 0.3;
  q.nu = 0.8;

  ChartPoint pb(2), pf(2);
  pb << 0.4, -0.2;
  pf << 0.1, 0.5;
  auto r = residuals::quasi_soliton_residual(q, pb, pf);
  auto fp = residuals::pullback_to_product(q.f, 2, 4);
  Eigen::MatrixXd full =
      residuals::soliton_residual(q.wp.total, fp, q.lambda, q.wp.join(pb, pf));
  Eigen::MatrixXd gf = q.wp.fiber.values_at(pf);
  CHECK(frob(full.topLeftCorner(2, 2) - r.base) < 1e-9);
  CHECK(frob(full.bottomRightCorner(2, 2) - (r.fiber + r.scalar * gf)) < 1e-9);
  CHECK(frob(full.topRightCorner(2, 2)) < 1e-9);
}

TEST_CASE("flat radial data satisfies the ricci hessian equation and identities") {
  int n = 4;
  residuals::RicciHessianScenario r;
  r.g = flat_metric(n);
  r.sigma = scalar(n, [](const JetVec& x) { return radial2(x); });
  r.alpha = scalar(n, [](const JetVec& x) { return radial2(x); });
  r.gamma = scalar(n, [](const JetVec& x) { return 2.0 * radial2(x); });
  r.dim = n;
  ChartPoint pts[2];
  pts[0] = ChartPoint(4);
  pts[0] << 0.4, -0.2, 0.3, 0.5;
  pts[1] = ChartPoint(4);
  pts[1] << -0.6, 0.1, 0.2, -0.3;
  for (const auto& p : pts) {
    CHECK(frob(residuals::ricci_hessian_residual(r, p)) < 1e-11);
    auto ids = residuals::rels_wedge_identities(r, p);
    CHECK(ids.trace < 1e-10);
    CHECK(ids.d_trace < 1e-10);
    CHECK(ids.divergence < 1e-10);
    CHECK(ids.interior < 1e-10);
    CHECK(ids.wedge_a < 1e-10);
    CHECK(ids.wedge_b < 1e-10);
    CHECK(ids.wedge_c < 1e-10);
    CHECK_FALSE(ids.has_mu);
    auto dep = residuals::dependence_defects(r, p);
    CHECK(dep(0) < 1e-12);
    CHECK(dep(1) < 1e-12);
  }
}

TEST_CASE("einstein scenario with vanishing coefficient passes the identity chain") {
  int m = 2, n = 4;
  auto pot = scalar(n, [](const JetVec& x) { return log(1.0 + radial2(x)); });
  auto chart = construct::kahler_from_potential(m, pot);
  residuals::RicciHessianScenario r;
  r.g = chart.g;
  r.sigma = scalar(n, [](const JetVec& x) {
    Jet s = radial2(x);
    return s * recip(1.0 + s);
  });
  r.alpha = scalar(n, [](const JetVec& x) { return Jet::constant(x[0].dim(), x[0].order(), 0.0); });
  r.gamma = scalar(n, [](const JetVec& x) { return Jet::constant(x[0].dim(), x[0].order(), 6.0); });
  r.dim = n;
  ChartPoint p(4);
  p << 0.3, -0.25, 0.2, 0.15;
  CHECK(frob(residuals::ricci_hessian_residual(r, p)) < 1e-9);
  auto ids = residuals::rels_wedge_identities(r, p);
  CHECK(ids.trace < 1e-9);
  CHECK(ids.d_trace < 1e-8);
  CHECK(ids.divergence < 1e-8);
  CHECK(ids.interior < 1e-8);
  CHECK(ids.wedge_a < 1e-8);
  CHECK(ids.wedge_b < 1e-8);
  CHECK(ids.wedge_c < 1e-8);
}

TEST_CASE("gamma formula composes from the two form expression") {
  auto g = bumpy_metric3();
  auto sig = scalar(3, [](const JetVec& x) { return x[0] + 0.3 * x[1] * x[1] + 0.1 * sin(x[2]); });
  auto mu = scalar(3, [sig](const JetVec& x) {
    Jet s = sig.fn(x);
    return 0.3 * s + 0.1 * s * s;
  });
  auto alpha = scalar(3, [sig](const JetVec& x) { return cos(sig.fn(x)); });  // theta = sin(sigma)
  double lambda = 0.6;
  auto gfn = g.fn;
  auto gamma = scalar(3, [gfn, sig, mu, lambda](const JetVec& x) {
    JetMat gj = gfn(x);
    Jet mj = mu.fn(x);
    Jet theta = sin(sig.fn(x));
    Jet lap_mu = geom::laplacian(mj, gj);
    Jet cross = geom::inner_covec(geom::differential(theta), geom::differential(mj),
                                  geom::inverse(gj));
    return lambda * exp(-2.0 * mj) - lap_mu + cross;
  });
  residuals::RicciHessianScenario r;
  r.g = g;
  r.sigma = sig;
  r.alpha = alpha;
  r.gamma = gamma;
  r.mu = mu;
  r.lambda = lambda;
  r.dim = 3;
  ChartPoint pts[2];
  pts[0] = ChartPoint(3);
  pts[0] << 0.3, -0.2, 0.4;
  pts[1] = ChartPoint(3);
  pts[1] << -0.5, 0.35, 0.1;
  for (const auto& p : pts) CHECK(residuals::gamma_formula_defect(r, p) < 1e-9);
}

TEST_CASE("dependence defects flag spatially independent coefficients") {
  residuals::RicciHessianScenario r;
  r.g = flat_metric(2);
  r.sigma = scalar(2, [](const JetVec& x) { return x[0]; });
  r.alpha = scalar(2, [](const JetVec& x) { return x[1]; });
  r.gamma = scalar(2, [](const JetVec& x) { return exp(x[0]); });
  r.dim = 2;
  ChartPoint p(2);
  p << 0.2, 0.7;
  auto dep = residuals::dependence_defects(r, p);
  CHECK(dep(0) > 0.5);
  CHECK(dep(1) < 1e-12);
}
