#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "riccheck/construct/conformal.hpp"
#include "riccheck/construct/kahler.hpp"
#include "riccheck/construct/warped.hpp"
#include "riccheck/geom/calculus.hpp"

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

// Round 2-sphere in stereographic coordinates: 4 (1+|x|^2)^-2 delta.
geom::MetricField sphere_metric() {
  geom::MetricField g;
  g.dim = 2;
  g.fn = [](const JetVec& x) {
    Jet r2 = x[0] * x[0] + x[1] * x[1];
    Jet c = 4.0 * recip((1.0 + r2) * (1.0 + r2));
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

double frob(const Eigen::MatrixXd& m) { return m.norm(); }

}  // namespace

TEST_CASE("conformal rescale identity and inversion round trip") {
  auto g = bumpy_metric3();
  auto one = scalar(3, [](const JetVec& x) { return Jet::constant(x[0].dim(), x[0].order(), 1.0); });
  auto pair = construct::conformal_rescale(g, one);
  ChartPoint p(3);
  p << 0.3, -0.2, 0.5;
  CHECK(frob(pair.ghat.values_at(p) - g.values_at(p)) < 1e-15);

  auto tau = scalar(3, [](const JetVec& x) { return exp(0.3 * x[0]) + 0.1 * sin(x[1] + x[2]); });
  auto fwd = construct::conformal_rescale(g, tau);
  auto inv_tau = scalar(3, [tau](const JetVec& x) { return recip(tau.fn(x)); });
  auto back = construct::conformal_rescale(fwd.ghat, inv_tau);
  JetMat orig = g.at(p, 3);
  JetMat rt = back.ghat.at(p, 3);
  double worst = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        worst = std::max(worst, std::abs(orig.at(i, j).d2(k, k) - rt.at(i, j).d2(k, k)));
  CHECK(frob(rt.a[0].value() * Eigen::MatrixXd::Identity(1, 1)) >= 0);  // evaluated fine
  CHECK(frob(geom::values(orig) - geom::values(rt)) < 1e-12);
  CHECK(worst < 1e-12);
}

TEST_CASE("conformal rescale rejects nonpositive factor") {
  auto g = flat_metric(2);
  auto tau = scalar(2, [](const JetVec& x) { return x[1]; });
  auto pair = construct::conformal_rescale(g, tau);
  ChartPoint bad(2);
  bad << 0.0, -1.0;
  CHECK_THROWS_AS(pair.ghat.values_at(bad), field_domain_error);
  ChartPoint ok(2);
  ok << 0.0, 2.0;
  Eigen::MatrixXd v = pair.ghat.values_at(ok);
  CHECK(v(0, 0) == doctest::Approx(0.25));
}

TEST_CASE("rescaled flat plane reproduces sphere and hyperbolic charts") {
  auto g = flat_metric(2);
  auto tau_s = scalar(2, [](const JetVec& x) { return 0.5 * (1.0 + x[0] * x[0] + x[1] * x[1]); });
  auto sph = construct::conformal_rescale(g, tau_s);
  auto round = sphere_metric();
  ChartPoint p(2);
  p << 0.4, -0.7;
  CHECK(frob(sph.ghat.values_at(p) - round.values_at(p)) < 1e-14);

  auto tau_h = scalar(2, [](const JetVec& x) { return x[1]; });
  auto hyp = construct::conformal_rescale(g, tau_h);
  ChartPoint q(2);
  q << 0.3, 0.8;
  Eigen::MatrixXd hv = hyp.ghat.values_at(q);
  CHECK(hv(0, 0) == doctest::Approx(1.0 / 0.64));
  CHECK(hv(0, 1) == doctest::Approx(0.0));
}

TEST_CASE("ricci formula matches direct computation") {
  ChartPoint pts2[2];
  pts2[0] = ChartPoint(2);
  pts2[0] << 0.4, -0.3;
  pts2[1] = ChartPoint(2);
  pts2[1] << -0.9, 0.2;

  auto g2 = flat_metric(2);
  auto tau_s = scalar(2, [](const JetVec& x) { return 0.5 * (1.0 + x[0] * x[0] + x[1] * x[1]); });
  auto sph = construct::conformal_rescale(g2, tau_s);
  for (const auto& p : pts2) {
    Eigen::MatrixXd predicted = construct::conformal_ricci_rhs(g2, tau_s, p);
    Eigen::MatrixXd direct = geom::values(geom::ricci(sph.ghat.at(p, 3)));
    CHECK(frob(predicted - direct) < 1e-8);
    // round sphere: Ric = +ghat
    CHECK(frob(direct - sph.ghat.values_at(p)) < 1e-10);
  }

  auto tau_h = scalar(2, [](const JetVec& x) { return x[1]; });
  auto hyp = construct::conformal_rescale(g2, tau_h);
  ChartPoint q(2);
  q << 0.1, 1.7;
  Eigen::MatrixXd pred_h = construct::conformal_ricci_rhs(g2, tau_h, q);
  Eigen::MatrixXd dir_h = geom::values(geom::ricci(hyp.ghat.at(q, 3)));
  CHECK(frob(pred_h - dir_h) < 1e-8);
  CHECK(frob(dir_h + hyp.ghat.values_at(q)) < 1e-10);

  // n = 3 with a curved background metric exercises the (n-2) term.
  auto g3 = bumpy_metric3();
  auto tau3 = scalar(3, [](const JetVec& x) {
    return 1.0 + 0.2 * exp(0.4 * x[0]) + 0.1 * sin(x[1]) * cos(x[2]);
  });
  auto cp3 = construct::conformal_rescale(g3, tau3);
  ChartPoint r(3);
  r << 0.25, -0.5, 0.35;
  Eigen::MatrixXd pred3 = construct::conformal_ricci_rhs(g3, tau3, r);
  Eigen::MatrixXd dir3 = geom::values(geom::ricci(cp3.ghat.at(r, 3)));
  CHECK(frob(pred3 - dir3) < 1e-8);
}

TEST_CASE("hessian and laplacian formulas match direct computation") {
  auto g2 = flat_metric(2);
  auto tau_s = scalar(2, [](const JetVec& x) { return 0.5 * (1.0 + x[0] * x[0] + x[1] * x[1]); });
  auto sph = construct::conformal_rescale(g2, tau_s);
  ChartPoint p(2);
  p << 0.6, -0.2;

  // f = tau itself
  Eigen::MatrixXd pred = construct::conformal_hessian_rhs(g2, tau_s, tau_s, p);
  JetMat gh = sph.ghat.at(p, 3);
  Eigen::MatrixXd direct = geom::values(geom::hessian(tau_s.at(p, 3), gh));
  CHECK(frob(pred - direct) < 1e-8);
  double lap_pred = construct::conformal_laplacian_rhs(g2, tau_s, tau_s, p);
  double lap_dir = geom::laplacian(tau_s.at(p, 3), gh).value();
  CHECK(std::abs(lap_pred - lap_dir) < 1e-8);

  // linear f on a curved 3d background
  auto g3 = bumpy_metric3();
  auto tau3 = scalar(3, [](const JetVec& x) { return 1.0 + 0.3 * cosh(0.3 * x[0]) + 0.1 * x[1]; });
  auto f3 = scalar(3, [](const JetVec& x) { return 0.7 * x[0] - 1.2 * x[2] + 0.4 * sin(x[1]); });
  auto cp3 = construct::conformal_rescale(g3, tau3);
  ChartPoint r(3);
  r << -0.3, 0.45, 0.2;
  Eigen::MatrixXd pred3 = construct::conformal_hessian_rhs(g3, tau3, f3, r);
  JetMat gh3 = cp3.ghat.at(r, 3);
  Eigen::MatrixXd dir3 = geom::values(geom::hessian(f3.at(r, 3), gh3));
  CHECK(frob(pred3 - dir3) < 1e-8);
  double lp3 = construct::conformal_laplacian_rhs(g3, tau3, f3, r);
  double ld3 = geom::laplacian(f3.at(r, 3), gh3).value();
  CHECK(std::abs(lp3 - ld3) < 1e-8);
}

TEST_CASE("trivial factor reduces formulas to plain operators") {
  auto g = bumpy_metric3();
  auto one = scalar(3, [](const JetVec& x) { return Jet::constant(x[0].dim(), x[0].order(), 1.0); });
  auto f = scalar(3, [](const JetVec& x) { return sin(x[0]) * x[1] + x[2] * x[2]; });
  ChartPoint p(3);
  p << 0.2, 0.3, -0.4;
  JetMat gj = g.at(p, 3);
  CHECK(frob(construct::conformal_ricci_rhs(g, one, p) - geom::values(geom::ricci(gj))) < 1e-13);
  CHECK(frob(construct::conformal_hessian_rhs(g, one, f, p) -
             geom::values(geom::hessian(f.at(p, 3), gj))) < 1e-13);
  CHECK(std::abs(construct::conformal_laplacian_rhs(g, one, f, p) -
                 geom::laplacian(f.at(p, 3), gj).value()) < 1e-13);
}

TEST_CASE("warped product of line and flat fiber is hyperbolic space") {
  for (int k : {2, 3}) {
    auto gb = flat_metric(1);
    auto gf = flat_metric(k);
    auto ell = scalar(1, [](const JetVec& x) { return exp(x[0]); });
    auto wp = construct::warped_product(gb, gf, ell);
    REQUIRE(wp.dim() == k + 1);
    ChartPoint p(k + 1);
    p(0) = 0.3;
    for (int i = 1; i <= k; ++i) p(i) = 0.1 * i;
    JetMat gj = wp.total.at(p, 3);
    Eigen::MatrixXd ric = geom::values(geom::ricci(gj));
    Eigen::MatrixXd gv = geom::values(gj);
    CHECK(geom::metric_op_norm(ric + k * gv, gv) < 1e-8);

    ChartPoint pb(1), pf(k);
    pb << 0.3;
    for (int i = 0; i < k; ++i) pf(i) = 0.1 * (i + 1);
    auto blocks = construct::warped_block_formulas(wp, geom::ScalarField{}, pb, pf);
    CHECK(blocks.ell_sharp == doctest::Approx(k).epsilon(1e-10));
    CHECK(blocks.ric_base(0, 0) == doctest::Approx(-k).epsilon(1e-10));
  }
}

TEST_CASE("warped product rejects nonpositive warp") {
  auto gb = flat_metric(1);
  auto gf = flat_metric(2);
  auto ell = scalar(1, [](const JetVec& x) { return x[0]; });
  auto wp = construct::warped_product(gb, gf, ell);
  ChartPoint p(3);
  p << -0.5, 0.1, 0.2;
  CHECK_THROWS_AS(wp.total.values_at(p), field_domain_error);
}

TEST_CASE("warped blocks match direct product-chart curvature") {
  geom::MetricField gb;
  gb.dim = 2;
  gb.fn = [](const JetVec& x) {
    JetMat m(2, Jet::constant(x[0].dim(), x[0].order(), 0.0));
    m.at(0, 0) = 1.0 + 0.2 * sin(x[1]);
    m.at(1, 1) = 1.0 + 0.1 * exp(0.2 * x[0]);
    m.at(0, 1) = 0.05 * x[0] * x[1];
    m.at(1, 0) = m.at(0, 1);
    return m;
  };
  auto gf = sphere_metric();
  auto ell = scalar(2, [](const JetVec& x) {
    return 1.0 + 0.3 * exp(-(x[0] * x[0] + x[1] * x[1]));
  });
  auto f = scalar(2, [](const JetVec& x) { return sin(x[0]) + 0.25 * x[1] * x[1]; });
  auto wp = construct::warped_product(gb, gf, ell);

  ChartPoint pb(2), pf(2);
  pb << 0.3, -0.4;
  pf << 0.2, 0.5;
  ChartPoint p = wp.join(pb, pf);
  REQUIRE(p.size() == 4);

  JetMat gj = wp.total.at(p, 4);
  Eigen::MatrixXd ric = geom::values(geom::ricci(gj));

  // f pulled back to the product chart for the direct Hessian.
  auto f_fn = f.fn;
  JetVec xs = geom::seed_coordinates(p, 4);
  JetVec xb(xs.begin(), xs.begin() + 2);
  Eigen::MatrixXd hess = geom::values(geom::hessian(f_fn(xb), gj));

  auto blocks = construct::warped_block_formulas(wp, f, pb, pf);

  CHECK(frob(ric.topLeftCorner(2, 2) - blocks.ric_base) < 1e-9);
  CHECK(frob(ric.bottomRightCorner(2, 2) - blocks.ric_fiber) < 1e-9);
  CHECK(frob(ric.topRightCorner(2, 2)) < 1e-9);
  CHECK(frob(hess.topLeftCorner(2, 2) - blocks.hess_base) < 1e-9);
  CHECK(frob(hess.bottomRightCorner(2, 2) - blocks.hess_fiber) < 1e-9);
  CHECK(frob(hess.topRightCorner(2, 2)) < 1e-9);
}

TEST_CASE("trivial warp gives a riemannian product") {
  auto gb = bumpy_metric3();
  auto gf = sphere_metric();
  auto one = scalar(3, [](const JetVec& x) { return Jet::constant(x[0].dim(), x[0].order(), 1.0); });
  auto wp = construct::warped_product(gb, gf, one);
  ChartPoint pb(3), pf(2);
  pb << 0.2, -0.1, 0.4;
  pf << 0.3, -0.2;
  auto blocks = construct::warped_block_formulas(wp, geom::ScalarField{}, pb, pf);
  CHECK(blocks.ell_sharp == doctest::Approx(0.0));
  CHECK(frob(blocks.ric_base - geom::values(geom::ricci(gb.at(pb, 2)))) < 1e-12);
  CHECK(frob(blocks.ric_fiber - geom::values(geom::ricci(gf.at(pf, 2)))) < 1e-12);
  CHECK(frob(blocks.hess_fiber) < 1e-15);
}

TEST_CASE("cigar scalar curvature from warped polar form") {
  auto gb = flat_metric(1);
  auto gf = flat_metric(1);
  auto ell = scalar(1, [](const JetVec& x) { return tanh(x[0]); });
  auto wp = construct::warped_product(gb, gf, ell);
  for (double r : {0.4, 0.9, 1.6}) {
    ChartPoint p(2);
    p << r, 0.7;
    double s = geom::scalar_curvature(wp.total.at(p, 3)).value();
    double th = std::tanh(r);
    CHECK(s == doctest::Approx(4.0 * (1.0 - th * th)).epsilon(1e-9));
  }
}

TEST_CASE("flat potential gives euclidean metric") {
  for (int m : {1, 2}) {
    auto pot = scalar(2 * m, [](const JetVec& x) {
      Jet s(x[0].dim(), x[0].order(), 0.0);
      for (const auto& xi : x) s += xi * xi;
      return s;
    });
    auto chart = construct::kahler_from_potential(m, pot);
    ChartPoint p(2 * m);
    for (int i = 0; i < 2 * m; ++i) p(i) = 0.1 * (i + 1) - 0.25;
    Eigen::MatrixXd gv = chart.g.values_at(p);
    CHECK(frob(gv - Eigen::MatrixXd::Identity(2 * m, 2 * m)) < 1e-13);
    Eigen::MatrixXd jv = chart.J.values_at(p);
    CHECK(frob(jv * jv + Eigen::MatrixXd::Identity(2 * m, 2 * m)) < 1e-15);
  }
}

TEST_CASE("fubini study chart is einstein with the fitted constant") {
  for (int m : {1, 2}) {
    int n = 2 * m;
    auto pot = scalar(n, [](const JetVec& x) {
      Jet s(x[0].dim(), x[0].order(), 0.0);
      for (const auto& xi : x) s += xi * xi;
      return log(1.0 + s);
    });
    auto chart = construct::kahler_from_potential(m, pot);

    // Fit the Einstein constant at one point, then test it everywhere else.
    ChartPoint p0(n);
    for (int i = 0; i < n; ++i) p0(i) = 0.15 * (i + 1);
    JetMat g0 = chart.g.at(p0, 2);
    Eigen::MatrixXd gv0 = geom::values(g0);
    Eigen::MatrixXd r0 = geom::values(geom::ricci(g0));
    double fitted = (gv0.inverse() * r0).trace() / n;
    CHECK(fitted == doctest::Approx(2.0 * (m + 1)).epsilon(1e-9));

    ChartPoint pts[3];
    for (int t = 0; t < 3; ++t) {
      pts[t] = ChartPoint(n);
      for (int i = 0; i < n; ++i) pts[t](i) = 0.3 * std::sin(1.7 * (t + 1) + 0.9 * i);
    }
    for (const auto& p : pts) {
      JetMat gj = chart.g.at(p, 2);
      Eigen::MatrixXd gv = geom::values(gj);
      Eigen::MatrixXd ric = geom::values(geom::ricci(gj));
      CHECK(geom::metric_op_norm(ric - fitted * gv, gv) < 1e-7);
    }
  }
}

TEST_CASE("potential metric accepts only its own coordinate seeds") {
  auto pot = scalar(2, [](const JetVec& x) { return x[0] * x[0] + x[1] * x[1]; });
  auto chart = construct::kahler_from_potential(1, pot);
  ChartPoint p(2);
  p << 0.2, 0.3;
  JetVec xs = geom::seed_coordinates(p, 2);
  CHECK_NOTHROW(chart.g.eval(xs));

  JetVec twisted = xs;
  twisted[0] = xs[0] * xs[1];
  CHECK_THROWS_AS(chart.g.eval(twisted), precondition_error);

  JetVec wrong_dim = {Jet::coordinate(3, 2, 0, 0.2), Jet::coordinate(3, 2, 1, 0.3)};
  CHECK_THROWS_AS(chart.g.eval(wrong_dim), precondition_error);
}

TEST_CASE("kahler invariants hold on a perturbed potential") {
  int m = 2, n = 4;
  auto pot = scalar(n, [](const JetVec& x) {
    Jet s(x[0].dim(), x[0].order(), 0.0);
    for (const auto& xi : x) s += xi * xi;
    return s + 0.1 * s * s;
  });
  auto chart = construct::kahler_from_potential(m, pot);
  ChartPoint p(n);
  p << 0.3, -0.2, 0.1, 0.25;

  JetMat gj = chart.g.at(p, 3);
  JetMat jj = chart.J.eval(geom::seed_coordinates(p, 3));
  Eigen::MatrixXd gv = geom::values(gj);
  Eigen::MatrixXd jv = geom::values(jj);

  // metric J-invariance and Ricci J-invariance
  Eigen::MatrixXd ric = geom::values(geom::ricci(gj));
  CHECK(frob(jv.transpose() * gv * jv - gv) < 1e-9);
  CHECK(frob(jv.transpose() * ric * jv - ric) < 1e-9);

  // parallel complex structure
  geom::JetR3 dj = geom::covariant_derivative_endo(jj, gj);
  double worst = 0;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) worst = std::max(worst, std::abs(dj.at(k, i, j).value()));
  CHECK(worst < 1e-9);

  // closed fundamental two-form: omega_ij = g_ik J^k_j
  JetMat omega(n, Jet(n, gj.a[0].order()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Jet s(n, gj.a[0].order(), 0.0);
      for (int k = 0; k < n; ++k) s += gj.at(i, k) * jj.at(k, j);
      omega.at(i, j) = s;
    }
  double dw = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        double v = omega.at(j, k).d1(i) + omega.at(k, i).d1(j) + omega.at(i, j).d1(k);
        dw = std::max(dw, std::abs(v));
      }
  CHECK(dw < 1e-10);
}

TEST_CASE("divergence identities for a killing potential") {
  // flat chart, radial potential: every term vanishes separately
  {
    int n = 4;
    auto g = flat_metric(n);
    auto sig = scalar(n, [](const JetVec& x) {
      Jet s(x[0].dim(), x[0].order(), 0.0);
      for (const auto& xi : x) s += xi * xi;
      return s;
    });
    ChartPoint p(n);
    p << 0.4, -0.1, 0.3, 0.2;
    JetMat gj = g.at(p, 4);
    Jet sj = sig.at(p, 4);
    Jet y = geom::laplacian(sj, gj);
    JetVec dy = geom::differential(y);
    JetVec iric = geom::interior_product(geom::gradient(sj, gj), geom::ricci(gj));
    JetVec dsig = geom::divergence_sym2(geom::hessian(sj, gj), gj);
    CHECK(geom::sup_norm(geom::values(dy)) < 1e-9);
    CHECK(geom::sup_norm(geom::values(iric)) < 1e-9);
    CHECK(geom::sup_norm(geom::values(dsig)) < 1e-9);
  }

  // fubini study with the rotation moment potential
  {
    int m = 2, n = 4;
    auto pot = scalar(n, [](const JetVec& x) {
      Jet s(x[0].dim(), x[0].order(), 0.0);
      for (const auto& xi : x) s += xi * xi;
      return log(1.0 + s);
    });
    auto chart = construct::kahler_from_potential(m, pot);
    auto sig = scalar(n, [](const JetVec& x) {
      Jet s(x[0].dim(), x[0].order(), 0.0);
      for (const auto& xi : x) s += xi * xi;
      return s * recip(1.0 + s);
    });
    ChartPoint pts[2];
    pts[0] = ChartPoint(n);
    pts[0] << 0.3, -0.2, 0.15, 0.1;
    pts[1] = ChartPoint(n);
    pts[1] << -0.4, 0.25, 0.05, -0.3;
    for (const auto& p : pts) {
      JetMat gj = chart.g.at(p, 4);
      Jet sj = sig.at(p, 4);
      Eigen::MatrixXd gv = geom::values(gj);
      JetVec dy = geom::differential(geom::laplacian(sj, gj));
      Eigen::VectorXd dyv = geom::values(dy);
      Eigen::VectorXd iric =
          geom::values(geom::interior_product(geom::gradient(sj, gj), geom::ricci(gj)));
      Eigen::VectorXd div_h = geom::values(geom::divergence_sym2(geom::hessian(sj, gj), gj));
      CHECK(geom::covector_norm(2.0 * iric + dyv, gv) < 1e-7);
      CHECK(geom::covector_norm(2.0 * div_h - dyv, gv) < 1e-7);
    }
  }
}
