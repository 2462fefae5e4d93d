#include "riccheck/residuals/soliton.hpp"

namespace riccheck::residuals {

using geom::Jet;
using geom::JetMat;
using geom::JetVec;

namespace {

// Everything the conformal forms need at one point, evaluated once.
struct PointData {
  int n = 0;
  JetMat g, ginv, ric;
  Jet tau, f, itau;
  JetVec dtau, df;
  Jet q_tau, cross, q_f, lap_tau, lap_f;
};

PointData evaluate(const ConformalSolitonScenario& s, const geom::ChartPoint& p, int order) {
  PointData d;
  d.n = s.dim > 0 ? s.dim : s.g.dim;
  JetVec x = geom::seed_coordinates(p, order);
  d.g = s.g.eval(x);
  d.tau = s.tau.valid() ? s.tau.eval(x) : Jet::constant(d.n, order, 1.0);
  if (d.tau.value() <= 0.0) throw field_domain_error("conformal factor not positive");
  d.f = s.f.valid() ? s.f.eval(x) : Jet::constant(d.n, order, 0.0);
  d.ginv = geom::inverse(d.g);
  d.ric = geom::ricci(d.g);
  d.itau = recip(d.tau);
  d.dtau = geom::differential(d.tau);
  d.df = geom::differential(d.f);
  d.q_tau = geom::inner_covec(d.dtau, d.dtau, d.ginv);
  d.cross = geom::inner_covec(d.dtau, d.df, d.ginv);
  d.q_f = geom::inner_covec(d.df, d.df, d.ginv);
  d.lap_tau = geom::laplacian(d.tau, d.g);
  d.lap_f = geom::laplacian(d.f, d.g);
  return d;
}

Jet gamma_jet(const ConformalSolitonScenario& s, const PointData& d) {
  return d.itau * d.itau * (s.lambda + (d.n - 1) * d.q_tau) - d.itau * (d.lap_tau - d.cross);
}

JetMat gamma_free_part(const PointData& d) {
  JetMat r = d.ric + scale(geom::hessian(d.tau, d.g), (d.n - 2) * d.itau);
  r = r + geom::hessian(d.f, d.g);
  r = r + scale(geom::sym_product(d.dtau, d.df), 2.0 * d.itau);
  return r;
}

}  // namespace

JetMat soliton_residual(const JetMat& g, const Jet& f, double lambda) {
  JetMat r = geom::ricci(g) + geom::hessian(f, g);
  JetMat lg = scale(g, Jet::constant(g.a[0].dim(), g.a[0].order(), -lambda));
  return r + lg;
}

Eigen::MatrixXd soliton_residual(const geom::MetricField& g, const geom::ScalarField& f,
                                 double lambda, const geom::ChartPoint& p) {
  JetVec x = geom::seed_coordinates(p, 3);
  JetMat gj = g.eval(x);
  Jet fj = f.valid() ? f.eval(x) : Jet::constant(g.dim, 3, 0.0);
  return geom::values(soliton_residual(gj, fj, lambda));
}

double soliton_scalar_residual(const geom::MetricField& g, const geom::ScalarField& f,
                               double lambda, double a, const geom::ChartPoint& p) {
  JetVec x = geom::seed_coordinates(p, 2);
  JetMat gj = g.eval(x);
  Jet fj = f.valid() ? f.eval(x) : Jet::constant(g.dim, 2, 0.0);
  JetMat gi = geom::inverse(gj);
  JetVec df = geom::differential(fj);
  double lap = geom::laplacian(fj, gj).value();
  double q = geom::inner_covec(df, df, gi).value();
  return lap - q + 2.0 * lambda * fj.value() - a;
}

double fit_soliton_constant(const geom::MetricField& g, const geom::ScalarField& f, double lambda,
                            const geom::ChartPoint& anchor) {
  return soliton_scalar_residual(g, f, lambda, 0.0, anchor);
}

double conf_gamma(const ConformalSolitonScenario& s, const geom::ChartPoint& p) {
  PointData d = evaluate(s, p, 2);
  return gamma_jet(s, d).value();
}

Eigen::MatrixXd conf_soliton_residual(const ConformalSolitonScenario& s,
                                      const geom::ChartPoint& p) {
  PointData d = evaluate(s, p, 3);
  JetMat r = gamma_free_part(d) + scale(d.g, -gamma_jet(s, d));
  return geom::values(r);
}

Eigen::MatrixXd lie_form_residual(const ConformalSolitonScenario& s, const geom::ChartPoint& p) {
  PointData d = evaluate(s, p, 3);
  JetVec v = geom::raise_index(d.dtau, d.ginv);
  JetVec w = geom::raise_index(d.df, d.ginv);
  Jet t2 = d.tau * d.tau;
  for (auto& wi : w) wi = t2 * wi;
  Jet alpha = 0.5 * (d.n - 2) * d.itau;
  Jet beta = 0.5 * recip(t2);
  JetMat r = d.ric + scale(geom::lie_derivative_metric(v, d.g), alpha);
  r = r + scale(geom::lie_derivative_metric(w, d.g), beta);
  r = r + scale(d.g, -gamma_jet(s, d));
  return geom::values(r);
}

Eigen::MatrixXd combined_lie_term(const ConformalSolitonScenario& s, const geom::ChartPoint& p) {
  PointData d = evaluate(s, p, 3);
  JetVec v = geom::raise_index(d.dtau, d.ginv);
  JetVec w = geom::raise_index(d.df, d.ginv);
  Jet t2 = d.tau * d.tau;
  for (auto& wi : w) wi = t2 * wi;
  Jet alpha = 0.5 * (d.n - 2) * d.itau;
  Jet beta = 0.5 * recip(t2);
  JetMat r = scale(geom::lie_derivative_metric(v, d.g), alpha) +
             scale(geom::lie_derivative_metric(w, d.g), beta);
  return geom::values(r);
}

TwoFormResidual two_form_residual(const ConformalSolitonScenario& s, const geom::ChartPoint& p) {
  PointData d = evaluate(s, p, 3);
  Jet mu = log(d.tau);
  Jet theta = d.f + (d.n - 2) * mu;
  Jet psi = 2.0 * theta - (d.n - 2) * mu;
  JetVec dmu = geom::differential(mu);
  JetVec dtheta = geom::differential(theta);
  JetVec dpsi = geom::differential(psi);
  Jet gamma = s.lambda * exp(-2.0 * mu) - geom::laplacian(mu, d.g) +
              geom::inner_covec(dtheta, dmu, d.ginv);
  JetMat r = d.ric + geom::hessian(theta, d.g) + geom::sym_product(dmu, dpsi);
  r = r + scale(d.g, -gamma);
  TwoFormResidual out;
  out.tensor = geom::values(r);
  out.gamma = gamma.value();
  Jet cross_tf = geom::inner_covec(dtheta, d.df, d.ginv);
  out.scalar = std::exp(2.0 * mu.value()) * (d.lap_f.value() - cross_tf.value()) +
               2.0 * s.lambda * d.f.value() - s.a;
  return out;
}

double conf_scalar_residual(const ConformalSolitonScenario& s, const geom::ChartPoint& p) {
  PointData d = evaluate(s, p, 2);
  double t = d.tau.value();
  return t * t * d.lap_f.value() - (d.n - 2) * t * d.cross.value() - t * t * d.q_f.value() +
         2.0 * s.lambda * d.f.value() - s.a;
}

double fit_conf_scalar_constant(const ConformalSolitonScenario& s,
                                const geom::ChartPoint& anchor) {
  ConformalSolitonScenario z = s;
  z.a = 0.0;
  return conf_scalar_residual(z, anchor);
}

double fit_gamma(const ConformalSolitonScenario& s, const geom::ChartPoint& p) {
  PointData d = evaluate(s, p, 3);
  Eigen::MatrixXd r0 = geom::values(gamma_free_part(d));
  Eigen::MatrixXd gv = geom::values(d.g);
  return (gv.llt().solve(r0)).trace() / d.n;
}

Eigen::Vector3d derived_potentials(const ConformalSolitonScenario& s, const geom::ChartPoint& p) {
  PointData d = evaluate(s, p, 2);
  double mu = std::log(d.tau.value());
  double theta = d.f.value() + (d.n - 2) * mu;
  double psi = 2.0 * theta - (d.n - 2) * mu;
  return {mu, theta, psi};
}

}  // namespace riccheck::residuals
