#include "riccheck/residuals/ricci_hessian.hpp"

namespace riccheck::residuals {

using geom::Jet;
using geom::JetMat;
using geom::JetVec;

namespace {

struct RhData {
  int n = 0;
  JetMat g, ginv;
  Jet sigma, alpha, gamma, q, y, s;
  JetVec dsigma, dalpha, dgamma;
  bool has_mu = false;
  Jet mu, mudot;
  double muddot = 0.0;
};

// sigma-derivative of h at the level of jets: g(grad h, grad sigma)/Q.
Jet sigma_derivative(const Jet& h, const RhData& d) {
  return geom::inner_covec(geom::differential(h), d.dsigma, d.ginv) * recip(d.q);
}

RhData evaluate(const RicciHessianScenario& r, const geom::ChartPoint& p, int order) {
  RhData d;
  d.n = r.dim > 0 ? r.dim : r.g.dim;
  JetVec x = geom::seed_coordinates(p, order);
  d.g = r.g.eval(x);
  d.ginv = geom::inverse(d.g);
  d.sigma = r.sigma.eval(x);
  d.alpha = r.alpha.eval(x);
  d.gamma = r.gamma.eval(x);
  d.dsigma = geom::differential(d.sigma);
  d.dalpha = geom::differential(d.alpha);
  d.dgamma = geom::differential(d.gamma);
  d.q = geom::inner_covec(d.dsigma, d.dsigma, d.ginv);
  if (std::abs(d.q.value()) < 1e-14)
    throw singularity_error("critical point of sigma");
  d.y = geom::laplacian(d.sigma, d.g);
  d.s = geom::scalar_curvature(d.g);
  if (r.mu.valid()) {
    d.has_mu = true;
    d.mu = r.mu.eval(x);
    d.mudot = sigma_derivative(d.mu, d);
    d.muddot = sigma_derivative(d.mudot, d).value();
  }
  return d;
}

Eigen::MatrixXd wedge_values(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  return a * b.transpose() - b * a.transpose();
}

}  // namespace

Eigen::MatrixXd ricci_hessian_residual(const RicciHessianScenario& r, const geom::ChartPoint& p) {
  JetVec x = geom::seed_coordinates(p, 3);
  JetMat g = r.g.eval(x);
  Jet sigma = r.sigma.eval(x);
  Jet alpha = r.alpha.eval(x);
  Jet gamma = r.gamma.eval(x);
  JetMat res = geom::ricci(g) + scale(geom::hessian(sigma, g), alpha);
  res = res + scale(g, -gamma);
  return geom::values(res);
}

IdentityResiduals rels_wedge_identities(const RicciHessianScenario& r, const geom::ChartPoint& p) {
  RhData d = evaluate(r, p, 4);
  int n = d.n;
  Eigen::MatrixXd gv = geom::values(d.g);
  double a0 = d.alpha.value(), g0 = d.gamma.value(), y0 = d.y.value(), s0 = d.s.value();
  double adot = sigma_derivative(d.alpha, d).value();

  Eigen::VectorXd dsig = geom::values(d.dsigma);
  Eigen::VectorXd dgam = geom::values(d.dgamma);
  Eigen::VectorXd dy = geom::values(geom::differential(d.y));
  Eigen::VectorXd ds = geom::values(geom::differential(d.s));
  Eigen::VectorXd dq = geom::values(geom::differential(d.q));

  IdentityResiduals out;
  out.trace = std::abs(a0 * y0 + s0 - n * g0);
  out.d_trace = geom::covector_norm(a0 * dy + y0 * adot * dsig + ds - n * dgam, gv);
  out.divergence = geom::covector_norm(a0 * dy + adot * dq + ds - 2.0 * dgam, gv);
  out.interior = geom::covector_norm(a0 * dq - dy - 2.0 * g0 * dsig, gv);
  out.wedge_a = geom::covector_norm(y0 * adot * dsig - adot * dq - (n - 2) * dgam, gv);

  Eigen::MatrixXd sig_q = wedge_values(dsig, dq);
  Eigen::MatrixXd gam_sig = wedge_values(dgam, dsig);
  out.wedge_b = geom::bilinear_norm(adot * sig_q - (n - 2) * gam_sig, gv);
  out.wedge_c = geom::bilinear_norm(adot * sig_q - 2.0 * gam_sig, gv);

  out.has_mu = d.has_mu;
  if (d.has_mu) {
    double md = d.mudot.value(), mdd = d.muddot;
    Eigen::MatrixXd q_sig = wedge_values(dq, dsig);
    Eigen::MatrixXd y_sig = wedge_values(dy, dsig);
    out.wedge_d =
        geom::bilinear_norm(gam_sig - (a0 * md - mdd) * q_sig + md * y_sig, gv);
  }
  return out;
}

Eigen::Vector2d dependence_defects(const RicciHessianScenario& r, const geom::ChartPoint& p) {
  JetVec x = geom::seed_coordinates(p, 3);
  Jet sigma = r.sigma.eval(x);
  Jet alpha = r.alpha.eval(x);
  Jet gamma = r.gamma.eval(x);
  Eigen::VectorXd dsig = geom::values(geom::differential(sigma));
  Eigen::VectorXd dalp = geom::values(geom::differential(alpha));
  Eigen::VectorXd dgam = geom::values(geom::differential(gamma));
  return {geom::functional_dependence_defect(dalp, dsig),
          geom::functional_dependence_defect(dgam, dsig)};
}

double gamma_formula_defect(const RicciHessianScenario& r, const geom::ChartPoint& p) {
  if (!r.mu.valid()) throw precondition_error("gamma formula needs mu");
  RhData d = evaluate(r, p, 4);
  double md = d.mudot.value(), mdd = d.muddot;
  double predicted = r.lambda * std::exp(-2.0 * d.mu.value()) - md * d.y.value() +
                     (d.alpha.value() * md - mdd) * d.q.value();
  return std::abs(d.gamma.value() - predicted);
}

}  // namespace riccheck::residuals
