#pragma once

#include "riccheck/geom/calculus.hpp"

namespace riccheck::residuals {

// A metric g with a positive factor tau and potential f, describing the
// soliton condition for ghat = tau^-2 g rewritten in g-quantities. Unset tau
// means tau == 1, unset f means f == 0.
struct ConformalSolitonScenario {
  geom::MetricField g;
  geom::ScalarField tau;
  geom::ScalarField f;
  double lambda = 0.0;
  double a = 0.0;
  bool a_given = false;
  geom::EndoField J;  // optional complex structure for the hermitian checks
  int dim = 0;
};

// Ric + nabla df - lambda g for a single metric.
geom::JetMat soliton_residual(const geom::JetMat& g, const geom::Jet& f, double lambda);
Eigen::MatrixXd soliton_residual(const geom::MetricField& g, const geom::ScalarField& f,
                                 double lambda, const geom::ChartPoint& p);

// Lap f - |grad f|^2 + 2 lambda f - a for a single metric.
double soliton_scalar_residual(const geom::MetricField& g, const geom::ScalarField& f,
                               double lambda, double a, const geom::ChartPoint& p);
// The a making the scalar residual vanish at the anchor point.
double fit_soliton_constant(const geom::MetricField& g, const geom::ScalarField& f, double lambda,
                            const geom::ChartPoint& anchor);

// gamma = tau^-2 [lambda + (n-1)|grad tau|^2] - tau^-1 [Lap tau - g(grad tau, grad f)]
double conf_gamma(const ConformalSolitonScenario& s, const geom::ChartPoint& p);

// Ric + (n-2) tau^-1 nabla dtau + nabla df + 2 tau^-1 dtau . df - gamma g.
// Identical, entry for entry, to the soliton residual of ghat.
Eigen::MatrixXd conf_soliton_residual(const ConformalSolitonScenario& s, const geom::ChartPoint& p);

// Same expression organized through Lie derivatives along v = grad tau and
// w = tau^2 grad f, with alpha = (n-2)/(2 tau), beta = 1/(2 tau^2).
Eigen::MatrixXd lie_form_residual(const ConformalSolitonScenario& s, const geom::ChartPoint& p);

// Combined-Hessian organization through mu = log tau, theta = f + (n-2) mu,
// psi = 2 theta - (n-2) mu, with its own expression for gamma.
struct TwoFormResidual {
  Eigen::MatrixXd tensor;
  double scalar = 0.0;
  double gamma = 0.0;
};
TwoFormResidual two_form_residual(const ConformalSolitonScenario& s, const geom::ChartPoint& p);

// Scalar equation of the ghat soliton in g-quantities:
// tau^2 Lap f - (n-2) tau g(grad tau, grad f) - tau^2 |grad f|^2 + 2 lambda f - a.
double conf_scalar_residual(const ConformalSolitonScenario& s, const geom::ChartPoint& p);
double fit_conf_scalar_constant(const ConformalSolitonScenario& s, const geom::ChartPoint& anchor);

// Least-squares multiple of g closest to the gamma-free part of the residual;
// diagnostic for off-shell scenarios.
double fit_gamma(const ConformalSolitonScenario& s, const geom::ChartPoint& p);

// Derived quantities (mu, theta, psi) at a point, for consistency tests.
Eigen::Vector3d derived_potentials(const ConformalSolitonScenario& s, const geom::ChartPoint& p);

// The combined Lie-derivative term alpha L_v g + beta L_w g at p, the object
// whose hermitian symmetry drives the classification.
Eigen::MatrixXd combined_lie_term(const ConformalSolitonScenario& s, const geom::ChartPoint& p);

}  // namespace riccheck::residuals
