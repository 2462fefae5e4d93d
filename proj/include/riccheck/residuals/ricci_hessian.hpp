#pragma once

#include "riccheck/geom/calculus.hpp"

namespace riccheck::residuals {

// Ric + alpha nabla dsigma = gamma g, with alpha and gamma pointwise
// dependent on sigma (their differentials proportional to dsigma). mu is
// optional and only consumed by the gamma-formula diagnostic and the last
// wedge identity.
struct RicciHessianScenario {
  geom::MetricField g;
  geom::ScalarField sigma;
  geom::ScalarField alpha;
  geom::ScalarField gamma;
  geom::ScalarField mu;  // optional
  double lambda = 0.0;   // enters the gamma formula diagnostic
  geom::EndoField J;     // optional, consumed by precondition checks
  int dim = 0;
};

Eigen::MatrixXd ricci_hessian_residual(const RicciHessianScenario& r, const geom::ChartPoint& p);

// Residuals of the identity chain that follows from the equation: the
// g-trace, its differential, the divergence and interior-product
// consequences, and the wedge relations derived from those. Covector
// residuals are measured in the g-conorm, two-form residuals in the
// g-bilinear norm. sigma-derivatives of alpha, gamma, mu are extracted
// pointwise as g(grad h, grad sigma)/|grad sigma|^2, so points near critical
// sigma must be excluded by the caller.
struct IdentityResiduals {
  double trace = 0;       // alpha Y + s - n gamma
  double d_trace = 0;     // alpha dY + Y alpha' dsigma + ds - n dgamma
  double divergence = 0;  // alpha dY + alpha' dQ + ds - 2 dgamma
  double interior = 0;    // alpha dQ - dY - 2 gamma dsigma
  double wedge_a = 0;     // Y alpha' dsigma - alpha' dQ - (n-2) dgamma
  double wedge_b = 0;     // alpha' dsigma ^ dQ - (n-2) dgamma ^ dsigma
  double wedge_c = 0;     // alpha' dsigma ^ dQ - 2 dgamma ^ dsigma
  double wedge_d = 0;     // dgamma ^ dsigma - (alpha mu' - mu'') dQ ^ dsigma + mu' dY ^ dsigma
  bool has_mu = false;
};
IdentityResiduals rels_wedge_identities(const RicciHessianScenario& r, const geom::ChartPoint& p);

// Precondition defects |dalpha ^ dsigma| and |dgamma ^ dsigma|.
Eigen::Vector2d dependence_defects(const RicciHessianScenario& r, const geom::ChartPoint& p);

// gamma vs lambda e^{-2 mu} - mu' Y + (alpha mu' - mu'') Q; requires mu.
double gamma_formula_defect(const RicciHessianScenario& r, const geom::ChartPoint& p);

}  // namespace riccheck::residuals
