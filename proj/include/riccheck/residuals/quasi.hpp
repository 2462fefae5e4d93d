#pragma once

#include "riccheck/construct/warped.hpp"
#include "riccheck/skr/profile.hpp"

namespace riccheck::residuals {

// Warped soliton data: gbar = g_B + ell^2 g_F with potential f on the base.
// The soliton condition for gbar is equivalent to the three residuals below
// vanishing (base equation, fiber Einstein condition, warp scalar equation).
struct QuasiSolitonScenario {
  construct::WarpedProduct wp;
  geom::ScalarField f;  // on the base; unset means f == 0
  double lambda = 0.0;
  double nu = 0.0;
  bool nu_given = true;

  int k() const { return wp.fiber_dim; }
};

struct QuasiResiduals {
  Eigen::MatrixXd base;   // Ric_B - (k/ell) nabla dell + nabla df - lambda g_B
  Eigen::MatrixXd fiber;  // Ric_F - nu g_F
  double scalar = 0.0;    // nu + ell d_{grad f} ell - ell^2 ell_sharp - lambda ell^2
};

QuasiResiduals quasi_soliton_residual(const QuasiSolitonScenario& q, const geom::ChartPoint& pb,
                                      const geom::ChartPoint& pf);

// The nu making the scalar equation hold at the anchor base point.
double fit_fiber_constant(const QuasiSolitonScenario& q, const geom::ChartPoint& pb_anchor);

// Base equation with f eliminated through a profile f = phi(ell):
// Ric + (phi' - k/ell) nabla dell + phi'' dell (x) dell - lambda g_B.
// Requires df and dell to be pointwise dependent when f is also given.
Eigen::MatrixXd special_qs_residual(const QuasiSolitonScenario& q, const skr::Profile& f_of_ell,
                                    const geom::ChartPoint& pb, double dependence_tol = 1e-9);

// f pulled back to the product chart (reads the base coordinates only).
geom::ScalarField pullback_to_product(const geom::ScalarField& f_base, int base_dim,
                                      int total_dim);

}  // namespace riccheck::residuals
