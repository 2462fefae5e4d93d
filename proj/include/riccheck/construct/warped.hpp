#pragma once

#include "riccheck/geom/calculus.hpp"

namespace riccheck::construct {

// gbar = g_B + ell^2 g_F on the product chart, base coordinates first.
struct WarpedProduct {
  geom::MetricField base;
  geom::MetricField fiber;
  geom::ScalarField warp;  // positive function of the base coordinates
  geom::MetricField total;
  int base_dim = 0;
  int fiber_dim = 0;
  geom::Box base_box, fiber_box;

  int dim() const { return base_dim + fiber_dim; }
  geom::ChartPoint join(const geom::ChartPoint& pb, const geom::ChartPoint& pf) const;
};

WarpedProduct warped_product(const geom::MetricField& gb, const geom::MetricField& gf,
                             const geom::ScalarField& ell);

// Curvature and Hessian blocks of the warped metric, assembled from base and
// fiber data only (no product-chart differentiation). f lives on the base.
struct WarpedBlocks {
  Eigen::MatrixXd ric_base;    // Ric_B - (k/ell) nabla dell
  Eigen::MatrixXd ric_fiber;   // Ric_F - ellsharp * gbar_fiber
  Eigen::MatrixXd hess_base;   // nabla df on the base
  Eigen::MatrixXd hess_fiber;  // ell * d_{grad f} ell * g_F
  double ell_sharp = 0;        // ell^-1 Lap ell + (k-1) ell^-2 |grad ell|^2
  double ell_value = 0;
  double df_ell = 0;  // d_{grad f} ell
};

WarpedBlocks warped_block_formulas(const WarpedProduct& wp, const geom::ScalarField& f,
                                   const geom::ChartPoint& p_base,
                                   const geom::ChartPoint& p_fiber);

}  // namespace riccheck::construct
