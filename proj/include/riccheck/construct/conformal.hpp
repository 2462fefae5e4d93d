#pragma once

#include "riccheck/geom/calculus.hpp"

namespace riccheck::construct {

// g and a positive factor tau, together with ghat = tau^-2 g.
struct ConformalPair {
  geom::MetricField g;
  geom::ScalarField tau;
  geom::MetricField ghat;
  int dim = 0;
};

ConformalPair conformal_rescale(const geom::MetricField& g, const geom::ScalarField& tau);

// Predicted curvature data of ghat = tau^-2 g, written entirely in
// g-quantities. Jet-level cores take pre-evaluated jets; the field-level
// overloads evaluate at a point and return plain matrices.

// Ric(ghat) = Ric + (n-2) tau^-1 nabla dtau + [tau^-1 Lap tau - (n-1) tau^-2 |grad tau|^2] g
geom::JetMat conformal_ricci_rhs(const geom::JetMat& g, const geom::Jet& tau);
Eigen::MatrixXd conformal_ricci_rhs(const geom::MetricField& g, const geom::ScalarField& tau,
                                    const geom::ChartPoint& p);

// ghat-Hessian of f = nabla df + tau^-1 [2 dtau . df - g(grad tau, grad f) g]
geom::JetMat conformal_hessian_rhs(const geom::JetMat& g, const geom::Jet& tau,
                                   const geom::Jet& f);
Eigen::MatrixXd conformal_hessian_rhs(const geom::MetricField& g, const geom::ScalarField& tau,
                                      const geom::ScalarField& f, const geom::ChartPoint& p);

// ghat-Laplacian of f = tau^2 Lap f - (n-2) tau g(grad tau, grad f)
geom::Jet conformal_laplacian_rhs(const geom::JetMat& g, const geom::Jet& tau, const geom::Jet& f);
double conformal_laplacian_rhs(const geom::MetricField& g, const geom::ScalarField& tau,
                               const geom::ScalarField& f, const geom::ChartPoint& p);

}  // namespace riccheck::construct
