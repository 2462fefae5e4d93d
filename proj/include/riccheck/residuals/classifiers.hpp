#pragma once

#include "riccheck/geom/calculus.hpp"

namespace riccheck::residuals {

// Vector-field classifiers. Each returns a nonnegative defect, zero exactly
// when the field has the named property. Norms are measured against g.

// |L_x g|
double killing_residual(const geom::VectorField& x, const geom::MetricField& g,
                        const geom::ChartPoint& p);

// |traceless part of L_x g|: zero for conformal fields.
double conformal_field_residual(const geom::VectorField& x, const geom::MetricField& g,
                                const geom::ChartPoint& p);

// |[(L_x g)^sharp, J]|: vanishing of this commutator is the weakest of the
// three classifier conditions.
double commutator_residual(const geom::VectorField& x, const geom::EndoField& J,
                           const geom::MetricField& g, const geom::ChartPoint& p);

// |[nabla x, J]|: zero for holomorphic fields on a Kahler chart.
double holomorphy_residual(const geom::VectorField& x, const geom::EndoField& J,
                           const geom::MetricField& g, const geom::ChartPoint& p);

// |T(J., J.) - T|, sup over entries, for a symmetric 2-tensor value.
double hermitian_defect(const Eigen::MatrixXd& t, const Eigen::MatrixXd& j);

// Principal-angle defect between the J-invariant planes spanned by {v, Jv}
// and {w, Jw}, measured through the g-orthogonal projectors onto the planes.
// Zero iff the planes coincide. Near-zero vectors are rejected.
double span_alignment(const Eigen::VectorXd& v, const Eigen::VectorXd& w,
                      const Eigen::MatrixXd& j, const Eigen::MatrixXd& g);
double span_alignment(const geom::VectorField& v, const geom::VectorField& w,
                      const geom::EndoField& J, const geom::MetricField& g,
                      const geom::ChartPoint& p);

}  // namespace riccheck::residuals
