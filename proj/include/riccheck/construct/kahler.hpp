#pragma once

#include "riccheck/geom/fields.hpp"

namespace riccheck::construct {

// Kahler chart in real coordinates (x1, y1, ..., xm, ym) with the standard
// constant complex structure. The metric is the J-invariant part of the real
// Hessian of the potential, normalized so that |z|^2 gives the flat metric.
struct KahlerChart {
  int m = 0;
  geom::ScalarField potential;
  geom::MetricField g;
  geom::EndoField J;

  int dim() const { return 2 * m; }
};

// J dx_j = dy_j, J dy_j = -dx_j in interleaved coordinates.
geom::EndoField standard_complex_structure(int m);

// Builds the chart metric from a potential. The metric field only accepts
// coordinate seeds of its own chart (it differentiates the potential twice
// and has to re-seed internally to keep the requested jet order).
KahlerChart kahler_from_potential(int m, const geom::ScalarField& potential);

}  // namespace riccheck::construct
