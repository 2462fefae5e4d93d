#pragma once

#include <functional>

#include "riccheck/geom/fields.hpp"

namespace riccheck::geom {

// Central finite-difference cross-checks. These reuse none of the jet
// machinery beyond zeroth-order metric evaluation, so agreement with the jet
// operators is meaningful evidence rather than a tautology.

using MetricValues = std::function<Eigen::MatrixXd(const ChartPoint&)>;
using ScalarValues = std::function<double(const ChartPoint&)>;

double fd_partial(const ScalarValues& f, const ChartPoint& p, int i, double h = 1e-5);
double fd_partial2(const ScalarValues& f, const ChartPoint& p, int i, int j, double h = 1e-4);

// Gamma^k_ij from metric values alone.
Eigen::MatrixXd fd_christoffel_slice(const MetricValues& g, const ChartPoint& p, int k,
                                     double h = 1e-5);

// Ric_ij via nested differencing of the metric.
Eigen::MatrixXd fd_ricci(const MetricValues& g, const ChartPoint& p, double h = 1e-4);

}  // namespace riccheck::geom
