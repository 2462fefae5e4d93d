#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "riccheck/geom/jet.hpp"

namespace riccheck::geom {

using ChartPoint = Eigen::VectorXd;
using JetVec = std::vector<Jet>;

// Rectangular coordinate domain used for sampling.
struct Box {
  Eigen::VectorXd lo, hi;
  int dim() const { return static_cast<int>(lo.size()); }
};

// Coordinate functions seeded as jets at p.
JetVec seed_coordinates(const ChartPoint& p, int order);

// Fields are chart-level callables mapping seeded coordinate jets to jets;
// evaluating at higher order costs more but yields deeper derivative data.

struct ScalarField {
  int dim = 0;
  std::function<Jet(const JetVec&)> fn;

  bool valid() const { return static_cast<bool>(fn); }
  Jet eval(const JetVec& x) const;
  Jet at(const ChartPoint& p, int order) const;
  double value_at(const ChartPoint& p) const;
};

struct VectorField {
  int dim = 0;
  std::function<JetVec(const JetVec&)> fn;

  bool valid() const { return static_cast<bool>(fn); }
  JetVec eval(const JetVec& x) const;
  JetVec at(const ChartPoint& p, int order) const;
  Eigen::VectorXd values_at(const ChartPoint& p) const;
};

struct MetricField {
  int dim = 0;
  std::function<JetMat(const JetVec&)> fn;

  bool valid() const { return static_cast<bool>(fn); }
  JetMat eval(const JetVec& x) const;
  JetMat at(const ChartPoint& p, int order) const;
  Eigen::MatrixXd values_at(const ChartPoint& p) const;
};

// (1,1)-tensor field; also serves as an almost complex structure.
struct EndoField {
  int dim = 0;
  std::function<JetMat(const JetVec&)> fn;

  bool valid() const { return static_cast<bool>(fn); }
  JetMat eval(const JetVec& x) const;
  JetMat at(const ChartPoint& p, int order) const;
  Eigen::MatrixXd values_at(const ChartPoint& p) const;
};

// Value parts of jet containers.
Eigen::MatrixXd values(const JetMat& m);
Eigen::VectorXd values(const JetVec& v);

}  // namespace riccheck::geom
