#include "riccheck/geom/fields.hpp"

namespace riccheck::geom {

JetVec seed_coordinates(const ChartPoint& p, int order) {
  int n = static_cast<int>(p.size());
  JetVec x;
  x.reserve(n);
  for (int i = 0; i < n; ++i) x.push_back(Jet::coordinate(n, order, i, p[i]));
  return x;
}

Jet ScalarField::eval(const JetVec& x) const {
  if (!fn) throw precondition_error("scalar field not set");
  return fn(x);
}

Jet ScalarField::at(const ChartPoint& p, int order) const {
  return eval(seed_coordinates(p, order));
}

double ScalarField::value_at(const ChartPoint& p) const { return at(p, 0).value(); }

JetVec VectorField::eval(const JetVec& x) const {
  if (!fn) throw precondition_error("vector field not set");
  return fn(x);
}

JetVec VectorField::at(const ChartPoint& p, int order) const {
  return eval(seed_coordinates(p, order));
}

Eigen::VectorXd VectorField::values_at(const ChartPoint& p) const { return values(at(p, 0)); }

JetMat MetricField::eval(const JetVec& x) const {
  if (!fn) throw precondition_error("metric field not set");
  return fn(x);
}

JetMat MetricField::at(const ChartPoint& p, int order) const {
  return eval(seed_coordinates(p, order));
}

Eigen::MatrixXd MetricField::values_at(const ChartPoint& p) const { return values(at(p, 0)); }

JetMat EndoField::eval(const JetVec& x) const {
  if (!fn) throw precondition_error("endomorphism field not set");
  return fn(x);
}

JetMat EndoField::at(const ChartPoint& p, int order) const {
  return eval(seed_coordinates(p, order));
}

Eigen::MatrixXd EndoField::values_at(const ChartPoint& p) const { return values(at(p, 0)); }

Eigen::MatrixXd values(const JetMat& m) {
  Eigen::MatrixXd r(m.n, m.n);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) r(i, j) = m.at(i, j).value();
  return r;
}

Eigen::VectorXd values(const JetVec& v) {
  Eigen::VectorXd r(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) r[static_cast<Eigen::Index>(i)] = v[i].value();
  return r;
}

}  // namespace riccheck::geom
