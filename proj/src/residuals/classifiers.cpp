#include "riccheck/residuals/classifiers.hpp"

namespace riccheck::residuals {

using geom::Jet;
using geom::JetMat;
using geom::JetR3;
using geom::JetVec;

namespace {

struct LieData {
  Eigen::MatrixXd lie, gv;
  JetMat g, ginv;
};

LieData lie_data(const geom::VectorField& x, const geom::MetricField& g,
                 const geom::ChartPoint& p) {
  JetVec xs = geom::seed_coordinates(p, 2);
  LieData d;
  d.g = g.eval(xs);
  d.ginv = geom::inverse(d.g);
  d.lie = geom::values(geom::lie_derivative_metric(x.eval(xs), d.g));
  d.gv = geom::values(d.g);
  return d;
}

}  // namespace

double killing_residual(const geom::VectorField& x, const geom::MetricField& g,
                        const geom::ChartPoint& p) {
  LieData d = lie_data(x, g, p);
  return geom::metric_op_norm(d.lie, d.gv);
}

double conformal_field_residual(const geom::VectorField& x, const geom::MetricField& g,
                                const geom::ChartPoint& p) {
  LieData d = lie_data(x, g, p);
  int n = d.g.n;
  double tr = (d.gv.llt().solve(d.lie)).trace();
  return geom::metric_op_norm(d.lie - (tr / n) * d.gv, d.gv);
}

double commutator_residual(const geom::VectorField& x, const geom::EndoField& J,
                           const geom::MetricField& g, const geom::ChartPoint& p) {
  LieData d = lie_data(x, g, p);
  Eigen::MatrixXd sharp = d.gv.llt().solve(d.lie);
  Eigen::MatrixXd jv = J.values_at(p);
  return geom::endo_norm(sharp * jv - jv * sharp, d.gv);
}

double holomorphy_residual(const geom::VectorField& x, const geom::EndoField& J,
                           const geom::MetricField& g, const geom::ChartPoint& p) {
  JetVec xs = geom::seed_coordinates(p, 2);
  JetMat gj = g.eval(xs);
  JetVec xv = x.eval(xs);
  JetR3 gam = geom::christoffel(gj);
  int n = gj.n;
  Eigen::MatrixXd nx(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double v = xv[i].d1(j);
      for (int k = 0; k < n; ++k) v += gam.at(i, j, k).value() * xv[k].value();
      nx(i, j) = v;
    }
  Eigen::MatrixXd jv = J.values_at(p);
  return geom::endo_norm(nx * jv - jv * nx, geom::values(gj));
}

double hermitian_defect(const Eigen::MatrixXd& t, const Eigen::MatrixXd& j) {
  return geom::sup_norm(Eigen::MatrixXd(j.transpose() * t * j - t));
}

namespace {

// g-orthogonal projector onto span{v, Jv}.
Eigen::MatrixXd plane_projector(const Eigen::VectorXd& v, const Eigen::MatrixXd& j,
                                const Eigen::MatrixXd& g) {
  double n1 = std::sqrt(v.dot(g * v));
  if (!(n1 > 1e-10)) throw precondition_error("plane comparison at a near-zero vector");
  Eigen::VectorXd b1 = v / n1;
  Eigen::VectorXd jv = j * v;
  Eigen::VectorXd b2 = jv - b1.dot(g * jv) * b1;
  double n2 = std::sqrt(b2.dot(g * b2));
  if (!(n2 > 1e-10)) throw precondition_error("degenerate plane: Jv parallel to v");
  b2 /= n2;
  return b1 * (g * b1).transpose() + b2 * (g * b2).transpose();
}

}  // namespace

double span_alignment(const Eigen::VectorXd& v, const Eigen::VectorXd& w,
                      const Eigen::MatrixXd& j, const Eigen::MatrixXd& g) {
  Eigen::MatrixXd pv = plane_projector(v, j, g);
  Eigen::MatrixXd pw = plane_projector(w, j, g);
  return geom::endo_norm(pv - pw, g);
}

double span_alignment(const geom::VectorField& v, const geom::VectorField& w,
                      const geom::EndoField& J, const geom::MetricField& g,
                      const geom::ChartPoint& p) {
  return span_alignment(v.values_at(p), w.values_at(p), J.values_at(p), g.values_at(p));
}

}  // namespace riccheck::residuals
