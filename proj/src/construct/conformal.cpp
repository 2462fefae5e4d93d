#include "riccheck/construct/conformal.hpp"

namespace riccheck::construct {

using geom::Jet;
using geom::JetMat;
using geom::JetVec;

ConformalPair conformal_rescale(const geom::MetricField& g, const geom::ScalarField& tau) {
  ConformalPair cp;
  cp.g = g;
  cp.tau = tau;
  cp.dim = g.dim;
  cp.ghat.dim = g.dim;
  auto gfn = g.fn;
  auto tfn = tau.fn;
  cp.ghat.fn = [gfn, tfn](const JetVec& x) {
    Jet t = tfn(x);
    if (t.value() <= 0.0) throw field_domain_error("conformal factor not positive");
    Jet w = recip(t * t);
    JetMat gm = gfn(x);
    for (auto& e : gm.a) e = e * w;
    return gm;
  };
  return cp;
}

JetMat conformal_ricci_rhs(const JetMat& g, const Jet& tau) {
  int n = g.n;
  if (tau.value() <= 0.0) throw field_domain_error("conformal factor not positive");
  JetMat ric = geom::ricci(g);
  JetMat ht = geom::hessian(tau, g);
  Jet lap = geom::trace_with(geom::inverse(g), ht);
  JetVec dt = geom::differential(tau);
  Jet q = geom::inner_covec(dt, dt, geom::inverse(g));  // |grad tau|^2
  Jet it = recip(tau);
  Jet coef = it * lap - static_cast<double>(n - 1) * it * it * q;
  JetMat out = ric;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out.at(i, j) += static_cast<double>(n - 2) * it * ht.at(i, j) + coef * g.at(i, j);
  return out;
}

Eigen::MatrixXd conformal_ricci_rhs(const geom::MetricField& g, const geom::ScalarField& tau,
                                    const geom::ChartPoint& p) {
  int order = 4;  // metric jets deep enough for Ricci of the result
  return geom::values(conformal_ricci_rhs(g.at(p, order), tau.at(p, order)));
}

JetMat conformal_hessian_rhs(const JetMat& g, const Jet& tau, const Jet& f) {
  int n = g.n;
  if (tau.value() <= 0.0) throw field_domain_error("conformal factor not positive");
  JetMat hf = geom::hessian(f, g);
  JetVec dt = geom::differential(tau);
  JetVec df = geom::differential(f);
  JetMat gi = geom::inverse(g);
  Jet cross = geom::inner_covec(dt, df, gi);  // g(grad tau, grad f)
  Jet it = recip(tau);
  JetMat sym = geom::sym_product(dt, df);
  JetMat out = hf;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) += it * (2.0 * sym.at(i, j) - cross * g.at(i, j));
  return out;
}

Eigen::MatrixXd conformal_hessian_rhs(const geom::MetricField& g, const geom::ScalarField& tau,
                                      const geom::ScalarField& f, const geom::ChartPoint& p) {
  int order = 3;
  return geom::values(conformal_hessian_rhs(g.at(p, order), tau.at(p, order), f.at(p, order)));
}

Jet conformal_laplacian_rhs(const JetMat& g, const Jet& tau, const Jet& f) {
  if (tau.value() <= 0.0) throw field_domain_error("conformal factor not positive");
  int n = g.n;
  Jet lap = geom::laplacian(f, g);
  JetVec dt = geom::differential(tau);
  JetVec df = geom::differential(f);
  Jet cross = geom::inner_covec(dt, df, geom::inverse(g));
  return tau * tau * lap - static_cast<double>(n - 2) * tau * cross;
}

double conformal_laplacian_rhs(const geom::MetricField& g, const geom::ScalarField& tau,
                               const geom::ScalarField& f, const geom::ChartPoint& p) {
  return conformal_laplacian_rhs(g.at(p, 3), tau.at(p, 3), f.at(p, 3)).value();
}

}  // namespace riccheck::construct
