#include "riccheck/residuals/quasi.hpp"

namespace riccheck::residuals {

using geom::Jet;
using geom::JetMat;
using geom::JetVec;

QuasiResiduals quasi_soliton_residual(const QuasiSolitonScenario& q, const geom::ChartPoint& pb,
                                      const geom::ChartPoint& pf) {
  auto blocks = construct::warped_block_formulas(q.wp, q.f, pb, pf);
  Eigen::MatrixXd gb = q.wp.base.values_at(pb);
  Eigen::MatrixXd gf = q.wp.fiber.values_at(pf);
  double l0 = blocks.ell_value;

  QuasiResiduals r;
  r.base = blocks.ric_base + blocks.hess_base - q.lambda * gb;
  // blocks.ric_fiber already carries -ell_sharp ell^2 g_F; undo to isolate Ric_F.
  Eigen::MatrixXd ric_f = blocks.ric_fiber + blocks.ell_sharp * l0 * l0 * gf;
  r.fiber = ric_f - q.nu * gf;
  r.scalar = q.nu + l0 * blocks.df_ell - l0 * l0 * blocks.ell_sharp - q.lambda * l0 * l0;
  return r;
}

double fit_fiber_constant(const QuasiSolitonScenario& q, const geom::ChartPoint& pb_anchor) {
  JetVec xb = geom::seed_coordinates(pb_anchor, 3);
  JetMat gb = q.wp.base.eval(xb);
  Jet ell = q.wp.warp.eval(xb);
  if (ell.value() <= 0.0) throw field_domain_error("warping function not positive");
  JetMat gbi = geom::inverse(gb);
  JetVec dell = geom::differential(ell);
  double l0 = ell.value();
  double lap = geom::laplacian(ell, gb).value();
  double q2 = geom::inner_covec(dell, dell, gbi).value();
  double ell_sharp = lap / l0 + (q.k() - 1) * q2 / (l0 * l0);
  double df_ell = 0.0;
  if (q.f.valid())
    df_ell = geom::inner_covec(geom::differential(q.f.eval(xb)), dell, gbi).value();
  return l0 * l0 * ell_sharp + q.lambda * l0 * l0 - l0 * df_ell;
}

Eigen::MatrixXd special_qs_residual(const QuasiSolitonScenario& q, const skr::Profile& f_of_ell,
                                    const geom::ChartPoint& pb, double dependence_tol) {
  int k = q.k();
  JetVec xb = geom::seed_coordinates(pb, 3);
  JetMat gb = q.wp.base.eval(xb);
  Jet ell = q.wp.warp.eval(xb);
  if (ell.value() <= 0.0) throw field_domain_error("warping function not positive");

  JetVec dell = geom::differential(ell);
  if (q.f.valid()) {
    JetVec df = geom::differential(q.f.eval(xb));
    double defect =
        geom::functional_dependence_defect(geom::values(df), geom::values(dell));
    if (defect > dependence_tol)
      throw precondition_error("potential is not a function of the warping function here");
  }

  double l0 = ell.value();
  double fp = f_of_ell.d1(l0);
  double fpp = f_of_ell.d2(l0);
  Eigen::MatrixXd hess_ell = geom::values(geom::hessian(ell, gb));
  Eigen::VectorXd dlv = geom::values(dell);
  Eigen::MatrixXd ric = geom::values(geom::ricci(gb));
  Eigen::MatrixXd gv = geom::values(gb);
  return ric + (fp - k / l0) * hess_ell + fpp * (dlv * dlv.transpose()) - q.lambda * gv;
}

geom::ScalarField pullback_to_product(const geom::ScalarField& f_base, int base_dim,
                                      int total_dim) {
  geom::ScalarField f;
  f.dim = total_dim;
  if (!f_base.valid()) return f;
  auto fn = f_base.fn;
  f.fn = [fn, base_dim](const JetVec& x) {
    JetVec xb(x.begin(), x.begin() + base_dim);
    return fn(xb);
  };
  return f;
}

}  // namespace riccheck::residuals
