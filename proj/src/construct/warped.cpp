#include "riccheck/construct/warped.hpp"

namespace riccheck::construct {

using geom::Jet;
using geom::JetMat;
using geom::JetVec;

geom::ChartPoint WarpedProduct::join(const geom::ChartPoint& pb,
                                     const geom::ChartPoint& pf) const {
  geom::ChartPoint p(base_dim + fiber_dim);
  p.head(base_dim) = pb;
  p.tail(fiber_dim) = pf;
  return p;
}

WarpedProduct warped_product(const geom::MetricField& gb, const geom::MetricField& gf,
                             const geom::ScalarField& ell) {
  WarpedProduct wp;
  wp.base = gb;
  wp.fiber = gf;
  wp.warp = ell;
  wp.base_dim = gb.dim;
  wp.fiber_dim = gf.dim;
  wp.total.dim = gb.dim + gf.dim;
  int b = gb.dim, k = gf.dim;
  auto bfn = gb.fn;
  auto ffn = gf.fn;
  auto lfn = ell.fn;
  wp.total.fn = [b, k, bfn, ffn, lfn](const JetVec& x) {
    JetVec xb(x.begin(), x.begin() + b);
    JetVec xf(x.begin() + b, x.end());
    Jet l = lfn(xb);
    if (l.value() <= 0.0) throw field_domain_error("warping function not positive");
    Jet l2 = l * l;
    JetMat mb = bfn(xb);
    JetMat mf = ffn(xf);
    int dim = x[0].dim(), order = x[0].order();
    JetMat m(b + k, Jet(dim, order));
    for (int i = 0; i < b; ++i)
      for (int j = 0; j < b; ++j) m.at(i, j) = mb.at(i, j);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) m.at(b + i, b + j) = l2 * mf.at(i, j);
    return m;
  };
  return wp;
}

WarpedBlocks warped_block_formulas(const WarpedProduct& wp, const geom::ScalarField& f,
                                   const geom::ChartPoint& p_base,
                                   const geom::ChartPoint& p_fiber) {
  int k = wp.fiber_dim;
  int order = 3;
  JetMat gb = wp.base.at(p_base, order);
  JetVec xb = geom::seed_coordinates(p_base, order);
  Jet ell = wp.warp.eval(xb);
  if (ell.value() <= 0.0) throw field_domain_error("warping function not positive");
  Jet fj = f.valid() ? f.eval(xb) : Jet::constant(wp.base_dim, order, 0.0);

  JetMat gbi = geom::inverse(gb);
  JetMat hess_ell = geom::hessian(ell, gb);
  JetVec dell = geom::differential(ell);
  JetVec df = geom::differential(fj);
  double lap_ell = geom::trace_with(gbi, hess_ell).value();
  double grad_ell2 = geom::inner_covec(dell, dell, gbi).value();
  double l0 = ell.value();

  WarpedBlocks out;
  out.ell_value = l0;
  out.ell_sharp = lap_ell / l0 + (k - 1) * grad_ell2 / (l0 * l0);
  out.df_ell = geom::inner_covec(df, dell, gbi).value();
  out.ric_base = geom::values(geom::ricci(gb)) - (k / l0) * geom::values(hess_ell);
  out.hess_base = geom::values(geom::hessian(fj, gb));

  JetMat gf = wp.fiber.at(p_fiber, 2);
  Eigen::MatrixXd gfv = geom::values(gf);
  out.ric_fiber = geom::values(geom::ricci(gf)) - out.ell_sharp * l0 * l0 * gfv;
  out.hess_fiber = l0 * out.df_ell * gfv;
  return out;
}

}  // namespace riccheck::construct
