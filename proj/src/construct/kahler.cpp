#include "riccheck/construct/kahler.hpp"

#include <Eigen/Dense>
#include <cstring>

#include "riccheck/geom/calculus.hpp"

namespace riccheck::construct {

using geom::Jet;
using geom::JetMat;
using geom::JetVec;

namespace {

bool is_coordinate_seed(const Jet& x, int i) {
  Jet c = Jet::coordinate(x.dim(), x.order(), i, x.value());
  auto a = x.coeffs();
  auto b = c.coeffs();
  if (a.size() != b.size()) return false;
  return std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

JetMat complex_structure_matrix(int m, int dim, int order) {
  JetMat j(2 * m, Jet::constant(dim, order, 0.0));
  for (int k = 0; k < m; ++k) {
    j.at(2 * k, 2 * k + 1) = Jet::constant(dim, order, -1.0);
    j.at(2 * k + 1, 2 * k) = Jet::constant(dim, order, 1.0);
  }
  return j;
}

}  // namespace

geom::EndoField standard_complex_structure(int m) {
  geom::EndoField j;
  j.dim = 2 * m;
  j.fn = [m](const JetVec& x) {
    return complex_structure_matrix(m, x[0].dim(), x[0].order());
  };
  return j;
}

KahlerChart kahler_from_potential(int m, const geom::ScalarField& potential) {
  KahlerChart chart;
  chart.m = m;
  chart.potential = potential;
  chart.J = standard_complex_structure(m);
  chart.g.dim = 2 * m;
  auto kfn = potential.fn;
  chart.g.fn = [m, kfn](const JetVec& x) {
    int n = 2 * m;
    if (static_cast<int>(x.size()) != n)
      throw precondition_error("potential metric expects its own chart dimension");
    for (int i = 0; i < n; ++i)
      if (x[i].dim() != n || !is_coordinate_seed(x[i], i))
        throw precondition_error("potential metric accepts coordinate seeds only");
    int order = x[0].order();
    JetVec xs;
    xs.reserve(n);
    for (int i = 0; i < n; ++i) xs.push_back(Jet::coordinate(n, order + 2, i, x[i].value()));
    Jet kp = kfn(xs);
    JetMat hess(n, Jet(n, order));
    for (int i = 0; i < n; ++i) {
      Jet di = kp.derivative(i);
      for (int j = i; j < n; ++j) {
        hess.at(i, j) = di.derivative(j);
        if (j > i) hess.at(j, i) = hess.at(i, j);
      }
    }
    JetMat jm = complex_structure_matrix(m, n, order);
    JetMat jhj = mul(jm, mul(hess, jm));
    JetMat g(n, Jet(n, order));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g.at(i, j) = 0.25 * (hess.at(i, j) - jhj.at(i, j));
    Eigen::MatrixXd gv = geom::values(g);
    Eigen::LLT<Eigen::MatrixXd> llt(gv);
    if (llt.info() != Eigen::Success)
      throw field_domain_error("potential is not positive-definite here");
    return g;
  };
  return chart;
}

}  // namespace riccheck::construct
