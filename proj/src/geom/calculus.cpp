#include "riccheck/geom/calculus.hpp"

#include <cmath>

namespace riccheck::geom {

namespace {

int jdim(const JetMat& m) { return m.a[0].dim(); }
int jorder(const JetMat& m) { return m.a[0].order(); }

}  // namespace

JetR3 christoffel(const JetMat& g) {
  int n = g.n, dim = jdim(g), s = jorder(g);
  if (s < 1) throw jet_order_error("christoffel needs metric jets of order >= 1");
  JetMat gi = inverse(g);
  JetR3 dg(n, Jet(dim, s - 1));
  for (int l = 0; l < n; ++l)
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        dg.at(l, i, j) = g.at(i, j).derivative(l);
        dg.at(l, j, i) = dg.at(l, i, j);
      }
  JetR3 gamma(n, Jet(dim, s - 1));
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        Jet acc(dim, s - 1);
        for (int l = 0; l < n; ++l)
          acc += gi.at(k, l) * (dg.at(i, l, j) + dg.at(j, l, i) - dg.at(l, i, j));
        acc *= 0.5;
        gamma.at(k, i, j) = acc;
        gamma.at(k, j, i) = acc;
      }
  return gamma;
}

JetMat ricci(const JetMat& g) {
  int n = g.n, dim = jdim(g), s = jorder(g);
  if (s < 2) throw jet_order_error("ricci needs metric jets of order >= 2");
  JetR3 ga = christoffel(g);
  // contracted symbols c_l = Gamma^k_{kl}
  JetVec c(n, Jet(dim, s - 1));
  for (int l = 0; l < n; ++l) {
    Jet acc(dim, s - 1);
    for (int k = 0; k < n; ++k) acc += ga.at(k, k, l);
    c[l] = acc;
  }
  JetMat ric(n, Jet(dim, s - 2));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Jet acc(dim, s - 2);
      for (int k = 0; k < n; ++k) acc += ga.at(k, i, j).derivative(k);
      acc -= c[i].derivative(j);
      for (int l = 0; l < n; ++l) {
        acc += c[l] * ga.at(l, i, j);
        for (int k = 0; k < n; ++k) acc -= ga.at(k, j, l) * ga.at(l, k, i);
      }
      ric.at(i, j) = acc;
      ric.at(j, i) = acc;
    }
  return ric;
}

Jet scalar_curvature(const JetMat& g) { return trace_with(inverse(g), ricci(g)); }

JetVec differential(const Jet& f) {
  JetVec df;
  df.reserve(f.dim());
  for (int i = 0; i < f.dim(); ++i) df.push_back(f.derivative(i));
  return df;
}

JetMat hessian(const Jet& f, const JetMat& g) {
  int n = g.n, dim = f.dim();
  JetR3 ga = christoffel(g);
  JetVec df = differential(f);
  int ro = std::min(f.order() - 2, jorder(g) - 1);
  JetMat h(n, Jet(dim, ro));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Jet acc(dim, ro);
      acc += df[i].derivative(j);
      for (int k = 0; k < n; ++k) acc -= ga.at(k, i, j) * df[k];
      h.at(i, j) = acc;
      h.at(j, i) = acc;
    }
  return h;
}

Jet laplacian(const Jet& f, const JetMat& g) { return trace_with(inverse(g), hessian(f, g)); }

JetVec gradient(const Jet& f, const JetMat& g) { return raise_index(differential(f), inverse(g)); }

Jet divergence(const JetVec& w, const JetMat& g) {
  int n = g.n, dim = jdim(g);
  JetR3 ga = christoffel(g);
  int ro = std::min(static_cast<int>(w[0].order()) - 1, jorder(g) - 1);
  Jet acc(dim, ro);
  for (int i = 0; i < n; ++i) {
    acc += w[i].derivative(i);
    for (int k = 0; k < n; ++k) acc += ga.at(i, i, k) * w[k];
  }
  return acc;
}

JetMat lie_derivative_metric(const JetVec& w, const JetMat& g) {
  int n = g.n, dim = jdim(g);
  int ro = std::min(static_cast<int>(w[0].order()), jorder(g)) - 1;
  JetMat r(n, Jet(dim, ro));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Jet acc(dim, ro);
      for (int k = 0; k < n; ++k) {
        acc += w[k] * g.at(i, j).derivative(k);
        acc += g.at(k, j) * w[k].derivative(i);
        acc += g.at(i, k) * w[k].derivative(j);
      }
      r.at(i, j) = acc;
      r.at(j, i) = acc;
    }
  return r;
}

JetVec divergence_sym2(const JetMat& t, const JetMat& g) {
  int n = g.n, dim = jdim(g);
  JetMat gi = inverse(g);
  JetR3 ga = christoffel(g);
  int ro = std::min(jorder(t) - 1, jorder(g) - 1);
  JetVec r(n, Jet(dim, ro));
  for (int j = 0; j < n; ++j) {
    Jet acc(dim, ro);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        Jet cov = t.at(k, j).derivative(i);
        for (int m = 0; m < n; ++m) {
          cov -= ga.at(m, i, k) * t.at(m, j);
          cov -= ga.at(m, i, j) * t.at(k, m);
        }
        acc += gi.at(i, k) * cov;
      }
    r[j] = acc;
  }
  return r;
}

JetR3 covariant_derivative_endo(const JetMat& a, const JetMat& g) {
  int n = g.n, dim = jdim(g);
  JetR3 ga = christoffel(g);
  int ro = std::min(jorder(a) - 1, jorder(g) - 1);
  JetR3 r(n, Jet(dim, ro));
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Jet acc(dim, ro);
        acc += a.at(i, j).derivative(k);
        for (int m = 0; m < n; ++m) {
          acc += ga.at(i, k, m) * a.at(m, j);
          acc -= ga.at(m, k, j) * a.at(i, m);
        }
        r.at(k, i, j) = acc;
      }
  return r;
}

JetVec commutator(const JetVec& v, const JetVec& w) {
  int n = static_cast<int>(v.size());
  int dim = v[0].dim();
  int ro = std::min(v[0].order(), w[0].order()) - 1;
  JetVec r(n, Jet(dim, ro));
  for (int i = 0; i < n; ++i) {
    Jet acc(dim, ro);
    for (int k = 0; k < n; ++k) {
      acc += v[k] * w[i].derivative(k);
      acc -= w[k] * v[i].derivative(k);
    }
    r[i] = acc;
  }
  return r;
}

JetMat exterior_derivative_oneform(const JetVec& a) {
  int n = static_cast<int>(a.size());
  int dim = a[0].dim();
  JetMat r(n, Jet(dim, a[0].order() - 1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.at(i, j) = a[j].derivative(i) - a[i].derivative(j);
  return r;
}

JetMat wedge(const JetVec& a, const JetVec& b) {
  int n = static_cast<int>(a.size());
  int dim = a[0].dim();
  int ro = std::min(a[0].order(), b[0].order());
  JetMat r(n, Jet(dim, ro));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.at(i, j) = a[i] * b[j] - a[j] * b[i];
  return r;
}

JetMat sym_product(const JetVec& a, const JetVec& b) {
  int n = static_cast<int>(a.size());
  int dim = a[0].dim();
  int ro = std::min(a[0].order(), b[0].order());
  JetMat r(n, Jet(dim, ro));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.at(i, j) = (a[i] * b[j] + a[j] * b[i]) * 0.5;
  return r;
}

JetVec interior_product(const JetVec& w, const JetMat& om) {
  int n = om.n;
  int dim = w[0].dim();
  int ro = std::min(w[0].order(), jorder(om));
  JetVec r(n, Jet(dim, ro));
  for (int j = 0; j < n; ++j) {
    Jet acc(dim, ro);
    for (int i = 0; i < n; ++i) acc += w[i] * om.at(i, j);
    r[j] = acc;
  }
  return r;
}

JetVec lower_index(const JetVec& w, const JetMat& g) {
  int n = g.n, dim = jdim(g);
  int ro = std::min(w[0].order(), jorder(g));
  JetVec r(n, Jet(dim, ro));
  for (int i = 0; i < n; ++i) {
    Jet acc(dim, ro);
    for (int j = 0; j < n; ++j) acc += g.at(i, j) * w[j];
    r[i] = acc;
  }
  return r;
}

JetVec raise_index(const JetVec& a, const JetMat& ginv) { return lower_index(a, ginv); }

double functional_dependence_defect(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  // Norm of the antisymmetrized components; cancellation-safe for parallel inputs,
  // unlike the Gram determinant.
  double n2 = 0.0;
  for (int i = 0; i < a.size(); ++i)
    for (int j = i + 1; j < b.size(); ++j) {
      double w = a(i) * b(j) - a(j) * b(i);
      n2 += w * w;
    }
  return std::sqrt(n2);
}

Jet inner_vec(const JetVec& v, const JetVec& w, const JetMat& g) {
  int n = g.n, dim = jdim(g);
  int ro = std::min({v[0].order(), w[0].order(), jorder(g)});
  Jet acc(dim, ro);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) acc += g.at(i, j) * v[i] * w[j];
  return acc;
}

Jet inner_covec(const JetVec& a, const JetVec& b, const JetMat& ginv) {
  return inner_vec(a, b, ginv);
}

double sup_norm(const Eigen::MatrixXd& t) { return t.cwiseAbs().maxCoeff(); }

double sup_norm(const Eigen::VectorXd& v) {
  return v.size() ? v.cwiseAbs().maxCoeff() : 0.0;
}

double metric_op_norm(const Eigen::MatrixXd& t, const Eigen::MatrixXd& g) {
  Eigen::MatrixXd ts = 0.5 * (t + t.transpose());
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(ts, g,
                                                               Eigen::EigenvaluesOnly | Eigen::Ax_lBx);
  if (es.info() != Eigen::Success)
    throw degenerate_metric_error("generalized eigensolver failed; metric not positive definite?");
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

double bilinear_norm(const Eigen::MatrixXd& t, const Eigen::MatrixXd& g) {
  Eigen::MatrixXd gi = g.llt().solve(Eigen::MatrixXd::Identity(g.rows(), g.cols()));
  return std::sqrt(std::abs((gi * t * gi * t.transpose()).trace()));
}

double endo_norm(const Eigen::MatrixXd& a, const Eigen::MatrixXd& g) {
  Eigen::MatrixXd gi = g.llt().solve(Eigen::MatrixXd::Identity(g.rows(), g.cols()));
  return std::sqrt(std::abs((gi * a.transpose() * g * a).trace()));
}

double covector_norm(const Eigen::VectorXd& a, const Eigen::MatrixXd& g) {
  Eigen::VectorXd x = g.llt().solve(a);
  return std::sqrt(std::abs(a.dot(x)));
}

double vector_norm(const Eigen::VectorXd& v, const Eigen::MatrixXd& g) {
  return std::sqrt(std::abs(v.dot(g * v)));
}

}  // namespace riccheck::geom
