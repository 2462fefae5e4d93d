#include "riccheck/geom/finitediff.hpp"

#include <vector>

namespace riccheck::geom {

double fd_partial(const ScalarValues& f, const ChartPoint& p, int i, double h) {
  ChartPoint a = p, b = p;
  a[i] += h;
  b[i] -= h;
  return (f(a) - f(b)) / (2 * h);
}

double fd_partial2(const ScalarValues& f, const ChartPoint& p, int i, int j, double h) {
  if (i == j) {
    ChartPoint a = p, b = p;
    a[i] += h;
    b[i] -= h;
    return (f(a) - 2 * f(p) + f(b)) / (h * h);
  }
  ChartPoint pp = p, pm = p, mp = p, mm = p;
  pp[i] += h; pp[j] += h;
  pm[i] += h; pm[j] -= h;
  mp[i] -= h; mp[j] += h;
  mm[i] -= h; mm[j] -= h;
  return (f(pp) - f(pm) - f(mp) + f(mm)) / (4 * h * h);
}

namespace {

std::vector<Eigen::MatrixXd> christoffel_values(const MetricValues& g, const ChartPoint& p,
                                                double h) {
  int n = static_cast<int>(p.size());
  Eigen::MatrixXd gi = g(p).inverse();
  // dg[l] = d_l g
  std::vector<Eigen::MatrixXd> dg(n);
  for (int l = 0; l < n; ++l) {
    ChartPoint a = p, b = p;
    a[l] += h;
    b[l] -= h;
    dg[l] = (g(a) - g(b)) / (2 * h);
  }
  std::vector<Eigen::MatrixXd> ga(n, Eigen::MatrixXd::Zero(n, n));
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int l = 0; l < n; ++l) s += gi(k, l) * (dg[i](l, j) + dg[j](l, i) - dg[l](i, j));
        ga[k](i, j) = 0.5 * s;
      }
  return ga;
}

}  // namespace

Eigen::MatrixXd fd_christoffel_slice(const MetricValues& g, const ChartPoint& p, int k, double h) {
  return christoffel_values(g, p, h)[k];
}

Eigen::MatrixXd fd_ricci(const MetricValues& g, const ChartPoint& p, double h) {
  int n = static_cast<int>(p.size());
  double hi = h / 8;  // inner step for the Christoffel differencing
  std::vector<Eigen::MatrixXd> ga = christoffel_values(g, p, hi);
  // dga[m][k] = d_m Gamma^k at p
  std::vector<std::vector<Eigen::MatrixXd>> dga(n);
  for (int m = 0; m < n; ++m) {
    ChartPoint a = p, b = p;
    a[m] += h;
    b[m] -= h;
    auto gp = christoffel_values(g, a, hi);
    auto gm = christoffel_values(g, b, hi);
    dga[m].resize(n);
    for (int k = 0; k < n; ++k) dga[m][k] = (gp[k] - gm[k]) / (2 * h);
  }
  Eigen::MatrixXd ric(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) {
        s += dga[k][k](i, j);
        s -= dga[j][k](k, i);
      }
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          s += ga[k](k, l) * ga[l](i, j);
          s -= ga[k](j, l) * ga[l](k, i);
        }
      ric(i, j) = s;
    }
  return ric;
}

}  // namespace riccheck::geom
