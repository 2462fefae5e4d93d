#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "riccheck/errors.hpp"

namespace riccheck::geom {

// Term layout of a dense truncated multivariate Taylor polynomial: all
// exponent multi-indices of total degree <= order in dim variables, sorted
// by degree, then lexicographically. Index 0 is the constant term.
// Layouts are built once per (dim, order) and cached.
struct JetLayout {
  int dim = 0;
  int order = 0;
  int size = 0;
  std::vector<std::uint8_t> exps;   // size * dim, row-major
  std::vector<int> degree;          // total degree per term
  std::vector<int> code;            // radix-(order+1) packing of the exponent
  std::vector<int> index_of_code;   // dense lookup, (order+1)^dim entries
  std::vector<int> end_of_degree;   // end_of_degree[d] = one past last term of degree d

  const std::uint8_t* exp(int i) const { return exps.data() + static_cast<std::size_t>(i) * dim; }
  int index(std::span<const int> e) const;

  static const JetLayout& get(int dim, int order);
};

// Truncated Taylor expansion of a smooth function at a point: value plus all
// partial-derivative data up to `order`. Coefficients are Taylor coefficients
// (derivatives divided by multi-index factorials). All arithmetic is exact
// modulo the truncation, so derivatives extracted from jets carry no
// finite-difference noise.
class Jet {
 public:
  Jet() = default;
  Jet(int dim, int order, double value = 0.0);

  static Jet constant(int dim, int order, double value) { return Jet(dim, order, value); }
  // Coordinate function x_i at value v: seeds the first-order slot.
  static Jet coordinate(int dim, int order, int i, double v);

  int dim() const { return dim_; }
  int order() const { return order_; }
  const JetLayout& layout() const { return JetLayout::get(dim_, order_); }

  double value() const { return c_.empty() ? 0.0 : c_[0]; }
  double& raw(int i) { return c_[i]; }
  double raw(int i) const { return c_[i]; }
  std::span<const double> coeffs() const { return c_; }

  // Partial derivatives (not Taylor coefficients): d1(i) = df/dx_i, etc.
  double d1(int i) const;
  double d2(int i, int j) const;
  double d3(int i, int j, int k) const;

  Jet truncated(int new_order) const;
  // d/dx_i as a jet of one order lower.
  Jet derivative(int i) const;

  Jet operator-() const;
  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(double s);
  Jet& operator+=(double s);
  Jet& operator-=(double s);

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator/(const Jet& a, const Jet& b);
  friend Jet operator+(Jet a, double s) { return a += s; }
  friend Jet operator+(double s, Jet a) { return a += s; }
  friend Jet operator-(Jet a, double s) { return a -= s; }
  friend Jet operator-(double s, const Jet& a) { return (-a) += s; }
  friend Jet operator*(Jet a, double s) { return a *= s; }
  friend Jet operator*(double s, Jet a) { return a *= s; }
  friend Jet operator/(Jet a, double s) { return a *= (1.0 / s); }
  friend Jet operator/(double s, const Jet& a);

 private:
  // Binary ops truncate to the smaller order of the two operands.
  static void align(Jet& a, Jet& b);

  int dim_ = 0;
  int order_ = 0;
  std::vector<double> c_;
};

// sum_k series[k] * w^k, truncated. Used to push univariate Taylor data of an
// outer function through an inner jet; callers pass w with zero value part.
Jet compose_series(std::span<const double> series, const Jet& w);

Jet recip(const Jet& a);
Jet exp(const Jet& a);
Jet log(const Jet& a);
Jet sqrt(const Jet& a);
Jet pow(const Jet& a, double e);
Jet pow(const Jet& a, int e);
Jet sin(const Jet& a);
Jet cos(const Jet& a);
Jet sinh(const Jet& a);
Jet cosh(const Jet& a);
Jet tanh(const Jet& a);

// Square matrix of jets, row-major; used for metric components and
// (1,1)-tensors evaluated in jet arithmetic.
struct JetMat {
  int n = 0;
  std::vector<Jet> a;

  JetMat() = default;
  JetMat(int n_, const Jet& fill) : n(n_), a(static_cast<std::size_t>(n_) * n_, fill) {}

  Jet& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  const Jet& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

  void symmetrize();
};

JetMat operator+(const JetMat& x, const JetMat& y);
JetMat operator-(const JetMat& x, const JetMat& y);
JetMat mul(const JetMat& x, const JetMat& y);
JetMat scale(const JetMat& x, const Jet& s);
// Gauss-Jordan with value-part pivoting; throws degenerate_metric_error.
JetMat inverse(const JetMat& g);
// g^{ab} T_ab
Jet trace_with(const JetMat& ginv, const JetMat& t);

// Rank-3 array of jets indexed (k, i, j); holds Christoffel symbols.
struct JetR3 {
  int n = 0;
  std::vector<Jet> a;

  JetR3() = default;
  JetR3(int n_, const Jet& fill) : n(n_), a(static_cast<std::size_t>(n_) * n_ * n_, fill) {}

  Jet& at(int k, int i, int j) { return a[(static_cast<std::size_t>(k) * n + i) * n + j]; }
  const Jet& at(int k, int i, int j) const { return a[(static_cast<std::size_t>(k) * n + i) * n + j]; }
};

}  // namespace riccheck::geom
