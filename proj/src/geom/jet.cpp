#include "riccheck/geom/jet.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace riccheck::geom {

namespace {

void enumerate_exponents(int dim, int order, std::vector<std::vector<int>>& out) {
  // all multi-indices with total degree <= order, sorted by degree then
  // lexicographically descending in the leading entries
  std::vector<int> e(dim, 0);
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == dim - 1) {
      e[pos] = remaining;
      out.push_back(e);
      e[pos] = 0;
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      e[pos] = v;
      self(self, pos + 1, remaining - v);
    }
    e[pos] = 0;
  };
  for (int d = 0; d <= order; ++d) rec(rec, 0, d);
}

int ipow(int b, int e) {
  int r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

std::map<std::pair<int, int>, JetLayout>& layout_cache() {
  static std::map<std::pair<int, int>, JetLayout> cache;
  return cache;
}
std::mutex layout_mutex;

}  // namespace

const JetLayout& JetLayout::get(int dim, int order) {
  if (dim < 1 || dim > 12 || order < 0 || order > 6)
    throw jet_order_error("jet layout out of supported range (dim 1..12, order 0..6)");
  std::lock_guard<std::mutex> lock(layout_mutex);
  auto key = std::make_pair(dim, order);
  auto& cache = layout_cache();
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  JetLayout lay;
  lay.dim = dim;
  lay.order = order;
  std::vector<std::vector<int>> exps;
  enumerate_exponents(dim, order, exps);
  lay.size = static_cast<int>(exps.size());
  lay.exps.resize(static_cast<std::size_t>(lay.size) * dim);
  lay.degree.resize(lay.size);
  lay.code.resize(lay.size);
  lay.index_of_code.assign(ipow(order + 1, dim), -1);
  lay.end_of_degree.assign(order + 1, 0);
  int radix = order + 1;
  for (int i = 0; i < lay.size; ++i) {
    int deg = 0, code = 0, scale = 1;
    for (int d = 0; d < dim; ++d) {
      int e = exps[i][d];
      lay.exps[static_cast<std::size_t>(i) * dim + d] = static_cast<std::uint8_t>(e);
      deg += e;
      code += e * scale;
      scale *= radix;
    }
    lay.degree[i] = deg;
    lay.code[i] = code;
    lay.index_of_code[code] = i;
  }
  for (int d = 0; d <= order; ++d) {
    int cnt = 0;
    for (int i = 0; i < lay.size; ++i)
      if (lay.degree[i] <= d) ++cnt;
    lay.end_of_degree[d] = cnt;
  }
  return cache.emplace(key, std::move(lay)).first->second;
}

int JetLayout::index(std::span<const int> e) const {
  int code_ = 0, scale = 1, radix = order + 1;
  for (int d = 0; d < dim; ++d) {
    if (e[d] < 0 || e[d] > order) return -1;
    code_ += e[d] * scale;
    scale *= radix;
  }
  if (code_ >= static_cast<int>(index_of_code.size())) return -1;
  return index_of_code[code_];
}

Jet::Jet(int dim, int order, double value) : dim_(dim), order_(order) {
  const JetLayout& lay = JetLayout::get(dim, order);
  c_.assign(lay.size, 0.0);
  c_[0] = value;
}

Jet Jet::coordinate(int dim, int order, int i, double v) {
  Jet j(dim, order, v);
  if (order >= 1) {
    std::vector<int> e(dim, 0);
    e[i] = 1;
    j.c_[j.layout().index(e)] = 1.0;
  }
  return j;
}

double Jet::d1(int i) const {
  if (order_ < 1) throw jet_order_error("d1 requires order >= 1");
  std::vector<int> e(dim_, 0);
  e[i] = 1;
  return c_[layout().index(e)];
}

double Jet::d2(int i, int j) const {
  if (order_ < 2) throw jet_order_error("d2 requires order >= 2");
  std::vector<int> e(dim_, 0);
  e[i] += 1;
  e[j] += 1;
  double fact = (i == j) ? 2.0 : 1.0;
  return c_[layout().index(e)] * fact;
}

double Jet::d3(int i, int j, int k) const {
  if (order_ < 3) throw jet_order_error("d3 requires order >= 3");
  std::vector<int> e(dim_, 0);
  e[i] += 1;
  e[j] += 1;
  e[k] += 1;
  double fact = 1.0;
  for (int d = 0; d < dim_; ++d) {
    if (e[d] == 2) fact *= 2.0;
    if (e[d] == 3) fact *= 6.0;
  }
  return c_[layout().index(e)] * fact;
}

Jet Jet::truncated(int new_order) const {
  if (new_order == order_) return *this;
  if (new_order > order_) throw jet_order_error("cannot raise jet order by truncation");
  Jet r(dim_, new_order);
  const JetLayout& lr = r.layout();
  const JetLayout& ls = layout();
  std::vector<int> e(dim_);
  for (int i = 0; i < lr.size; ++i) {
    for (int d = 0; d < dim_; ++d) e[d] = lr.exp(i)[d];
    r.c_[i] = c_[ls.index(e)];
  }
  return r;
}

Jet Jet::derivative(int i) const {
  if (order_ < 1) throw jet_order_error("derivative requires order >= 1");
  Jet r(dim_, order_ - 1);
  const JetLayout& ls = layout();
  const JetLayout& lr = r.layout();
  for (int t = 0; t < ls.size; ++t) {
    int ei = ls.exp(t)[i];
    if (ei == 0) continue;
    std::vector<int> e(dim_);
    for (int d = 0; d < dim_; ++d) e[d] = ls.exp(t)[d];
    e[i] -= 1;
    int idx = lr.index(e);
    if (idx >= 0) r.c_[idx] += static_cast<double>(ei) * c_[t];
  }
  return r;
}

Jet Jet::operator-() const {
  Jet r = *this;
  for (double& x : r.c_) x = -x;
  return r;
}

void Jet::align(Jet& a, Jet& b) {
  if (a.dim_ != b.dim_) throw jet_order_error("jet dimension mismatch");
  if (a.order_ > b.order_) a = a.truncated(b.order_);
  if (b.order_ > a.order_) b = b.truncated(a.order_);
}

Jet& Jet::operator+=(const Jet& o) {
  Jet ob = o;
  align(*this, ob);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += ob.c_[i];
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  Jet ob = o;
  align(*this, ob);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= ob.c_[i];
  return *this;
}

Jet& Jet::operator*=(double s) {
  for (double& x : c_) x *= s;
  return *this;
}

Jet& Jet::operator+=(double s) {
  c_[0] += s;
  return *this;
}

Jet& Jet::operator-=(double s) {
  c_[0] -= s;
  return *this;
}

Jet operator*(const Jet& a, const Jet& b) {
  Jet x = a, y = b;
  Jet::align(x, y);
  const JetLayout& lay = x.layout();
  Jet r(x.dim(), x.order());
  for (int i = 0; i < lay.size; ++i) {
    double ci = x.raw(i);
    if (ci == 0.0) continue;
    int rem = lay.order - lay.degree[i];
    int jend = lay.end_of_degree[rem];
    int code_i = lay.code[i];
    for (int j = 0; j < jend; ++j) {
      double cj = y.raw(j);
      if (cj == 0.0) continue;
      r.raw(lay.index_of_code[code_i + lay.code[j]]) += ci * cj;
    }
  }
  return r;
}

Jet compose_series(std::span<const double> series, const Jet& w) {
  // Horner; exact under truncation when w.value() == 0.
  Jet r = Jet::constant(w.dim(), w.order(), series.empty() ? 0.0 : series[series.size() - 1]);
  for (int k = static_cast<int>(series.size()) - 2; k >= 0; --k) {
    r = r * w;
    r += series[static_cast<std::size_t>(k)];
  }
  return r;
}

namespace {

// Apply a univariate function given its derivatives at the value part.
// derivs[k] = f^(k)(u0); converted to Taylor coefficients internally.
Jet apply_series(const Jet& u, std::span<const double> derivs) {
  int K = u.order();
  std::vector<double> taylor(static_cast<std::size_t>(K) + 1);
  double fact = 1.0;
  for (int k = 0; k <= K; ++k) {
    if (k > 0) fact *= k;
    taylor[k] = derivs[k] / fact;
  }
  Jet w = u;
  w.raw(0) = 0.0;
  return compose_series(taylor, w);
}

}  // namespace

Jet recip(const Jet& a) {
  double u = a.value();
  if (u == 0.0) throw singularity_error("jet reciprocal of zero value");
  int K = a.order();
  std::vector<double> d(static_cast<std::size_t>(K) + 1);
  // f = 1/x: f^(k)(u) = (-1)^k k! / u^{k+1}
  double fact = 1.0, up = u;
  for (int k = 0; k <= K; ++k) {
    if (k > 0) fact *= k;
    d[k] = ((k % 2) ? -1.0 : 1.0) * fact / up;
    up *= u;
  }
  return apply_series(a, d);
}

Jet operator/(const Jet& a, const Jet& b) { return a * recip(b); }

Jet operator/(double s, const Jet& a) { return recip(a) * s; }

Jet exp(const Jet& a) {
  int K = a.order();
  double e = std::exp(a.value());
  std::vector<double> d(static_cast<std::size_t>(K) + 1, e);
  return apply_series(a, d);
}

Jet log(const Jet& a) {
  double u = a.value();
  if (u <= 0.0) throw field_domain_error("jet log of nonpositive value");
  int K = a.order();
  std::vector<double> d(static_cast<std::size_t>(K) + 1);
  d[0] = std::log(u);
  // f^(k) = (-1)^{k+1} (k-1)! / u^k
  double fact = 1.0, up = u;
  for (int k = 1; k <= K; ++k) {
    if (k > 1) fact *= (k - 1);
    d[k] = ((k % 2) ? 1.0 : -1.0) * fact / up;
    up *= u;
  }
  return apply_series(a, d);
}

Jet pow(const Jet& a, double e) {
  double u = a.value();
  if (u <= 0.0) throw field_domain_error("jet pow of nonpositive base");
  int K = a.order();
  std::vector<double> d(static_cast<std::size_t>(K) + 1);
  double coef = 1.0;
  for (int k = 0; k <= K; ++k) {
    d[k] = coef * std::pow(u, e - k);
    coef *= (e - k);
  }
  return apply_series(a, d);
}

Jet sqrt(const Jet& a) { return pow(a, 0.5); }

Jet pow(const Jet& a, int e) {
  if (e < 0) return recip(pow(a, -e));
  Jet r = Jet::constant(a.dim(), a.order(), 1.0);
  Jet base = a;
  int n = e;
  while (n > 0) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

Jet sin(const Jet& a) {
  int K = a.order();
  double s = std::sin(a.value()), c = std::cos(a.value());
  std::vector<double> d(static_cast<std::size_t>(K) + 1);
  const double cycle[4] = {s, c, -s, -c};
  for (int k = 0; k <= K; ++k) d[k] = cycle[k % 4];
  return apply_series(a, d);
}

Jet cos(const Jet& a) {
  int K = a.order();
  double s = std::sin(a.value()), c = std::cos(a.value());
  std::vector<double> d(static_cast<std::size_t>(K) + 1);
  const double cycle[4] = {c, -s, -c, s};
  for (int k = 0; k <= K; ++k) d[k] = cycle[k % 4];
  return apply_series(a, d);
}

Jet sinh(const Jet& a) {
  int K = a.order();
  double s = std::sinh(a.value()), c = std::cosh(a.value());
  std::vector<double> d(static_cast<std::size_t>(K) + 1);
  for (int k = 0; k <= K; ++k) d[k] = (k % 2) ? c : s;
  return apply_series(a, d);
}

Jet cosh(const Jet& a) {
  int K = a.order();
  double s = std::sinh(a.value()), c = std::cosh(a.value());
  std::vector<double> d(static_cast<std::size_t>(K) + 1);
  for (int k = 0; k <= K; ++k) d[k] = (k % 2) ? s : c;
  return apply_series(a, d);
}

Jet tanh(const Jet& a) {
  // derivatives of tanh are polynomials in t = tanh(u); build them by
  // differentiating the polynomial representation, using t' = 1 - t^2
  int K = a.order();
  double t = std::tanh(a.value());
  std::vector<double> d(static_cast<std::size_t>(K) + 1);
  std::vector<double> poly = {0.0, 1.0};  // current derivative as poly in t; start: f = t
  auto eval = [&](const std::vector<double>& p) {
    double r = 0.0, tp = 1.0;
    for (double c : p) {
      r += c * tp;
      tp *= t;
    }
    return r;
  };
  d[0] = t;
  for (int k = 1; k <= K; ++k) {
    // differentiate poly(t) wrt u: poly'(t) * (1 - t^2)
    std::vector<double> dp(poly.size() > 1 ? poly.size() - 1 : 1, 0.0);
    for (std::size_t i = 1; i < poly.size(); ++i) dp[i - 1] = poly[i] * static_cast<double>(i);
    std::vector<double> next(dp.size() + 2, 0.0);
    for (std::size_t i = 0; i < dp.size(); ++i) {
      next[i] += dp[i];
      next[i + 2] -= dp[i];
    }
    poly = next;
    d[k] = eval(poly);
  }
  return apply_series(a, d);
}

void JetMat::symmetrize() {
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Jet s = (at(i, j) + at(j, i)) * 0.5;
      at(i, j) = s;
      at(j, i) = s;
    }
}

JetMat operator+(const JetMat& x, const JetMat& y) {
  JetMat r = x;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
  return r;
}

JetMat operator-(const JetMat& x, const JetMat& y) {
  JetMat r = x;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
  return r;
}

JetMat mul(const JetMat& x, const JetMat& y) {
  int n = x.n;
  JetMat r(n, Jet(x.a[0].dim(), std::min(x.a[0].order(), y.a[0].order())));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Jet s = x.at(i, 0) * y.at(0, j);
      for (int k = 1; k < n; ++k) s += x.at(i, k) * y.at(k, j);
      r.at(i, j) = s;
    }
  return r;
}

JetMat scale(const JetMat& x, const Jet& s) {
  JetMat r = x;
  for (auto& e : r.a) e = e * s;
  return r;
}

JetMat inverse(const JetMat& g) {
  int n = g.n;
  int dim = g.a[0].dim(), order = g.a[0].order();
  JetMat work = g;
  JetMat inv(n, Jet(dim, order));
  for (int i = 0; i < n; ++i) inv.at(i, i) = Jet::constant(dim, order, 1.0);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    double best = 0.0;
    for (int r = col; r < n; ++r) {
      double v = std::abs(work.at(r, col).value());
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (piv < 0 || best < 1e-14) throw degenerate_metric_error("singular matrix in jet inverse");
    if (piv != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(work.at(piv, j), work.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    }
    Jet ip = recip(work.at(col, col));
    for (int j = 0; j < n; ++j) {
      work.at(col, j) = work.at(col, j) * ip;
      inv.at(col, j) = inv.at(col, j) * ip;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      Jet f = work.at(r, col);
      if (f.value() == 0.0) {
        bool zero = true;
        for (double c : f.coeffs())
          if (c != 0.0) zero = false;
        if (zero) continue;
      }
      for (int j = 0; j < n; ++j) {
        work.at(r, j) -= f * work.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

Jet trace_with(const JetMat& ginv, const JetMat& t) {
  int n = ginv.n;
  Jet s = ginv.at(0, 0) * t.at(0, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == 0 && j == 0) continue;
      s += ginv.at(i, j) * t.at(i, j);
    }
  return s;
}

}  // namespace riccheck::geom
