#include "riccheck/skr/ode.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>

#include <boost/numeric/odeint.hpp>

#include "riccheck/errors.hpp"

namespace riccheck::skr {

using geom::Jet;

namespace {

constexpr double kPoleTol = 1e-12;

void check_away_from(double x, double pole, const char* msg) {
  if (std::abs(x - pole) < kPoleTol) throw singularity_error(msg);
}

}  // namespace

std::pair<double, double> skr_system_residual(const Profile& phi, const Profile& alpha,
                                              const Profile& gamma, const SKRParams& prm,
                                              double sigma0) {
  check_away_from(sigma0, prm.c, "sigma = c is outside the domain of the system");
  Jet ph = phi.at(sigma0, 2);
  double f0 = ph.value(), f1 = ph.d1(0), f2 = ph.d2(0, 0);
  double al = alpha.value(sigma0);
  double ga = gamma.value(sigma0);
  double sc = sigma0 - prm.c;
  double m = prm.m;
  double r1 = sc * sc * f2 + sc * (m - sc * al) * f1 - m * f0 - prm.K;
  double r2 = -sc * f2 + (al * sc - (m + 1.0)) * f1 + al * f0 - ga;
  return {r1, r2};
}

std::pair<Profile, Profile> y_q_profiles(const Profile& phi, const SKRParams& prm) {
  if (!phi.valid()) throw precondition_error("phi profile not set");
  double c = prm.c;
  double m = prm.m;
  Profile y;
  // consumes one derivative order of the seed
  y.fn = [phi, c, m](const Jet& s) {
    Jet ph = phi.eval(s);
    return 2.0 * m * ph + 2.0 * (s - c) * ph.derivative(0);
  };
  Profile q;
  q.fn = [phi, c](const Jet& s) { return 2.0 * (s - c) * phi.eval(s); };
  return {y, q};
}

std::pair<double, double> y_q_from_phi(const Profile& phi, const SKRParams& prm, double sigma0) {
  check_away_from(sigma0, prm.c, "sigma = c is outside the domain of the profile");
  Jet ph = phi.at(sigma0, 1);
  double sc = sigma0 - prm.c;
  double y = 2.0 * prm.m * ph.value() + 2.0 * sc * ph.d1(0);
  double q = 2.0 * sc * ph.value();
  return {y, q};
}

CoeffSystem reduce_to_first_order(const Profile& alpha, const SKRParams& prm) {
  if (!alpha.valid()) throw precondition_error("alpha profile not set");
  double c = prm.c, m = prm.m, K = prm.K, lam = prm.lambda;
  CoeffSystem cs;
  cs.A.fn = [c](const Jet& s) {
    Jet sc = s - c;
    return sc * sc;
  };
  cs.B.fn = [alpha, c, m](const Jet& s) {
    Jet sc = s - c;
    return sc * (m - sc * alpha.eval(s));
  };
  cs.C = constant_profile(-m);
  cs.D = constant_profile(K);
  cs.p.fn = [alpha, c, m](const Jet& s) {
    check_away_from(s.value(), c, "first-order coefficients have a pole at sigma = c");
    Jet sc = s - c;
    return (m - sc * alpha.eval(s)) / sc;
  };
  cs.q.fn = [c, K, lam](const Jet& s) {
    check_away_from(s.value(), c, "first-order coefficients have a pole at sigma = c");
    Jet sc = s - c;
    return -(K + sc * lam) / sc;
  };
  return cs;
}

CoeffSystem reduce_to_first_order_conformal(const Profile& alpha, const SKRParams& prm) {
  if (!alpha.valid()) throw precondition_error("alpha profile not set");
  double c = prm.c, m = prm.m, K = prm.K, lam = prm.lambda;
  CoeffSystem cs = reduce_to_first_order(alpha, prm);
  auto guard = [c](double v) {
    check_away_from(v, c, "first-order coefficients have a pole at sigma = c");
    check_away_from(v, 0.0, "first-order coefficients have a pole at sigma = 0");
    check_away_from(v, 2.0 * c, "first-order coefficients have a pole at sigma = 2c");
  };
  cs.p.fn = [alpha, c, m, guard](const Jet& s) {
    guard(s.value());
    Jet sc = s - c;
    Jet s2c = s - 2.0 * c;
    return -(alpha.eval(s) + (2.0 * sc * sc - m * s * s2c) / (s * sc * s2c));
  };
  cs.q.fn = [c, K, lam, guard](const Jet& s) {
    guard(s.value());
    Jet sc = s - c;
    Jet s2c = s - 2.0 * c;
    return (K * s * s + lam * s - lam * c) / (s * sc * s2c);
  };
  return cs;
}

std::pair<double, double> delem_quantities_at(const CoeffSystem& cs, double sigma0) {
  Jet p = cs.p.at(sigma0, 1);
  Jet q = cs.q.at(sigma0, 1);
  double a = cs.A.value(sigma0), b = cs.B.value(sigma0);
  double c = cs.C.value(sigma0), d = cs.D.value(sigma0);
  double pv = p.value(), pd = p.d1(0);
  double qv = q.value(), qd = q.d1(0);
  double den = a * (pv * pv - pd) - b * pv + c;
  double num = d - a * (qd - pv * qv) - b * qv;
  return {den, num};
}

DelemResult delem_solve(const CoeffSystem& cs, double sigma0, double lo, double hi, int grid,
                        double zero_tol) {
  if (!(cs.A.valid() && cs.B.valid() && cs.C.valid() && cs.D.valid() && cs.p.valid() &&
        cs.q.valid()))
    throw precondition_error("coefficient system incomplete");
  if (grid < 2 || !(hi > lo)) throw usage_error("need hi > lo and at least two grid points");
  double max_abs = 0.0;
  int usable = 0;
  for (int i = 0; i < grid; ++i) {
    double s = lo + (hi - lo) * i / (grid - 1);
    try {
      max_abs = std::max(max_abs, std::abs(delem_quantities_at(cs, s).first));
      ++usable;
    } catch (const error&) {
      // pole of a coefficient; the identically-zero test ignores such points
    }
  }
  if (usable == 0) throw precondition_error("no usable sample points in [lo, hi]");
  DelemResult r;
  if (max_abs < zero_tol) {
    r.status = DelemResult::Status::degenerate;
    return r;
  }
  auto [den, num] = delem_quantities_at(cs, sigma0);
  r.denominator = den;
  if (std::abs(den) < zero_tol) {
    r.status = DelemResult::Status::pointwise_singular;
    return r;
  }
  r.status = DelemResult::Status::value;
  r.phi = num / den;
  return r;
}

ReparamResult sigma_reparam(const Profile& theta, const Profile& mu, int n, double t0, double t1,
                            int samples) {
  if (!theta.valid()) throw precondition_error("theta profile not set");
  if (!(t1 > t0)) throw usage_error("need t1 > t0");
  if (samples < 9) throw usage_error("need at least nine samples");
  Profile mus = mu.valid() ? mu : constant_profile(0.0);

  // fail fast on a slope sign change; the in-flight guard below only sees
  // points the integrator happens to visit
  double prev_slope = 0.0;
  for (int i = 0; i < samples; ++i) {
    double t = t0 + (t1 - t0) * i / (samples - 1.0);
    double td = theta.at(t, 1).d1(0);
    if (std::abs(td) < 1e-10 || (i > 0 && td * prev_slope < 0.0))
      throw precondition_error("theta is critical inside the interval; split it there");
    prev_slope = td;
  }

  auto log_slope_rate = [theta, mus, n](double t) {
    Jet th = theta.at(t, 2);
    double td = th.d1(0), tdd = th.d2(0, 0);
    if (std::abs(td) < kPoleTol)
      throw precondition_error("theta is critical inside the interval; split it there");
    Jet mj = mus.at(t, 1);
    double md = mj.d1(0);
    return (tdd + 2.0 * md * td - (n - 2.0) * md * md) / td;
  };

  namespace odeint = boost::numeric::odeint;
  using State = std::array<double, 2>;
  auto system = [&log_slope_rate](const State& y, State& dydt, double t) {
    dydt[0] = std::exp(y[1]);
    dydt[1] = log_slope_rate(t);
  };
  auto stepper = odeint::make_controlled(1e-13, 1e-10, odeint::runge_kutta_dopri5<State>());

  ReparamResult out;
  out.t.reserve(static_cast<std::size_t>(samples));
  out.sigma.reserve(static_cast<std::size_t>(samples));
  out.sigma_dot.reserve(static_cast<std::size_t>(samples));
  out.t.push_back(t0);
  out.sigma.push_back(0.0);
  out.sigma_dot.push_back(1.0);
  State y{0.0, 0.0};
  double t = t0;
  for (int i = 1; i < samples; ++i) {
    double tn = t0 + (t1 - t0) * i / (samples - 1.0);
    odeint::integrate_adaptive(stepper, system, y, t, tn, (tn - t) / 8.0);
    t = tn;
    out.t.push_back(tn);
    out.sigma.push_back(y[0]);
    out.sigma_dot.push_back(std::exp(y[1]));
  }
  return out;
}

namespace {

// t at which the integrated sigma passes through target, by cubic Hermite
// interpolation on the bracketing sample interval
double invert_sigma(const ReparamResult& r, double target) {
  const auto& sig = r.sigma;
  if (target < sig.front() || target > sig.back())
    throw precondition_error("target sigma outside the integrated range");
  std::size_t hi = static_cast<std::size_t>(std::lower_bound(sig.begin(), sig.end(), target) -
                                            sig.begin());
  if (hi == 0) hi = 1;
  if (hi >= sig.size()) hi = sig.size() - 1;
  std::size_t lo = hi - 1;
  double ta = r.t[lo], h = r.t[hi] - r.t[lo];
  double sa = sig[lo], sb = sig[hi];
  double da = r.sigma_dot[lo], db = r.sigma_dot[hi];
  auto val = [&](double x) {
    double h00 = (1.0 + 2.0 * x) * (1.0 - x) * (1.0 - x);
    double h10 = x * (1.0 - x) * (1.0 - x);
    double h01 = x * x * (3.0 - 2.0 * x);
    double h11 = x * x * (x - 1.0);
    return h00 * sa + h10 * h * da + h01 * sb + h11 * h * db;
  };
  auto slope = [&](double x) {
    double g00 = 6.0 * x * x - 6.0 * x;
    double g10 = 3.0 * x * x - 4.0 * x + 1.0;
    double g01 = 6.0 * x - 6.0 * x * x;
    double g11 = 3.0 * x * x - 2.0 * x;
    return g00 * sa + g10 * h * da + g01 * sb + g11 * h * db;
  };
  double a = 0.0, b = 1.0;
  double x = (sb > sa) ? (target - sa) / (sb - sa) : 0.5;
  for (int it = 0; it < 60; ++it) {
    double f = val(x) - target;
    if (f > 0.0)
      b = x;
    else
      a = x;
    double d = slope(x);
    double xn = (std::abs(d) > 1e-300) ? x - f / d : 0.5 * (a + b);
    if (!(xn > a && xn < b)) xn = 0.5 * (a + b);
    if (std::abs(xn - x) < 1e-16) {
      x = xn;
      break;
    }
    x = xn;
  }
  return ta + h * x;
}

}  // namespace

double reparam_defect(const ReparamResult& r, const Profile& theta, const Profile& mu, int n) {
  std::size_t sz = r.sigma.size();
  if (sz < 33 || r.t.size() != sz || r.sigma_dot.size() != sz)
    throw usage_error("reparametrization sample set too small or inconsistent");
  Profile mus = mu.valid() ? mu : constant_profile(0.0);
  double slo = r.sigma.front(), shi = r.sigma.back();
  double step = (shi - slo) / 128.0;
  const int eval_points = 33;
  double worst = 0.0;
  for (int k = 0; k < eval_points; ++k) {
    double s0 = slo + 3.0 * step + (shi - slo - 6.0 * step) * k / (eval_points - 1.0);
    double th[5], mv[5];
    for (int j = -2; j <= 2; ++j) {
      double t = invert_sigma(r, s0 + j * step);
      th[j + 2] = theta.value(t);
      mv[j + 2] = mus.value(t);
    }
    auto d1 = [step](const double* f) {
      return (-f[4] + 8.0 * f[3] - 8.0 * f[1] + f[0]) / (12.0 * step);
    };
    auto d2 = [step](const double* f) {
      return (-f[4] + 16.0 * f[3] - 30.0 * f[2] + 16.0 * f[1] - f[0]) / (12.0 * step * step);
    };
    double ts = d1(th), tss = d2(th), ms = d1(mv);
    worst = std::max(worst, std::abs(tss + 2.0 * ms * ts - (n - 2.0) * ms * ms));
  }
  return worst;
}

double alpha_family(int n, double c, double C, double tau0) {
  check_away_from(tau0, 0.0, "tau = 0 is a pole of the family");
  check_away_from(tau0, 2.0 * c, "tau = 2c is a pole of the family");
  return (n - 2.0) / tau0 + C / (tau0 * (tau0 - 2.0 * c));
}

double alpha_ode_residual(const Profile& alpha, int n, double c, double tau0) {
  check_away_from(tau0, 0.0, "tau = 0 is a pole of the coefficients");
  check_away_from(tau0, 2.0 * c, "tau = 2c is a pole of the coefficients");
  Jet a = alpha.at(tau0, 1);
  return (tau0 - 2.0 * c) * tau0 * a.d1(0) + 2.0 * (tau0 - c) * a.value() + 2.0 - n;
}

std::pair<double, double> warp_profile_consistency(const Profile& f_of_ell,
                                                   const Profile& ell_of_sigma, int k,
                                                   double sigma0) {
  check_away_from(sigma0, 0.0, "sigma = 0 is outside the domain of the second constraint");
  Jet lj = ell_of_sigma.at(sigma0, 2);
  double l0 = lj.value(), l1 = lj.d1(0), l2 = lj.d2(0, 0);
  if (l0 <= 0.0) throw field_domain_error("warping function must be positive");
  Jet fj = f_of_ell.at(l0, 2);
  double fp = fj.d1(0), fpp = fj.d2(0, 0);
  double slack = fp - static_cast<double>(k) / l0;
  double r1 = slack * l2 + fpp * l1 * l1;
  double r2 = slack * (l2 + 2.0 * l1 / sigma0) + l1 * l1 * fpp;
  return {r1, r2};
}

}  // namespace riccheck::skr
