#pragma once

#include <utility>
#include <vector>

#include "riccheck/skr/profile.hpp"

namespace riccheck::skr {

// Parameters of the one-variable system for the horizontal Hessian
// eigenvalue phi(sigma): half-dimension m, center c, and the two constants.
struct SKRParams {
  int m = 2;
  double c = 0.0;
  double K = 0.0;
  double lambda = 0.0;
};

// A phi'' + B phi' + C phi = D together with phi' + p phi = q, all
// functions of sigma.
struct CoeffSystem {
  Profile A, B, C, D;
  Profile p, q;
};

// Residuals of the second-order pair
//   (s-c)^2 phi'' + (s-c)[m - (s-c) alpha] phi' - m phi - K,
//   -(s-c) phi'' + [alpha (s-c) - (m+1)] phi' + alpha phi - gamma.
std::pair<double, double> skr_system_residual(const Profile& phi, const Profile& alpha,
                                              const Profile& gamma, const SKRParams& prm,
                                              double sigma0);

// Y = 2 m phi + 2 (s-c) phi', Q = 2 (s-c) phi, as profiles and as values.
std::pair<Profile, Profile> y_q_profiles(const Profile& phi, const SKRParams& prm);
std::pair<double, double> y_q_from_phi(const Profile& phi, const SKRParams& prm, double sigma0);

// First-order reduction of the system with constant right-hand side
// gamma = lambda: adds the first equation to (s-c) times the second.
CoeffSystem reduce_to_first_order(const Profile& alpha, const SKRParams& prm);

// Variant in which gamma is induced by the conformal factor through the
// Y, Q substitution; coefficients carry the (s-c)(s-2c)/s structure and the
// domain additionally excludes s = 0 and s = 2c.
CoeffSystem reduce_to_first_order_conformal(const Profile& alpha, const SKRParams& prm);

// Closed-form elimination: phi = (D - A(q'-pq) - Bq)/(A(p^2-p') - Bp + C),
// unless the denominator vanishes identically (sampled on a grid over
// [lo, hi]) or just at sigma0.
struct DelemResult {
  enum class Status { value, degenerate, pointwise_singular };
  Status status = Status::value;
  double phi = 0.0;
  double denominator = 0.0;
};
DelemResult delem_solve(const CoeffSystem& cs, double sigma0, double lo, double hi,
                        int grid = 64, double zero_tol = 1e-11);

// Denominator and numerator of the elimination formula at sigma0.
std::pair<double, double> delem_quantities_at(const CoeffSystem& cs, double sigma0);

// Integrates the reparametrization sigma(t) with
// (log sigma')' = [theta'' + 2 mu' theta' - (n-2) mu'^2] / theta',
// normalized sigma(t0) = 0, sigma'(t0) = 1. theta' must not vanish.
struct ReparamResult {
  std::vector<double> t, sigma, sigma_dot;
};
ReparamResult sigma_reparam(const Profile& theta, const Profile& mu, int n, double t0, double t1,
                            int samples = 2049);

// Max over the sample grid of |theta_ss + 2 mu_s theta_s - (n-2) mu_s^2|,
// with s-derivatives taken by finite differences on the sigma grid, so the
// check is independent of the chain rule used in the integration.
double reparam_defect(const ReparamResult& r, const Profile& theta, const Profile& mu, int n);

// alpha = (n-2)/t + C/(t (t-2c)) and the residual of the ODE it solves:
// (t-2c) t alpha' + 2 (t-c) alpha + 2 - n.
double alpha_family(int n, double c, double C, double tau0);
double alpha_ode_residual(const Profile& alpha, int n, double c, double tau0);

// Constraint ODE residuals for warped profiles: given f as a function of
// ell and ell as a function of the potential, returns
//   (f'(ell) - k/ell) ell'' + f''(ell) ell'^2,
//   (f'(ell) - k/ell) (ell'' + 2 ell'/s) + ell'^2 f''(ell).
std::pair<double, double> warp_profile_consistency(const Profile& f_of_ell,
                                                   const Profile& ell_of_sigma, int k,
                                                   double sigma0);

}  // namespace riccheck::skr
