#pragma once

#include <functional>

#include "riccheck/geom/jet.hpp"

namespace riccheck::skr {

// Smooth function of one variable, evaluated in jet arithmetic so that
// derivatives of any order come out exact. Used for the profiles the
// one-variable theory runs on: phi(sigma), alpha(sigma), f(ell), ell(t).
struct Profile {
  std::function<geom::Jet(const geom::Jet&)> fn;

  bool valid() const { return static_cast<bool>(fn); }

  geom::Jet eval(const geom::Jet& t) const;
  // seed t as the coordinate of a 1-jet of the given order
  geom::Jet at(double t, int order) const;

  double value(double t) const;
  double d1(double t) const;
  double d2(double t) const;
  double d3(double t) const;
};

Profile constant_profile(double v);
Profile identity_profile();

// Composition with a multivariate inner jet: (p . u)(x) = p(u(x)).
geom::Jet compose(const Profile& p, const geom::Jet& u);

}  // namespace riccheck::skr
