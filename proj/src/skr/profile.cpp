#include "riccheck/skr/profile.hpp"

namespace riccheck::skr {

using geom::Jet;

Jet Profile::eval(const Jet& t) const {
  if (!fn) throw precondition_error("profile not set");
  return fn(t);
}

Jet Profile::at(double t, int order) const { return eval(Jet::coordinate(1, order, 0, t)); }

double Profile::value(double t) const { return at(t, 0).value(); }
double Profile::d1(double t) const { return at(t, 1).d1(0); }
double Profile::d2(double t) const { return at(t, 2).d2(0, 0); }
double Profile::d3(double t) const { return at(t, 3).d3(0, 0, 0); }

Profile constant_profile(double v) {
  Profile p;
  p.fn = [v](const Jet& t) { return Jet::constant(t.dim(), t.order(), v); };
  return p;
}

Profile identity_profile() {
  Profile p;
  p.fn = [](const Jet& t) { return t; };
  return p;
}

Jet compose(const Profile& p, const geom::Jet& u) {
  // univariate Taylor data of p at the value part of u, pushed through u
  int order = u.order();
  Jet t = p.at(u.value(), order);
  std::vector<double> taylor(static_cast<std::size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) taylor[static_cast<std::size_t>(k)] = t.raw(k);
  Jet w = u;
  w.raw(0) = 0.0;
  return geom::compose_series(taylor, w);
}

}  // namespace riccheck::skr
