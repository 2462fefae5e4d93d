#include "riccheck/diffalg/systems.hpp"

#include "riccheck/errors.hpp"

namespace riccheck::diffalg {

namespace {

DiffRat rv(int g) { return DiffRat::variable(g); }
DiffRat ri(long v) { return DiffRat::integer(v); }

}  // namespace

SymCoeffSystem first_order_reduction_symbolic(bool conformal) {
  DiffRat x = rv(gen::x), c = rv(gen::c), m = rv(gen::m);
  DiffRat K = rv(gen::K), lam = rv(gen::lam);
  DiffRat al = DiffRat::alpha(0);
  DiffRat xc = x - c;

  SymCoeffSystem cs;
  cs.A = xc * xc;
  cs.B = xc * (m - xc * al);
  cs.C = -m;
  cs.D = K;

  // second equation as coefficients of f'', f', f and its right-hand side
  DiffRat s2 = -xc;
  DiffRat s1 = al * xc - (m + ri(1));
  DiffRat s0 = al;
  DiffRat sr = lam;
  if (conformal) {
    // right-hand side lam/x^2 - Y/x + (al + 1/x)(1/x) Q with
    // Y = 2m f + 2(x-c) f', Q = 2(x-c) f; the f-terms move left
    s1 = s1 + ri(2) * xc / x;
    s0 = s0 + ri(2) * m / x - ri(2) * xc * (al + ri(1) / x) / x;
    sr = lam / (x * x);
  }

  DiffRat second = cs.A + xc * s2;
  if (!second.is_zero()) throw precondition_error("second-derivative terms failed to cancel");
  cs.lead = cs.B + xc * s1;
  cs.mid = cs.C + xc * s0;
  cs.rhs = cs.D + xc * sr;
  cs.p = cs.mid / cs.lead;
  cs.q = cs.rhs / cs.lead;
  return cs;
}

std::pair<DiffRat, DiffRat> delem_quantities(const SymCoeffSystem& cs) {
  DiffRat den = cs.A * (cs.p * cs.p - cs.p.derive()) - cs.B * cs.p + cs.C;
  DiffRat num = cs.D - cs.A * (cs.q.derive() - cs.p * cs.q) - cs.B * cs.q;
  return {den, num};
}

DiffRat alpha_family_symbolic() {
  DiffRat x = rv(gen::x), c = rv(gen::c), m = rv(gen::m);
  return (ri(2) * m - ri(2)) / x + rv(gen::chat) / (x * (x - ri(2) * c));
}

DiffRat alpha_ode_symbolic() {
  DiffRat x = rv(gen::x), c = rv(gen::c), m = rv(gen::m);
  DiffRat al = DiffRat::alpha(0);
  return (x - ri(2) * c) * x * al.derive() + ri(2) * (x - c) * al + ri(2) - ri(2) * m;
}

}  // namespace riccheck::diffalg
