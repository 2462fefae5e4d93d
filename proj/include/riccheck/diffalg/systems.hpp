#pragma once

#include <utility>

#include "riccheck/diffalg/rat.hpp"

namespace riccheck::diffalg {

// Symbolic counterpart of the one-variable coefficient system: the
// second-order equation A f'' + B f' + C f = D, the raw first-order
// consequence lead f' + mid f = rhs, and its normalized p = mid/lead,
// q = rhs/lead.
struct SymCoeffSystem {
  DiffRat A, B, C, D;
  DiffRat lead, mid, rhs;
  DiffRat p, q;
};

// Builds the system exactly by adding the first equation to (x - c) times
// the second. The conformal variant substitutes the induced right-hand side
// through the Laplacian and gradient-norm relations before combining.
SymCoeffSystem first_order_reduction_symbolic(bool conformal);

// A(p^2 - p') - B p + C and D - A(q' - p q) - B q, canonical.
std::pair<DiffRat, DiffRat> delem_quantities(const SymCoeffSystem& cs);

// (2m - 2)/x + chat/(x(x - 2c))
DiffRat alpha_family_symbolic();

// (x - 2c) x al' + 2(x - c) al + 2 - 2m with al symbolic
DiffRat alpha_ode_symbolic();

}  // namespace riccheck::diffalg
