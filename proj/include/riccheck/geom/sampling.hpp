#pragma once

#include <functional>

#include "riccheck/geom/fields.hpp"

namespace riccheck::geom {

// Halton radical inverse in the given prime base.
double halton(unsigned long long index, int base);

// k-th low-discrepancy point of the box for a given seed. Deterministic:
// the same (box, seed, k) always yields the same point.
ChartPoint halton_point(const Box& box, unsigned seed, int k);

// count points from the seeded Halton stream, skipping points where
// |exclusion(p)| < margin (used to stay clear of coordinate singularities
// and zero loci of denominators). Throws precondition_error if the stream
// rejects too many candidates in a row.
std::vector<ChartPoint> sample_box(const Box& box, int count, unsigned seed,
                                   const std::function<double(const ChartPoint&)>& exclusion = {},
                                   double margin = 1e-3);

}  // namespace riccheck::geom
