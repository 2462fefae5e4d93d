#include "riccheck/geom/sampling.hpp"

#include <cmath>

namespace riccheck::geom {

namespace {
constexpr int kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
}

double halton(unsigned long long index, int base) {
  double f = 1.0, r = 0.0;
  while (index > 0) {
    f /= base;
    r += f * static_cast<double>(index % static_cast<unsigned long long>(base));
    index /= static_cast<unsigned long long>(base);
  }
  return r;
}

ChartPoint halton_point(const Box& box, unsigned seed, int k) {
  int n = box.dim();
  if (n > static_cast<int>(sizeof(kPrimes) / sizeof(kPrimes[0])))
    throw precondition_error("sampling dimension too large");
  unsigned long long index =
      static_cast<unsigned long long>(seed) * 4096ULL + static_cast<unsigned long long>(k) + 1ULL;
  ChartPoint p(n);
  for (int d = 0; d < n; ++d) {
    double u = halton(index, kPrimes[d]);
    p[d] = box.lo[d] + u * (box.hi[d] - box.lo[d]);
  }
  return p;
}

std::vector<ChartPoint> sample_box(const Box& box, int count, unsigned seed,
                                   const std::function<double(const ChartPoint&)>& exclusion,
                                   double margin) {
  std::vector<ChartPoint> pts;
  pts.reserve(static_cast<std::size_t>(count));
  int k = 0;
  int rejected_run = 0;
  while (static_cast<int>(pts.size()) < count) {
    ChartPoint p = halton_point(box, seed, k++);
    if (exclusion && std::abs(exclusion(p)) < margin) {
      if (++rejected_run > 10000)
        throw precondition_error("sampling rejected 10000 candidates in a row");
      continue;
    }
    rejected_run = 0;
    pts.push_back(std::move(p));
  }
  return pts;
}

}  // namespace riccheck::geom
