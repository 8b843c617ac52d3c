#include "cww/tri.hpp"

#include <algorithm>
#include <cmath>

namespace cww {

bool WeightProfile::valid() const {
  return p1 >= 0.0 && p2 >= 0.0 && p3 >= 0.0 &&
         std::fabs(p1 + p2 + p3 - 1.0) <= 1e-9;
}

TriTuple tri_product(const TriTuple& a, const TriTuple& b) {
  const double c1 = a.l * b.l;
  const double c2 = a.l * b.r;
  const double c3 = a.r * b.l;
  const double c4 = a.r * b.r;
  return TriTuple{std::min({c1, c2, c3, c4}), a.m * b.m,
                  std::max({c1, c2, c3, c4})};
}

TriTuple tri_mean(std::span<const TriTuple> items) {
  if (items.empty()) {
    throw std::invalid_argument("tri_mean: empty aggregation");
  }
  TriTuple acc{0.0, 0.0, 0.0};
  for (const TriTuple& t : items) {
    acc.l += t.l;
    acc.m += t.m;
    acc.r += t.r;
  }
  const double n = static_cast<double>(items.size());
  return TriTuple{acc.l / n, acc.m / n, acc.r / n};
}

double weighted_distance(const TriTuple& a, const TriTuple& b,
                         const WeightProfile& w) {
  const double dl = a.l - b.l;
  const double dm = a.m - b.m;
  const double dr = a.r - b.r;
  return std::sqrt(w.p1 * dl * dl + w.p2 * dm * dm + w.p3 * dr * dr);
}

double round_half_away(double x, int decimals) {
  const double scale = std::pow(10.0, decimals);
  // the tiny slack absorbs binary representation error at .5 boundaries
  return std::copysign(std::floor(std::fabs(x) * scale + 0.5 + 1e-9) / scale,
                       x);
}

}  // namespace cww
