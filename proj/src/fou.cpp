#include "cww/fou.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cww {

double Trapezoid::at(double x) const {
  if (x < a || x > d) return 0.0;
  if (x >= b && x <= c) return 1.0;
  if (x < b) {
    if (a == b) return 1.0; // vertical edge
    return (x - a) / (b - a);
  }
  if (c == d) return 1.0; // vertical edge
  return (d - x) / (d - c);
}

Interval Fou::membership(double x) const {
  if (x < kScaleMin || x > kScaleMax) {
    throw std::domain_error("fou_membership: out of scale");
  }
  return Interval{lower(x), upper(x)};
}

bool Fou::contained(int resolution, double tol) const {
  for (int i = 0; i < resolution; ++i) {
    const double x =
        kScaleMin + (kScaleMax - kScaleMin) * i / (resolution - 1);
    if (lower(x) > upper(x) + tol) return false;
  }
  return true;
}

SampledFou SampledFou::from_fou(const Fou& f, int resolution,
                                double x_min, double x_max) {
  if (resolution < 2) throw std::invalid_argument("grid too small");
  SampledFou s;
  s.x.resize(resolution);
  s.lo.resize(resolution);
  s.up.resize(resolution);
  for (int i = 0; i < resolution; ++i) {
    const double x = i == resolution - 1
                         ? x_max
                         : x_min + (x_max - x_min) * i / (resolution - 1);
    s.x[i] = x;
    s.lo[i] = f.lower(x);
    s.up[i] = f.upper(x);
  }
  return s;
}

namespace {

// One Karnik-Mendel direction via exhaustive switch-point search. For the
// left end, upper memberships apply at points up to the switch and lower
// ones after; the right end mirrors that. The optimum over all embedded
// sets is attained at one of the n+1 switch assignments, so scanning them
// with prefix sums is exact and needs no fixed-point iteration.
double km_end(const SampledFou& s, bool left) {
  const std::size_t n = s.x.size();
  // head sums run left to right, tail sums right to left; keeping them as
  // plain accumulations avoids cancellation on vanishing memberships
  std::vector<double> head_num(n + 1, 0.0), head_den(n + 1, 0.0);
  std::vector<double> tail_num(n + 1, 0.0), tail_den(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double h = left ? s.up[i] : s.lo[i];
    head_num[i + 1] = head_num[i] + s.x[i] * h;
    head_den[i + 1] = head_den[i] + h;
  }
  for (std::size_t i = n; i-- > 0;) {
    const double t = left ? s.lo[i] : s.up[i];
    tail_num[i] = tail_num[i + 1] + s.x[i] * t;
    tail_den[i] = tail_den[i + 1] + t;
  }
  bool found = false;
  double best = 0.0;
  for (std::size_t k = 0; k <= n; ++k) {
    const double num = head_num[k] + tail_num[k];
    const double den = head_den[k] + tail_den[k];
    if (den <= 0.0) continue;
    const double y = num / den;
    if (!found || (left ? y < best : y > best)) {
      best = y;
      found = true;
    }
  }
  if (!found) throw std::domain_error("km_centroid: empty set");
  return best;
}

double kernel(double u) { return 1.0 - std::fabs(2.0 * u - 1.0); }

}  // namespace

Interval km_centroid(const SampledFou& s) {
  const double cl = km_end(s, true);
  const double cr = km_end(s, false);
  return Interval{std::min(cl, cr), std::max(cl, cr)};
}

Interval km_centroid(const Fou& f, int resolution) {
  if (resolution < 50) {
    throw std::invalid_argument("km_centroid: resolution below 50");
  }
  double x0 = f.umf.a, x1 = f.umf.d;
  if (x1 <= x0) throw std::domain_error("km_centroid: empty set");
  return km_centroid(SampledFou::from_fou(f, resolution, x0, x1));
}

FuzzinessInterval fuzziness(const SampledFou& s) {
  const std::size_t n = s.x.size();
  double acc_far = 0.0, acc_near = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double lo = s.lo[i], up = s.up[i];
    // farthest point of [lo, up] from 0.5 minimizes the kernel
    acc_far += std::min(kernel(lo), kernel(up));
    // nearest point maximizes it; 0.5 itself may be inside the interval
    if (lo <= 0.5 && 0.5 <= up) {
      acc_near += 1.0;
    } else {
      acc_near += std::max(kernel(lo), kernel(up));
    }
  }
  return FuzzinessInterval{acc_far / n, acc_near / n};
}

FuzzinessInterval fuzziness(const Fou& f, int resolution) {
  double x0 = f.umf.a, x1 = f.umf.d;
  if (x1 <= x0) return FuzzinessInterval{0.0, 0.0};
  return fuzziness(SampledFou::from_fou(f, resolution, x0, x1));
}

double jaccard_similarity(const SampledFou& a, const SampledFou& b) {
  if (a.x.size() != b.x.size()) {
    throw std::invalid_argument("jaccard_similarity: grid mismatch");
  }
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < a.x.size(); ++i) {
    num += std::min(a.up[i], b.up[i]) + std::min(a.lo[i], b.lo[i]);
    den += std::max(a.up[i], b.up[i]) + std::max(a.lo[i], b.lo[i]);
  }
  if (den <= 0.0) throw std::domain_error("jaccard_similarity: undefined similarity");
  return num / den;
}

double jaccard_similarity(const Fou& a, const Fou& b, int resolution) {
  return jaccard_similarity(
      SampledFou::from_fou(a, resolution, kScaleMin, kScaleMax),
      SampledFou::from_fou(b, resolution, kScaleMin, kScaleMax));
}

}  // namespace cww
