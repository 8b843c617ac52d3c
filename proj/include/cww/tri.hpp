#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>

namespace cww {

/// Triangular type-1 membership function on the normalized information
/// scale [0,1], stored as its left, middle and right abscissae.
struct TriTuple {
  double l = 0.0;
  double m = 0.0;
  double r = 0.0;

  bool valid() const {
    return 0.0 <= l && l <= m && m <= r && r <= 1.0;
  }
  friend bool operator==(const TriTuple&, const TriTuple&) = default;
};

/// Component weights of the distance metric. Must sum to 1.
struct WeightProfile {
  double p1 = 0.2;
  double p2 = 0.6;
  double p3 = 0.2;

  bool valid() const;
};

/// Product of two triangular MFs; the result is again triangular with the
/// middle at m_a*m_b and the ends at the extreme corner products.
TriTuple tri_product(const TriTuple& a, const TriTuple& b);

/// Componentwise arithmetic mean. Throws on an empty list.
TriTuple tri_mean(std::span<const TriTuple> items);

/// Weighted Euclidean distance between two tri-tuples.
double weighted_distance(const TriTuple& a, const TriTuple& b,
                         const WeightProfile& w = WeightProfile{});

/// Round half away from zero at the given number of decimals. Used for
/// report output only; all internal math stays at full precision.
double round_half_away(double x, int decimals = 2);

}  // namespace cww
