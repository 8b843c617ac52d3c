#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace cww {

inline constexpr double kScaleMin = 0.0;
inline constexpr double kScaleMax = 10.0;
inline constexpr int kDefaultResolution = 1001;

/// Closed interval helper.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double mid() const { return 0.5 * (lo + hi); }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Trapezoidal membership function on the word scale, given by its four
/// knots a <= b <= c <= d. Degenerate edges (a==b or c==d) are vertical;
/// membership at the shared abscissa takes the plateau value.
struct Trapezoid {
  double a = 0.0, b = 0.0, c = 0.0, d = 0.0;

  bool ordered() const { return a <= b && b <= c && c <= d; }
  double at(double x) const;
};

/// Interval type-2 word model: upper and lower trapezoid, lower height,
/// plus the centroid columns carried by the source tables.
struct Fou {
  Trapezoid umf;
  Trapezoid lmf;
  double lmf_height = 1.0;
  Interval centroid;   // as cached in the codebook file
  double center = 0.0; // midpoint column of the codebook file

  /// Membership interval [lower, upper] at x; x must lie on the word scale.
  Interval membership(double x) const;

  double upper(double x) const { return umf.at(x); }
  double lower(double x) const { return lmf_height * lmf.at(x); }

  /// lower <= upper everywhere on an n-point grid over the scale.
  bool contained(int resolution = kDefaultResolution, double tol = 1e-9) const;
};

/// Fuzziness of a word model as an interval over its embedded type-1 sets,
/// with the per-point kernel g(u) = 1 - |2u - 1| averaged over the UMF
/// support.
struct FuzzinessInterval {
  double f_l = 0.0;
  double f_r = 0.0;
  double mean() const { return 0.5 * (f_l + f_r); }
};

/// Sampled membership intervals of an IT2 set over an explicit grid.
/// km_centroid and the brute-force oracles both operate on this form.
struct SampledFou {
  std::vector<double> x;
  std::vector<double> lo;
  std::vector<double> up;

  static SampledFou from_fou(const Fou& f, int resolution,
                             double x_min, double x_max);
};

/// Karnik-Mendel centroid interval of an IT2 set sampled on a grid, found
/// by exhaustive switch-point search. Throws "empty set" if the upper MF
/// has no mass anywhere on the grid.
Interval km_centroid(const SampledFou& s);

/// Centroid over an n-point grid spanning the UMF support.
Interval km_centroid(const Fou& f, int resolution = kDefaultResolution);

/// Fuzziness interval on a sampled set: endpoints are the kernel averages
/// of the embedded sets farthest from / nearest to membership 0.5.
FuzzinessInterval fuzziness(const SampledFou& s);

/// Fuzziness over an n-point grid spanning the UMF support.
FuzzinessInterval fuzziness(const Fou& f, int resolution = kDefaultResolution);

/// Jaccard similarity of two sampled IT2 sets on a shared grid:
/// sum of pointwise min(upper)+min(lower) over sum of max(upper)+max(lower).
/// Throws "undefined similarity" when both sets are empty.
double jaccard_similarity(const SampledFou& a, const SampledFou& b);

/// Jaccard similarity over an n-point grid spanning the full word scale.
double jaccard_similarity(const Fou& a, const Fou& b,
                          int resolution = kDefaultResolution);

}  // namespace cww
