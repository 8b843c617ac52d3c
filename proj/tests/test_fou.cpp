#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "cww/fou.hpp"
#include "doctest.h"

using namespace cww;

namespace {

struct Rng {
  std::uint64_t s;
  explicit Rng(std::uint64_t seed) : s(seed) {}
  double unit() {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return static_cast<double>((z ^ (z >> 31)) >> 11) * 0x1.0p-53;
  }
  double in(double lo, double hi) { return lo + (hi - lo) * unit(); }
};

Fou make_fou(const Trapezoid& umf, const Trapezoid& lmf, double h) {
  Fou f;
  f.umf = umf;
  f.lmf = lmf;
  f.lmf_height = h;
  return f;
}

// random FOU; the lmf shares the umf plateau with steeper ramps, which
// keeps it nested for any height
Fou random_fou(Rng& rng) {
  double k[4];
  for (double& v : k) v = rng.in(0.0, 10.0);
  std::sort(k, k + 4);
  const Trapezoid umf{k[0], k[1], k[2], k[3]};
  const Trapezoid lmf{rng.in(k[0], k[1]), k[1], k[2], rng.in(k[2], k[3])};
  return make_fou(umf, lmf, rng.in(0.1, 1.0));
}

// exhaustive embedded-set centroid bounds over the endpoint choices
Interval brute_centroid(const SampledFou& s) {
  const std::size_t n = s.x.size();
  REQUIRE(n <= 12);
  double lo = 1e300, hi = -1e300;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double t = (mask >> i) & 1 ? s.up[i] : s.lo[i];
      num += s.x[i] * t;
      den += t;
    }
    if (den <= 0.0) continue;
    lo = std::min(lo, num / den);
    hi = std::max(hi, num / den);
  }
  return Interval{lo, hi};
}

// exhaustive kernel-average bounds; candidate memberships per point are the
// interval endpoints plus 0.5 when it lies inside
FuzzinessInterval brute_fuzziness(const SampledFou& s) {
  const std::size_t n = s.x.size();
  REQUIRE(n <= 8);
  std::vector<std::vector<double>> cand(n);
  for (std::size_t i = 0; i < n; ++i) {
    cand[i] = {s.lo[i], s.up[i]};
    if (s.lo[i] <= 0.5 && 0.5 <= s.up[i]) cand[i].push_back(0.5);
  }
  double lo = 1e300, hi = -1e300;
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double u = cand[i][pick[i]];
      acc += 1.0 - std::fabs(2.0 * u - 1.0);
    }
    acc /= static_cast<double>(n);
    lo = std::min(lo, acc);
    hi = std::max(hi, acc);
    std::size_t i = 0;
    while (i < n && ++pick[i] == cand[i].size()) pick[i++] = 0;
    if (i == n) break;
  }
  return FuzzinessInterval{lo, hi};
}

}  // namespace

TEST_CASE("trapezoid interpolation with vertical edges") {
  const Trapezoid t{0.0, 0.0, 0.18, 2.63};
  CHECK(t.at(0.0) == doctest::Approx(1.0));  // a == b plateau edge
  CHECK(t.at(0.05) == doctest::Approx(1.0));
  CHECK(t.at(2.63) == doctest::Approx(0.0));
  CHECK(t.at(3.0) == 0.0);

  const Trapezoid tri{2.0, 5.0, 5.0, 8.0};
  CHECK(tri.at(5.0) == doctest::Approx(1.0));
  CHECK(tri.at(3.5) == doctest::Approx(0.5));
}

TEST_CASE("fou membership interval") {
  Fou bvl = make_fou({0.0, 0.0, 0.18, 2.63}, {0.0, 0.0, 0.09, 1.32}, 1.0);
  const Interval m = bvl.membership(0.05);
  CHECK(m.hi == doctest::Approx(1.0));
  CHECK(m.lo == doctest::Approx(1.0));
  CHECK(bvl.membership(5.0) == Interval{0.0, 0.0});  // beyond umf.d

  Fou tri = make_fou({2, 5, 5, 8}, {2, 5, 5, 8}, 1.0);
  CHECK(tri.membership(5.0) == Interval{1.0, 1.0});

  CHECK_THROWS_AS(bvl.membership(10.5), std::domain_error);
  CHECK_THROWS_AS(bvl.membership(-0.1), std::domain_error);
}

TEST_CASE("km_centroid of a symmetric type-1 triangle") {
  Fou tri = make_fou({2, 5, 5, 8}, {2, 5, 5, 8}, 1.0);
  const Interval c = km_centroid(tri);
  CHECK(c.lo == doctest::Approx(5.0).epsilon(1e-6));
  CHECK(c.hi == doctest::Approx(5.0).epsilon(1e-6));
}

TEST_CASE("km_centroid reproduces the stored BVL centroid") {
  Fou bvl = make_fou({0.0, 0.0, 0.18, 2.63}, {0.0, 0.0, 0.09, 1.32}, 1.0);
  const Interval c = km_centroid(bvl);
  CHECK(c.lo == doctest::Approx(0.44).epsilon(0.15));
  CHECK(c.hi == doctest::Approx(0.93).epsilon(0.15));
}

TEST_CASE("km_centroid equals brute-force enumeration on coarse grids") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Fou f = random_fou(rng);
    for (int n : {6, 9, 12}) {
      const SampledFou s = SampledFou::from_fou(f, n, f.umf.a, f.umf.d);
      double mass = 0.0;
      for (double u : s.up) mass += u;
      if (mass <= 0.0) continue;
      const Interval km = km_centroid(s);
      const Interval bf = brute_centroid(s);
      CHECK(km.lo == doctest::Approx(bf.lo).epsilon(1e-9));
      CHECK(km.hi == doctest::Approx(bf.hi).epsilon(1e-9));
    }
  }
}

TEST_CASE("km_centroid rejects an empty set") {
  Fou f = make_fou({5, 5, 5, 5}, {5, 5, 5, 5}, 1.0);
  CHECK_THROWS_AS(km_centroid(f), std::domain_error);
  CHECK_THROWS_AS(km_centroid(make_fou({0, 1, 2, 3}, {0, 1, 2, 3}, 1.0), 10),
                  std::invalid_argument);  // resolution below 50
}

TEST_CASE("shrinking the FOU never widens the centroid interval") {
  Rng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const Fou f = random_fou(rng);
    Fou t1 = f;
    t1.lmf = f.umf;  // collapse onto the upper MF
    t1.lmf_height = 1.0;
    const SampledFou sf = SampledFou::from_fou(f, 401, f.umf.a, f.umf.d);
    double mass = 0.0;
    for (double u : sf.up) mass += u;
    if (mass <= 0.0) continue;
    const Interval wide = km_centroid(f, 401);
    const Interval point = km_centroid(t1, 401);
    CHECK(point.lo >= wide.lo - 1e-9);
    CHECK(point.hi <= wide.hi + 1e-9);
    // the type-1 centroid collapses to a point
    CHECK(point.hi - point.lo < 1e-9);
  }
}

TEST_CASE("fuzziness of a crisp rectangle is exactly zero") {
  Fou crisp = make_fou({0, 0, 1, 1}, {0, 0, 1, 1}, 1.0);
  const FuzzinessInterval fz = fuzziness(crisp);
  CHECK(fz.f_l == 0.0);
  CHECK(fz.f_r == 0.0);
  CHECK(fz.mean() == 0.0);
}

TEST_CASE("fuzziness collapses to a point when umf equals lmf") {
  Fou f = make_fou({1, 2, 3, 5}, {1, 2, 3, 5}, 1.0);
  const FuzzinessInterval fz = fuzziness(f);
  CHECK(fz.f_l == doctest::Approx(fz.f_r));
  CHECK(fz.mean() == doctest::Approx(fz.f_l));
}

TEST_CASE("fuzziness equals brute-force enumeration on coarse grids") {
  Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const Fou f = random_fou(rng);
    for (int n : {5, 6, 8}) {
      const SampledFou s = SampledFou::from_fou(f, n, f.umf.a, f.umf.d);
      const FuzzinessInterval mine = fuzziness(s);
      const FuzzinessInterval bf = brute_fuzziness(s);
      CHECK(mine.f_l == doctest::Approx(bf.f_l).epsilon(1e-9));
      CHECK(mine.f_r == doctest::Approx(bf.f_r).epsilon(1e-9));
    }
  }
}

TEST_CASE("fuzziness grows as the lower MF drops") {
  Rng rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    const Fou f = random_fou(rng);
    Fou thinner = f;
    thinner.lmf_height = f.lmf_height * 0.5;  // pointwise lower lmf
    CHECK(fuzziness(thinner, 401).f_r >= fuzziness(f, 401).f_r - 1e-12);
  }
}

TEST_CASE("jaccard similarity basics") {
  Fou a = make_fou({1, 2, 3, 4}, {1.5, 2.2, 2.8, 3.5}, 0.8);
  CHECK(jaccard_similarity(a, a) == doctest::Approx(1.0));

  Fou b = make_fou({6, 7, 8, 9}, {6.5, 7.2, 7.8, 8.5}, 0.9);
  CHECK(jaccard_similarity(a, b) == doctest::Approx(0.0));

  // a grid with no mass anywhere leaves the similarity undefined
  SampledFou zero;
  zero.x = {0.0, 1.0, 2.0};
  zero.lo = {0.0, 0.0, 0.0};
  zero.up = {0.0, 0.0, 0.0};
  CHECK_THROWS_AS(jaccard_similarity(zero, zero), std::domain_error);
}

TEST_CASE("jaccard on a 5-point grid against a hand computation") {
  // triangles (0,2,2,4) and (2,4,4,6) sampled at x = 0,2.5,5,7.5,10
  Fou a = make_fou({0, 2, 2, 4}, {0, 2, 2, 4}, 1.0);
  Fou b = make_fou({2, 4, 4, 6}, {2, 4, 4, 6}, 1.0);
  const SampledFou sa = SampledFou::from_fou(a, 5, 0, 10);
  const SampledFou sb = SampledFou::from_fou(b, 5, 0, 10);
  // upper(a) = {0, .75, 0, 0, 0}, upper(b) = {0, .25, .5, 0, 0}
  // num = 2*(0 + .25 + 0 + 0 + 0) = .5 ; den = 2*(0 + .75 + .5) = 2.5
  CHECK(jaccard_similarity(sa, sb) == doctest::Approx(0.5 / 2.5));
}

TEST_CASE("jaccard stays in [0,1] and is 1 only for identical sets") {
  Rng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const Fou a = random_fou(rng);
    const Fou b = random_fou(rng);
    const double s = jaccard_similarity(a, b, 501);
    CHECK(s >= 0.0);
    CHECK(s <= 1.0);
    if (s == doctest::Approx(1.0)) {
      const SampledFou sa = SampledFou::from_fou(a, 501, kScaleMin, kScaleMax);
      const SampledFou sb = SampledFou::from_fou(b, 501, kScaleMin, kScaleMax);
      for (std::size_t i = 0; i < sa.x.size(); ++i) {
        CHECK(sa.up[i] == doctest::Approx(sb.up[i]));
        CHECK(sa.lo[i] == doctest::Approx(sb.lo[i]));
      }
    }
  }
}
