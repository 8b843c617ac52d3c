#include <cmath>
#include <cstdint>
#include <vector>

#include "cww/tri.hpp"
#include "cww/vocab.hpp"
#include "doctest.h"

using namespace cww;

namespace {

// deterministic light-weight generator for property tests
struct Rng {
  std::uint64_t s;
  explicit Rng(std::uint64_t seed) : s(seed) {}
  double unit() {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return static_cast<double>((z ^ (z >> 31)) >> 11) * 0x1.0p-53;
  }
  TriTuple tri() {
    double a = unit(), b = unit(), c = unit();
    if (a > b) std::swap(a, b);
    if (b > c) std::swap(b, c);
    if (a > b) std::swap(a, b);
    return TriTuple{a, b, c};
  }
};

}  // namespace

TEST_CASE("tri_product worked values") {
  const TriTuple bh{0.5, 0.75, 1.0};
  const TriTuple p = tri_product(bh, bh);
  CHECK(p.l == doctest::Approx(0.25));
  CHECK(p.m == doctest::Approx(0.5625));
  CHECK(p.r == doctest::Approx(1.0));

  // multiplicative identity
  const TriTuple one{1.0, 1.0, 1.0};
  const TriTuple t{0.25, 0.5, 0.75};
  CHECK(tri_product(one, t) == t);

  const TriTuple q = tri_product(TriTuple{0.25, 0.5, 0.75}, TriTuple{0, 0, 0.25});
  CHECK(q.l == doctest::Approx(0.0));
  CHECK(q.m == doctest::Approx(0.0));
  CHECK(q.r == doctest::Approx(0.1875));
}

TEST_CASE("tri_product is commutative and closed") {
  Rng rng(1);
  for (int i = 0; i < 1000; ++i) {
    const TriTuple a = rng.tri();
    const TriTuple b = rng.tri();
    const TriTuple ab = tri_product(a, b);
    CHECK(ab == tri_product(b, a));
    CHECK(ab.valid());
  }
}

TEST_CASE("tri_mean worked values") {
  const std::vector<TriTuple> items = {
      {0.5, 0.75, 1.0}, {0.5, 0.75, 1.0}, {0.25, 0.5, 0.75}, {0.0, 0.0, 0.25}};
  const TriTuple c = tri_mean(items);
  CHECK(c.l == doctest::Approx(0.3125));
  CHECK(c.m == doctest::Approx(0.5));
  CHECK(c.r == doctest::Approx(0.75));

  const std::vector<TriTuple> single = {{0.1, 0.2, 0.3}};
  CHECK(tri_mean(single) == single[0]);

  // product vector of the weighted worked example
  const std::vector<TriTuple> products = {{0.25, 0.5625, 1.0},
                                          {0.0, 0.125, 0.375},
                                          {0.0, 0.0, 0.125},
                                          {0.0, 0.0, 0.1875}};
  const TriTuple cw = tri_mean(products);
  CHECK(cw.l == doctest::Approx(0.0625));
  CHECK(cw.m == doctest::Approx(0.171875));
  CHECK(cw.r == doctest::Approx(0.421875));
  CHECK(round_half_away(cw.l) == doctest::Approx(0.06));
  CHECK(round_half_away(cw.m) == doctest::Approx(0.17));
  CHECK(round_half_away(cw.r) == doctest::Approx(0.42));

  CHECK_THROWS_AS(tri_mean(std::vector<TriTuple>{}), std::invalid_argument);
}

TEST_CASE("weighted_distance worked values") {
  const TriTuple c{0.3125, 0.5, 0.75};
  CHECK(weighted_distance(c, uniform_tri(3)) == doctest::Approx(0.0280).epsilon(0.02));
  CHECK(round_half_away(weighted_distance(c, uniform_tri(3))) == doctest::Approx(0.03));
  CHECK(weighted_distance(c, c) == 0.0);

  const TriTuple cw{0.0625, 0.171875, 0.421875};
  CHECK(weighted_distance(cw, uniform_tri(2)) == doctest::Approx(0.0753).epsilon(0.01));
  CHECK(round_half_away(weighted_distance(cw, uniform_tri(2))) == doctest::Approx(0.08));
}

TEST_CASE("weighted_distance satisfies the metric axioms") {
  const WeightProfile w{};
  REQUIRE(w.valid());
  Rng rng(7);
  for (int i = 0; i < 10000; ++i) {
    const TriTuple a = rng.tri();
    const TriTuple b = rng.tri();
    const TriTuple c = rng.tri();
    const double dab = weighted_distance(a, b, w);
    const double dba = weighted_distance(b, a, w);
    const double dac = weighted_distance(a, c, w);
    const double dcb = weighted_distance(c, b, w);
    CHECK(dab == doctest::Approx(dba));
    CHECK(dab >= 0.0);
    CHECK(weighted_distance(a, a, w) == 0.0);
    CHECK(dab <= dac + dcb + 1e-12);
  }
  // identity of indiscernibles: zero distance forces equality
  const TriTuple a{0.1, 0.4, 0.9};
  const TriTuple b{0.1, 0.4, 0.90000001};
  CHECK(weighted_distance(a, b, w) > 0.0);
}

TEST_CASE("display rounding is half away from zero") {
  CHECK(round_half_away(0.125) == doctest::Approx(0.13));
  CHECK(round_half_away(-0.125) == doctest::Approx(-0.13));
  CHECK(round_half_away(0.5, 0) == doctest::Approx(1.0));
  CHECK(round_half_away(-0.5, 0) == doctest::Approx(-1.0));
  CHECK(round_half_away(2.675) == doctest::Approx(2.68));
}
