#include <cmath>
#include <set>
#include <sstream>
#include <string>

#include "cww/codebook.hpp"
#include "doctest.h"

using namespace cww;

namespace {

const std::string kData = CWW_DATA_DIR;

const Codebook& multi_ia() {
  static const Codebook cb =
      parse_codebook_file(kData + "/codebooks/multi_ia.csv");
  return cb;
}

}  // namespace

TEST_CASE("parse_codebook reads the published BVL row") {
  const Fou& f = multi_ia().fou("battery_life", "BVL");
  CHECK(f.umf.a == 0.0);
  CHECK(f.umf.c == doctest::Approx(0.18));
  CHECK(f.umf.d == doctest::Approx(2.63));
  CHECK(f.lmf.c == doctest::Approx(0.09));
  CHECK(f.lmf.d == doctest::Approx(1.32));
  CHECK(f.lmf_height == 1.0);
  CHECK(f.centroid.lo == doctest::Approx(0.44));
  CHECK(f.centroid.hi == doctest::Approx(0.93));
  CHECK(f.center == doctest::Approx(0.68));
}

TEST_CASE("serialize then parse round-trips the codebook") {
  const std::string text = serialize_codebook(multi_ia());
  std::istringstream in(text);
  const Codebook again = parse_codebook(in, "roundtrip");
  REQUIRE(again.criteria.size() == multi_ia().criteria.size());
  for (std::size_t i = 0; i < again.criteria.size(); ++i) {
    const auto& a = again.criteria[i];
    const auto& b = multi_ia().criteria[i];
    CHECK(a.criterion == b.criterion);
    CHECK(a.words == b.words);
    for (const auto& w : a.words) {
      CHECK(a.fou(w).umf.a == b.fou(w).umf.a);
      CHECK(a.fou(w).centroid == b.fou(w).centroid);
    }
  }
}

TEST_CASE("the uncorrected user-22 file is rejected with unordered knots") {
  CHECK_THROWS_WITH_AS(
      parse_codebook_file(kData + "/codebooks/user22_ia_raw.csv"),
      doctest::Contains("unordered knots"), CodebookError);
  // the corrected companion parses cleanly
  CHECK_NOTHROW(parse_codebook_file(kData + "/codebooks/user22_ia.csv"));
}

TEST_CASE("malformed rows report file and line") {
  std::istringstream in(
      "criterion,word,rank,...\n"
      "battery_life,BVL,1,0,0,0.18,2.63,0,0,0.09\n");
  try {
    parse_codebook(in, "bad.csv");
    FAIL("expected a parse error");
  } catch (const CodebookError& e) {
    CHECK(std::string(e.what()).find("bad.csv:2") != std::string::npos);
  }
}

TEST_CASE("every shipped codebook passes validation") {
  for (const char* name :
       {"multi_ia", "multi_eia", "multi_hma", "user22_ia", "user22_eia",
        "user22_hma"}) {
    const Codebook cb =
        parse_codebook_file(kData + "/codebooks/" + std::string(name) + ".csv");
    const ValidationReport rep = validate_codebook(cb, 1001);
    INFO("codebook ", name);
    CHECK(rep.all_ok());
    for (const auto& c : rep.checks) {
      INFO("word ", c.criterion, "/", c.word);
      CHECK(c.lmf_contained);
    }
  }
}

TEST_CASE("cached and recomputed centroids agree for BVL") {
  const ValidationReport rep = validate_codebook(multi_ia(), 1001);
  for (const auto& c : rep.checks) {
    if (c.criterion == "battery_life" && c.word == "BVL") {
      CHECK(c.centroid_l_dev <= 0.05);
      CHECK(c.centroid_r_dev <= 0.05);
    }
  }
}

TEST_CASE("a constructed containment violation is flagged") {
  Codebook cb = multi_ia();
  Fou& f = cb.criteria[0].fous.at("BVL");
  f.lmf.d = f.umf.d + 1.0;  // leaks outside the upper MF
  const ValidationReport rep = validate_codebook(cb, 501);
  bool flagged = false;
  for (const auto& c : rep.checks) {
    if (c.word == "BVL" && c.criterion == "battery_life") {
      flagged = !c.lmf_contained;
    }
  }
  CHECK(flagged);
  CHECK(rep.failures() >= 1);
}

TEST_CASE("person fou sampling is deterministic and in range") {
  const IntervalPair p{{1.0, 3.0}, {6.0, 8.0}};
  const auto a = person_fou_sample(p, 50, 42);
  const auto b = person_fou_sample(p, 50, 42);
  REQUIRE(a.size() == 50);
  CHECK(a == b);
  for (const auto& [l, r] : a) {
    CHECK(l >= 1.0);
    CHECK(l <= 3.0);
    CHECK(r >= 6.0);
    CHECK(r <= 8.0);
    CHECK(l < r);
  }
  CHECK(person_fou_sample(p, 50, 43) != a);
}

TEST_CASE("degenerate endpoint intervals sample as constants") {
  const IntervalPair p{{2.0, 2.0}, {7.0, 7.0}};
  const auto s = person_fou_sample(p, 50, 7);
  REQUIRE(s.size() == 50);
  for (const auto& [l, r] : s) {
    CHECK(l == 2.0);
    CHECK(r == 7.0);
  }
}

TEST_CASE("sampler statistics match the uniform endpoints") {
  const IntervalPair p{{1.0, 3.0}, {6.0, 8.0}};
  const auto s = person_fou_sample(p, 10000, 9);
  double ml = 0.0, mr = 0.0;
  for (const auto& [l, r] : s) {
    ml += l;
    mr += r;
  }
  ml /= s.size();
  mr /= s.size();
  CHECK(std::fabs(ml - 2.0) < 0.05);
  CHECK(std::fabs(mr - 7.0) < 0.05);
}

TEST_CASE("sampler rejects impossible requests") {
  CHECK_THROWS_AS(person_fou_sample({{1, 3}, {6, 8}}, 0, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(person_fou_sample({{-1, 3}, {6, 8}}, 10, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(person_fou_sample({{1, 3}, {6, 11}}, 10, 1),
                  std::invalid_argument);
  // overlapping intervals that can never give L < R exhaust the retries
  CHECK_THROWS_AS(person_fou_sample({{5, 5}, {5, 5}}, 1, 1),
                  std::runtime_error);
}

TEST_CASE("table-backed encoder serves stored words and rejects others") {
  TableBackedEncoder enc(multi_ia(), "battery_life");
  const Fou f = enc.encode("BVL", {});
  CHECK(f.centroid.lo == doctest::Approx(0.44));
  CHECK(f.centroid.hi == doctest::Approx(0.93));
  CHECK_THROWS_WITH_AS(enc.encode("XXL", {}),
                       doctest::Contains("word not in codebook"),
                       CodebookError);
}

TEST_CASE("user-22 HMA battery BVL row matches the published table") {
  const Codebook cb = parse_codebook_file(kData + "/codebooks/user22_hma.csv");
  const Fou& f = cb.fou("battery_life", "BVL");
  CHECK(f.umf.c == doctest::Approx(2.01));
  CHECK(f.umf.d == doctest::Approx(2.89));
  CHECK(f.lmf.d == doctest::Approx(2.58));
  CHECK(f.lmf_height == 1.0);
}
