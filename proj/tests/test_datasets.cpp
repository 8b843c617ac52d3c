#include <fstream>
#include <sstream>
#include <string>

#include "cww/datasets.hpp"
#include "cww/vocab.hpp"
#include "doctest.h"

using namespace cww;

namespace {

const std::string kData = CWW_DATA_DIR;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

const Corpus& multi() {
  static const Corpus c = load_feedback_file(
      kData + "/corpora/multi_feedback.csv", CorpusMode::Multi);
  return c;
}

const Corpus& single_corpus() {
  static const Corpus c = load_feedback_file(
      kData + "/corpora/single_feedback.csv", CorpusMode::Single);
  return c;
}

}  // namespace

TEST_CASE("multi corpus has the full record grid") {
  CHECK(multi().records.size() == 600);  // 25 users x 2 games x 2 x 6
  CHECK(multi().games() == std::vector<std::string>{"left4dead", "amnesia"});
  const FeedbackRecord& r = multi().record(6, "left4dead", Phase::Training, 1);
  CHECK(r.words == std::array<std::string, 4>{"BH", "AF", "FI", "M"});
}

TEST_CASE("single corpus attaches weights") {
  CHECK(single_corpus().records.size() == 900);
  const WeightAssignment& w = single_corpus().weight(22, "subway");
  CHECK_FALSE(w.equal);
  CHECK(w.words == std::array<std::string, 4>{"MLI", "I", "U", "U"});
  for (int user = 1; user <= 13; ++user) {
    CHECK(single_corpus().weight(user, "fruit").equal);
  }
  for (int user = 14; user <= 25; ++user) {
    CHECK_FALSE(single_corpus().weight(user, "asphalt").equal);
  }
}

TEST_CASE("every corpus word resolves against its vocabulary") {
  for (const Corpus* corpus : {&multi(), &single_corpus()}) {
    for (const auto& r : corpus->records) {
      for (int i = 0; i < 4; ++i) {
        CHECK_NOTHROW(criterion_terms()[i].rank(r.words[i]));
      }
    }
    for (const auto& w : corpus->weights) {
      if (!w.equal) {
        for (const auto& word : w.words) {
          CHECK_NOTHROW(weight_terms().rank(word));
        }
      }
    }
  }
}

TEST_CASE("serialization round-trips the shipped files byte for byte") {
  // modulo the comment header, which the writer does not reproduce
  for (const auto& [path, mode] :
       {std::pair<std::string, CorpusMode>{"multi_feedback.csv",
                                           CorpusMode::Multi},
        {"single_feedback.csv", CorpusMode::Single}}) {
    const std::string full = kData + "/corpora/" + path;
    const Corpus c = load_feedback_file(full, mode);
    const std::string text = serialize_corpus(c, mode);
    std::string original = slurp(full);
    std::string stripped;
    std::istringstream in(original);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line[0] == '#') continue;
      stripped += line + '\n';
    }
    CHECK(text == stripped);
  }
}

TEST_CASE("missing cells raise errors carrying the coordinates") {
  std::istringstream in(
      "user,game,phase,frequency,b,a,t,s\n"
      "3,left4dead,T,F2,BM,AM,,M\n");
  try {
    load_feedback(in, "broken.csv", CorpusMode::Multi);
    FAIL("expected an error");
  } catch (const DatasetError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("app_type") != std::string::npos);
    CHECK(msg.find("user 3") != std::string::npos);
    CHECK(msg.find("F2") != std::string::npos);
  }
  CHECK_THROWS_AS(multi().record(1, "left4dead", Phase::Training, 7),
                  DatasetError);
}

TEST_CASE("power table values and monotonicity") {
  const PowerTable p = load_power_file(kData + "/power/table7.csv");
  CHECK(p.at("subway", 1) == doctest::Approx(1.41));
  CHECK(p.at("fruit", 6) == doctest::Approx(3.26));
  for (const auto& [game, watts] : p.watts) {
    for (int f = 1; f < kNumFrequencies; ++f) {
      CHECK(watts[f] > watts[f - 1]);
    }
  }
}

TEST_CASE("a non-monotone power column is rejected") {
  std::istringstream in(
      "game,frequency,watts\n"
      "g,F1,2.0\ng,F2,1.0\ng,F3,2.5\ng,F4,3.0\ng,F5,3.5\ng,F6,4.0\n");
  CHECK_THROWS_WITH_AS(load_power(in, "perm.csv"),
                       doctest::Contains("not increasing"), DatasetError);
}

TEST_CASE("standalone weight files load") {
  const auto ws = load_weights_file(kData + "/corpora/single_weights.csv");
  CHECK(ws.size() == 75);  // 25 users x 3 games
  int explicit_count = 0;
  for (const auto& w : ws) {
    if (!w.equal) ++explicit_count;
  }
  CHECK(explicit_count == 36);  // users 14-25 across 3 games
}
