#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cww {

struct DatasetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kNumUsers = 25;
inline constexpr int kNumFrequencies = 6;

/// Criterion order is fixed across the corpora and codebooks.
inline constexpr std::array<const char*, 4> kCriteria = {
    "battery_life", "app_ratings", "app_type", "time_spent"};

enum class Phase { Training, Execution };

std::string to_string(Phase p);
Phase phase_from_string(const std::string& s);

/// One user x game x phase x frequency row of per-criterion words.
struct FeedbackRecord {
  int user = 0;          // 1..25
  std::string game;
  Phase phase = Phase::Training;
  int frequency = 0;     // 1..6
  std::array<std::string, 4> words;  // per kCriteria order
};

/// Per-criterion weight words, or equal weighting.
struct WeightAssignment {
  int user = 0;
  std::string game;
  bool equal = true;
  std::array<std::string, 4> words;  // valid when !equal
};

struct Corpus {
  std::vector<FeedbackRecord> records;
  std::vector<WeightAssignment> weights;  // single mode only

  std::vector<std::string> games() const;
  const FeedbackRecord& record(int user, const std::string& game, Phase phase,
                               int frequency) const;
  const WeightAssignment& weight(int user, const std::string& game) const;
};

enum class CorpusMode { Multi, Single };

/// Load a feedback corpus:
/// user,game,phase,frequency,battery,app_rating,app_type,time_spent
/// with four extra weight-word columns (or "Equal") in single mode.
/// Missing cells raise DatasetError with the record coordinates.
Corpus load_feedback(std::istream& in, const std::string& name, CorpusMode mode);
Corpus load_feedback_file(const std::string& path, CorpusMode mode);

/// Standalone weight table keyed by user+game.
std::vector<WeightAssignment> load_weights_file(const std::string& path);

std::string serialize_corpus(const Corpus& corpus, CorpusMode mode);

/// game -> per-frequency average power (Watts per second), strictly
/// increasing in frequency.
struct PowerTable {
  std::map<std::string, std::array<double, kNumFrequencies>> watts;

  double at(const std::string& game, int frequency) const;
};

PowerTable load_power(std::istream& in, const std::string& name);
PowerTable load_power_file(const std::string& path);

}  // namespace cww
