#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cww/codebook.hpp"
#include "cww/datasets.hpp"
#include "cww/fou.hpp"
#include "cww/tri.hpp"
#include "cww/vocab.hpp"

namespace cww {

/// One user x game x phase slice of a corpus: the per-frequency criterion
/// words plus the user's weight assignment.
struct UserCase {
  std::array<std::array<std::string, 4>, kNumFrequencies> words;
  WeightAssignment weights;

  static UserCase from_corpus(const Corpus& corpus, int user,
                              const std::string& game, Phase phase);
};

/// Result of one engine run over a user case.
struct Recommendation {
  int frequency = 1;
  // engine-specific per-frequency score: distance-term index for the
  // extension-principle and symbolic engines, beta for the 2-tuple engine,
  // centroid mean for perceptual computing
  std::array<double, kNumFrequencies> score{};
  int satisfaction_index = 0;       // 0 when not evaluated
  std::string satisfaction;
};

// ---- extension-principle engine ----------------------------------------

struct EpScore {
  TriTuple c;                      // collective performance vector
  std::array<double, 5> distance;  // to d1..d5
  int index = 0;                   // argmin, ties to the higher index
};

/// Weighted mode multiplies each word tri-tuple by its weight tri-tuple
/// before averaging (no normalization by the weight mass); equal weights
/// reduce to a plain mean.
EpScore ep_score_frequency(const std::array<std::string, 4>& words,
                           const WeightAssignment& weights);

Recommendation ep_recommend(const UserCase& c, bool with_satisfaction = false);

/// Satisfaction term index closest to the collective performance vector;
/// ties go to the higher index.
int ep_satisfaction(const TriTuple& c_reco);

// ---- symbolic engine ----------------------------------------------------

/// How weights are paired with the descending-sorted terms. The source
/// tables pair an independently sorted weight vector (Literal); Attached
/// keeps each weight on its own criterion's term.
enum class SmPairing { Literal, Attached };

inline constexpr int kSymbolicCap = 4;

/// Convex-combination recursion over ordinal indices. terms/weights are
/// pairwise aligned after sorting per `pairing`; weights must sum to 1.
int sm_aggregate(std::vector<int> terms, std::vector<double> weights,
                 int cap = kSymbolicCap);

Recommendation sm_recommend(const UserCase& c, bool with_satisfaction = false,
                            SmPairing pairing = SmPairing::Literal,
                            int cap = kSymbolicCap);

// ---- 2-tuple engine -----------------------------------------------------

struct TwoTuple {
  int index = 1;        // term rank 1..5
  double alpha = 0.0;   // translation in [-0.5, 0.5)

  double beta() const { return index + alpha; }
};

/// Weighted-average aggregation; weight indices are positive integers
/// (equal weighting uses all ones). round() is half away from zero.
TwoTuple ttp_aggregate(const std::vector<int>& indices,
                       const std::vector<int>& weight_indices);

Recommendation ttp_recommend(const UserCase& c, bool with_satisfaction = false);

// ---- perceptual-computing engine ---------------------------------------

struct PcOptions {
  int resolution = kDefaultResolution;  // membership grid over the scale
  int levels = 201;                     // alpha-cut levels per MF
};

struct PcAggregate {
  SampledFou fou;      // aggregate on the full-scale grid
  Interval centroid;
  double score = 0.0;  // centroid mean
};

/// Fuzzy weighted average of the word FOUs. Equal weights average the
/// alpha-cuts directly; linguistic weights run an interval weighted
/// average (switch search over the weight boxes) at every level.
PcAggregate pc_score_frequency(const Codebook& cb,
                               const std::array<std::string, 4>& words,
                               const WeightAssignment& weights,
                               const PcOptions& opts = PcOptions{});

Recommendation pc_recommend(const Codebook& cb, const UserCase& c,
                            bool with_satisfaction = false,
                            const PcOptions& opts = PcOptions{});

/// Satisfaction word whose FOU is most similar (Jaccard) to the aggregate.
int pc_satisfaction(const Codebook& cb, const PcAggregate& aggregate,
                    const PcOptions& opts = PcOptions{});

}  // namespace cww
