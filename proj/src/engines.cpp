#include "cww/engines.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cww {

namespace {

int iround_half_away(double x) {
  return static_cast<int>(std::copysign(std::floor(std::fabs(x) + 0.5), x));
}

std::array<int, 4> word_ranks(const std::array<std::string, 4>& words) {
  std::array<int, 4> ranks{};
  const auto& sets = criterion_terms();
  for (int i = 0; i < 4; ++i) ranks[i] = sets[i].rank(words[i]);
  return ranks;
}

std::array<int, 4> weight_ranks(const WeightAssignment& w) {
  std::array<int, 4> ranks{1, 1, 1, 1};
  if (!w.equal) {
    for (int i = 0; i < 4; ++i) ranks[i] = weight_terms().rank(w.words[i]);
  }
  return ranks;
}

}  // namespace

UserCase UserCase::from_corpus(const Corpus& corpus, int user,
                               const std::string& game, Phase phase) {
  UserCase c;
  for (int f = 1; f <= kNumFrequencies; ++f) {
    c.words[f - 1] = corpus.record(user, game, phase, f).words;
  }
  if (corpus.weights.empty()) {
    c.weights = WeightAssignment{user, game, true, {}};
  } else {
    c.weights = corpus.weight(user, game);
  }
  return c;
}

// ---- extension principle -------------------------------------------------

EpScore ep_score_frequency(const std::array<std::string, 4>& words,
                           const WeightAssignment& weights) {
  const auto ranks = word_ranks(words);
  std::array<TriTuple, 4> items;
  for (int i = 0; i < 4; ++i) items[i] = uniform_tri(ranks[i]);
  if (!weights.equal) {
    for (int i = 0; i < 4; ++i) {
      const TriTuple w = uniform_tri(weight_terms().rank(weights.words[i]));
      items[i] = tri_product(items[i], w);
    }
  }
  EpScore s;
  s.c = tri_mean(items);
  for (int j = 1; j <= 5; ++j) {
    s.distance[j - 1] = weighted_distance(s.c, uniform_tri(j));
  }
  s.index = 1;
  for (int j = 2; j <= 5; ++j) {
    if (s.distance[j - 1] <= s.distance[s.index - 1]) s.index = j;  // ties up
  }
  return s;
}

int ep_satisfaction(const TriTuple& c_reco) {
  int best = 1;
  double best_d = weighted_distance(c_reco, uniform_tri(1));
  for (int j = 2; j <= 5; ++j) {
    const double d = weighted_distance(c_reco, uniform_tri(j));
    if (d <= best_d) {  // ties to the higher index, as for distance terms
      best = j;
      best_d = d;
    }
  }
  return best;
}

Recommendation ep_recommend(const UserCase& c, bool with_satisfaction) {
  Recommendation rec;
  std::array<EpScore, kNumFrequencies> scores;
  int best = 0;
  for (int f = 0; f < kNumFrequencies; ++f) {
    scores[f] = ep_score_frequency(c.words[f], c.weights);
    rec.score[f] = scores[f].index;
    if (scores[f].index > scores[best].index) best = f;  // ties to lowest F
  }
  rec.frequency = best + 1;
  if (with_satisfaction) {
    rec.satisfaction_index = ep_satisfaction(scores[best].c);
    rec.satisfaction = satisfaction_terms().label(rec.satisfaction_index);
  }
  return rec;
}

// ---- symbolic method -----------------------------------------------------

namespace {

// (w_top (.) s_top) (+) ((1 - w_top) (.) s_rest); the round increment uses
// the weight attached to the higher-indexed operand.
int sm_combine(double w_top, int top, int rest, int cap) {
  const int i = std::min(top, rest);
  const int j = std::max(top, rest);
  const double w_higher = top >= rest ? w_top : 1.0 - w_top;
  return std::min(cap, i + iround_half_away(w_higher * (j - i)));
}

}  // namespace

int sm_aggregate(std::vector<int> terms, std::vector<double> weights,
                 int cap) {
  if (terms.empty() || terms.size() != weights.size()) {
    throw std::invalid_argument("sm_aggregate: empty aggregation");
  }
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (std::fabs(total - 1.0) > 1e-9) {
    throw std::invalid_argument("sm_aggregate: weights must sum to 1");
  }
  if (!std::is_sorted(terms.rbegin(), terms.rend())) {
    throw std::invalid_argument("sm_aggregate: terms must be sorted descending");
  }
  int rest = terms.back();
  double tail_mass = weights.back();
  for (std::size_t k = terms.size() - 1; k-- > 0;) {
    tail_mass += weights[k];
    const double w_top = tail_mass > 0.0 ? weights[k] / tail_mass : 1.0;
    rest = w_top >= 1.0 - 1e-12 ? terms[k]
                                : sm_combine(w_top, terms[k], rest, cap);
  }
  return rest;
}

Recommendation sm_recommend(const UserCase& c, bool with_satisfaction,
                            SmPairing pairing, int cap) {
  const auto wranks = weight_ranks(c.weights);
  const double wsum = wranks[0] + wranks[1] + wranks[2] + wranks[3];

  Recommendation rec;
  int best = 0;
  for (int f = 0; f < kNumFrequencies; ++f) {
    const auto ranks = word_ranks(c.words[f]);
    std::vector<int> terms(ranks.begin(), ranks.end());
    std::vector<double> weights;
    weights.reserve(4);
    if (pairing == SmPairing::Literal) {
      // terms and weights each sorted descending, then paired by position
      std::sort(terms.rbegin(), terms.rend());
      auto wr = wranks;
      std::sort(wr.rbegin(), wr.rend());
      for (int w : wr) weights.push_back(w / wsum);
    } else {
      std::array<int, 4> order{0, 1, 2, 3};
      std::stable_sort(order.begin(), order.end(),
                       [&](int a, int b) { return ranks[a] > ranks[b]; });
      std::vector<int> t;
      for (int idx : order) {
        t.push_back(ranks[idx]);
        weights.push_back(wranks[idx] / wsum);
      }
      terms = std::move(t);
    }
    const int agg = sm_aggregate(std::move(terms), std::move(weights), cap);
    rec.score[f] = agg;
    if (agg > rec.score[best]) best = f;  // ties to the lowest frequency
  }
  rec.frequency = best + 1;
  if (with_satisfaction) {
    rec.satisfaction_index = static_cast<int>(rec.score[best]);
    rec.satisfaction = satisfaction_terms().label(rec.satisfaction_index);
  }
  return rec;
}

// ---- 2-tuple -------------------------------------------------------------

TwoTuple ttp_aggregate(const std::vector<int>& indices,
                       const std::vector<int>& weight_indices) {
  if (indices.empty() || indices.size() != weight_indices.size()) {
    throw std::invalid_argument("ttp_aggregate: empty aggregation");
  }
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    num += static_cast<double>(indices[i]) * weight_indices[i];
    den += weight_indices[i];
  }
  if (den <= 0.0) throw std::invalid_argument("ttp_aggregate: zero weight mass");
  const double beta = num / den;
  TwoTuple t;
  t.index = iround_half_away(beta);
  t.alpha = beta - t.index;
  return t;
}

Recommendation ttp_recommend(const UserCase& c, bool with_satisfaction) {
  const auto wranks = weight_ranks(c.weights);
  Recommendation rec;
  std::array<TwoTuple, kNumFrequencies> tuples;
  int best = 0;
  for (int f = 0; f < kNumFrequencies; ++f) {
    const auto ranks = word_ranks(c.words[f]);
    tuples[f] = ttp_aggregate(std::vector<int>(ranks.begin(), ranks.end()),
                              std::vector<int>(wranks.begin(), wranks.end()));
    rec.score[f] = tuples[f].beta();  // beta orders exactly as (index, alpha)
    if (rec.score[f] > rec.score[best]) best = f;
  }
  rec.frequency = best + 1;
  if (with_satisfaction) {
    rec.satisfaction_index = tuples[best].index;
    rec.satisfaction = satisfaction_terms().label(rec.satisfaction_index);
  }
  return rec;
}

}  // namespace cww
