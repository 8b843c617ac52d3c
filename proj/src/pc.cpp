#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "cww/engines.hpp"

namespace cww {

namespace {

struct Cut {
  double lo = 0.0, hi = 0.0;
};

// alpha-cut of a trapezoid at level in [0,1]
Cut trap_cut(const Trapezoid& t, double alpha) {
  return Cut{t.a + alpha * (t.b - t.a), t.d - alpha * (t.d - t.c)};
}

// min/max of sum(a_i w_i) / sum(w_i) over w_i in [wl_i, wr_i]; with only
// four operands the vertex enumeration is exact and cheap
Cut interval_weighted_average(const std::array<double, 4>& a_lo,
                              const std::array<double, 4>& a_hi,
                              const std::array<double, 4>& w_lo,
                              const std::array<double, 4>& w_hi) {
  double best_min = 0.0, best_max = 0.0;
  bool any = false;
  for (int mask = 0; mask < 16; ++mask) {
    double num_lo = 0.0, num_hi = 0.0, den = 0.0;
    for (int i = 0; i < 4; ++i) {
      const double w = (mask >> i) & 1 ? w_hi[i] : w_lo[i];
      num_lo += a_lo[i] * w;
      num_hi += a_hi[i] * w;
      den += w;
    }
    if (den <= 0.0) continue;
    const double y_lo = num_lo / den;
    const double y_hi = num_hi / den;
    if (!any) {
      best_min = y_lo;
      best_max = y_hi;
      any = true;
    } else {
      best_min = std::min(best_min, y_lo);
      best_max = std::max(best_max, y_hi);
    }
  }
  if (!any) {
    // all weight boxes collapse to zero; fall back to the plain mean
    double m_lo = 0.0, m_hi = 0.0;
    for (int i = 0; i < 4; ++i) {
      m_lo += a_lo[i] * 0.25;
      m_hi += a_hi[i] * 0.25;
    }
    return Cut{m_lo, m_hi};
  }
  return Cut{best_min, best_max};
}

// nested alpha-cuts of one membership function of the aggregate
struct CutStack {
  std::vector<double> level;
  std::vector<double> lo;  // nondecreasing
  std::vector<double> hi;  // nonincreasing

  void enforce_nesting() {
    for (std::size_t k = 1; k < level.size(); ++k) {
      lo[k] = std::max(lo[k], lo[k - 1]);
      hi[k] = std::min(hi[k], hi[k - 1]);
    }
  }

  // highest level whose cut contains x (0 when none)
  double height_at(double x) const {
    const auto last_lo =
        std::upper_bound(lo.begin(), lo.end(), x) - lo.begin() - 1;
    if (last_lo < 0) return 0.0;
    // hi is nonincreasing: find the last index with hi >= x
    std::ptrdiff_t last_hi =
        std::upper_bound(hi.begin(), hi.end(), x, std::greater<double>()) -
        hi.begin() - 1;
    if (last_hi < 0) return 0.0;
    const auto k = std::min(last_lo, last_hi);
    return level[static_cast<std::size_t>(k)];
  }
};

}  // namespace

PcAggregate pc_score_frequency(const Codebook& cb,
                               const std::array<std::string, 4>& words,
                               const WeightAssignment& weights,
                               const PcOptions& opts) {
  std::array<const Fou*, 4> x{};
  for (int i = 0; i < 4; ++i) x[i] = &cb.fou(kCriteria[i], words[i]);

  std::array<const Fou*, 4> w{};
  const bool fuzzy_weights = !weights.equal;
  if (fuzzy_weights) {
    for (int i = 0; i < 4; ++i) w[i] = &cb.fou("weights", weights.words[i]);
  }

  const int levels = std::max(2, opts.levels);
  CutStack upper, lower;

  // upper MF of the aggregate from the operand/weight upper MFs
  for (int k = 0; k < levels; ++k) {
    const double alpha = static_cast<double>(k) / (levels - 1);
    std::array<double, 4> a_lo{}, a_hi{}, w_lo{}, w_hi{};
    for (int i = 0; i < 4; ++i) {
      const Cut c = trap_cut(x[i]->umf, alpha);
      a_lo[i] = c.lo;
      a_hi[i] = c.hi;
      if (fuzzy_weights) {
        const Cut wc = trap_cut(w[i]->umf, alpha);
        w_lo[i] = wc.lo;
        w_hi[i] = wc.hi;
      } else {
        w_lo[i] = w_hi[i] = 1.0;
      }
    }
    const Cut y = interval_weighted_average(a_lo, a_hi, w_lo, w_hi);
    upper.level.push_back(alpha);
    upper.lo.push_back(y.lo);
    upper.hi.push_back(y.hi);
  }

  // lower MF: levels exist only up to the smallest operand/weight height
  double h = 1.0;
  for (int i = 0; i < 4; ++i) {
    h = std::min(h, x[i]->lmf_height);
    if (fuzzy_weights) h = std::min(h, w[i]->lmf_height);
  }
  for (int k = 0; k < levels; ++k) {
    const double alpha = h * k / (levels - 1);
    std::array<double, 4> a_lo{}, a_hi{}, w_lo{}, w_hi{};
    for (int i = 0; i < 4; ++i) {
      const Cut c = trap_cut(x[i]->lmf, alpha / x[i]->lmf_height);
      a_lo[i] = c.lo;
      a_hi[i] = c.hi;
      if (fuzzy_weights) {
        const Cut wc = trap_cut(w[i]->lmf, alpha / w[i]->lmf_height);
        w_lo[i] = wc.lo;
        w_hi[i] = wc.hi;
      } else {
        w_lo[i] = w_hi[i] = 1.0;
      }
    }
    const Cut y = interval_weighted_average(a_lo, a_hi, w_lo, w_hi);
    lower.level.push_back(alpha);
    lower.lo.push_back(y.lo);
    lower.hi.push_back(y.hi);
  }
  upper.enforce_nesting();
  lower.enforce_nesting();

  PcAggregate agg;
  const int n = std::max(2, opts.resolution);
  agg.fou.x.resize(n);
  agg.fou.lo.resize(n);
  agg.fou.up.resize(n);
  for (int i = 0; i < n; ++i) {
    const double xv = kScaleMin + (kScaleMax - kScaleMin) * i / (n - 1);
    agg.fou.x[i] = xv;
    agg.fou.up[i] = upper.height_at(xv);
    agg.fou.lo[i] = std::min(lower.height_at(xv), agg.fou.up[i]);
  }
  agg.centroid = km_centroid(agg.fou);
  agg.score = agg.centroid.mid();
  return agg;
}

int pc_satisfaction(const Codebook& cb, const PcAggregate& aggregate,
                    const PcOptions& opts) {
  const CriterionVocabulary& sat = cb.vocabulary("satisfaction");
  int best = 1;
  double best_sim = -1.0;
  for (int rank = 1; rank <= 5; ++rank) {
    const Fou& f = sat.fou(sat.words[rank - 1]);
    const SampledFou sf =
        SampledFou::from_fou(f, opts.resolution, kScaleMin, kScaleMax);
    const double sim = jaccard_similarity(aggregate.fou, sf);
    if (sim >= best_sim) {  // ties to the higher index
      best = rank;
      best_sim = sim;
    }
  }
  return best;
}

Recommendation pc_recommend(const Codebook& cb, const UserCase& c,
                            bool with_satisfaction, const PcOptions& opts) {
  Recommendation rec;
  int best = 0;
  PcAggregate best_agg;
  for (int f = 0; f < kNumFrequencies; ++f) {
    PcAggregate agg = pc_score_frequency(cb, c.words[f], c.weights, opts);
    rec.score[f] = agg.score;
    if (f == 0 || agg.score > rec.score[best]) {
      best = f;
      best_agg = std::move(agg);
    }
  }
  rec.frequency = best + 1;
  if (with_satisfaction) {
    rec.satisfaction_index = pc_satisfaction(cb, best_agg, opts);
    rec.satisfaction = satisfaction_terms().label(rec.satisfaction_index);
  }
  return rec;
}

}  // namespace cww
