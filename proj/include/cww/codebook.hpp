#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cww/fou.hpp"

namespace cww {

/// Parse or validation failure carrying the offending source location.
struct CodebookError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One criterion (or the satisfaction / weight vocabulary) with its five
/// words in rank order.
struct CriterionVocabulary {
  std::string criterion;
  std::vector<std::string> words;  // rank 1..5
  std::map<std::string, Fou> fous;

  const Fou& fou(const std::string& word) const;
  int rank(const std::string& word) const;  // 1-based, -1 if unknown
};

/// A named word -> FOU table on the 0-10 scale.
struct Codebook {
  std::vector<CriterionVocabulary> criteria;

  const CriterionVocabulary& vocabulary(const std::string& criterion) const;
  bool has_vocabulary(const std::string& criterion) const;
  const Fou& fou(const std::string& criterion, const std::string& word) const;
};

/// Load a codebook file; format is one word per row,
/// criterion,word,rank,umf_a..umf_d,lmf_a..lmf_d,lmf_h,centroid_l,centroid_r,center
/// with a header row. Malformed rows raise CodebookError naming the file,
/// line and violated invariant.
Codebook parse_codebook(std::istream& in, const std::string& name);
Codebook parse_codebook_file(const std::string& path);

/// Write back in the same format; parse(serialize(cb)) == cb.
std::string serialize_codebook(const Codebook& cb);

/// One per-word validation outcome.
struct WordCheck {
  std::string criterion;
  std::string word;
  bool knots_ordered = false;
  bool lmf_contained = false;
  bool centroid_in_support = false;
  double centroid_l_dev = 0.0;  // |cached - recomputed|
  double centroid_r_dev = 0.0;
  bool ok() const { return knots_ordered && lmf_contained && centroid_in_support; }
};

struct ValidationReport {
  std::vector<WordCheck> checks;
  bool all_ok() const;
  int failures() const;
};

ValidationReport validate_codebook(const Codebook& cb,
                                   int resolution = kDefaultResolution);

/// Endpoint intervals supplied by a single real subject.
struct IntervalPair {
  Interval left;
  Interval right;
};

/// Draw n virtual-subject data intervals: L_i uniform on the left interval,
/// R_i uniform on the right one, paired by index. Pairs with L_i >= R_i are
/// resampled (up to a bounded number of attempts). Deterministic per seed.
std::vector<std::pair<double, double>> person_fou_sample(
    const IntervalPair& p, int n = 50, std::uint64_t seed = 0);

/// Contract for word encoders operating on collected data intervals.
/// IA/EIA/HMA style encoders plug in here; the toolkit itself ships only
/// a table-backed implementation serving pre-encoded FOUs.
class WordEncoder {
 public:
  virtual ~WordEncoder() = default;
  virtual Fou encode(const std::string& word,
                     std::span<const std::pair<double, double>> intervals) = 0;
};

/// Serves the stored Fou for the requested word, ignoring the intervals.
class TableBackedEncoder : public WordEncoder {
 public:
  TableBackedEncoder(const Codebook& cb, std::string criterion);
  Fou encode(const std::string& word,
             std::span<const std::pair<double, double>> intervals) override;

 private:
  const Codebook& cb_;
  std::string criterion_;
};

}  // namespace cww
