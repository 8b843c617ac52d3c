#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cww/codebook.hpp"
#include "cww/config.hpp"
#include "cww/datasets.hpp"
#include "cww/engines.hpp"

namespace cww {

/// Word-model codebooks keyed by encoder name ("ia", "eia", "hma").
using CodebookSet = std::map<std::string, Codebook>;

inline const std::vector<std::string> kEngineColumns = {"ep", "sm", "2tp"};

/// Golden (published) recommendation table, long form.
struct GoldenTable {
  // (game, user, phase, engine) -> frequency
  std::map<std::string, int> cells;

  static std::string key(const std::string& game, int user, Phase phase,
                         const std::string& engine);
  std::optional<int> at(const std::string& game, int user, Phase phase,
                        const std::string& engine) const;
  static GoldenTable load(const std::string& path);
};

/// Regenerated recommendations for one user case alongside the golden ones.
struct ComparisonCell {
  std::string game;
  int user = 0;
  Phase phase = Phase::Training;
  bool equal_weights = true;
  std::map<std::string, Recommendation> engines;  // ep, sm, 2tp
  std::map<std::string, Recommendation> pc;       // per codebook variant
};

struct ComparisonTable {
  CorpusMode mode = CorpusMode::Multi;
  std::vector<std::string> games;
  std::vector<ComparisonCell> cells;  // ordered by (game, user, phase)
  GoldenTable golden;

  const ComparisonCell& cell(const std::string& game, int user,
                             Phase phase) const;
  /// Perceptual-computing reference column: the golden cell when present,
  /// otherwise the regenerated one under the given variant.
  int pc_reference(const ComparisonCell& c,
                   const std::string& variant = "") const;
};

/// Replay the corpus through the requested engines under every codebook in
/// the set. The pc column is computed once per variant.
ComparisonTable run_comparison(const Corpus& corpus, CorpusMode mode,
                               const CodebookSet& codebooks,
                               const GoldenTable& golden,
                               const std::vector<std::string>& engines =
                                   kEngineColumns,
                               const Config& cfg = Config{});

/// Table whose engine columns carry the published frequencies, with the
/// per-frequency scores and satisfaction terms recomputed by the engines at
/// those frequencies. This is the recount basis for the published
/// aggregate statistics.
ComparisonTable golden_replay(const Corpus& corpus, CorpusMode mode,
                              const GoldenTable& golden,
                              const Config& cfg = Config{});

/// One regenerated-vs-golden disagreement.
struct Discrepancy {
  std::string game;
  int user = 0;
  Phase phase = Phase::Training;
  std::string engine;
  int golden = 0;
  int regenerated = 0;
};

struct AgreementReport {
  std::map<std::string, int> cells_total;    // per engine column
  std::map<std::string, int> cells_matched;
  std::vector<Discrepancy> discrepancies;

  double fraction(const std::string& engine) const;
  double overall_fraction() const;
};

AgreementReport score_against_golden(const ComparisonTable& table,
                                     const std::string& pc_variant = "");

/// Count of cases where an engine's recommendation differs from the
/// perceptual-computing reference column, split by weighting group.
struct MismatchEntry {
  std::string game;
  std::string engine;
  Phase phase = Phase::Training;
  int count = 0;
  int group1 = 0;  // equal-weight users
  int group2 = 0;
  double percent = 0.0;  // 100 * count / users
};

struct MismatchReport {
  std::vector<MismatchEntry> entries;
  int total_group1 = 0;
  int total_group2 = 0;

  const MismatchEntry& entry(const std::string& game, const std::string& engine,
                             Phase phase) const;
};

MismatchReport mismatch_stats(const ComparisonTable& table);

/// Average power draw per engine column (Watts), Table-VIII style.
struct PowerReport {
  // (game, engine, phase) -> mean watts over users; engine "pf" is the
  // perceptual-computing reference column
  std::map<std::string, double> mean_watts;
  // phase -> engine -> mean over games of 100*(engine-pf)/pf
  std::map<std::string, double> improvement;

  static std::string key(const std::string& game, const std::string& engine,
                         Phase phase);
  double watts(const std::string& game, const std::string& engine,
               Phase phase) const;
};

PowerReport power_report(const ComparisonTable& table, const PowerTable& power);

/// Average satisfaction index per engine column, Table-IX style. The pf
/// column decodes the aggregate FOU at the reference frequency against the
/// satisfaction vocabulary; the other engines use their own mappings.
struct SatisfactionReport {
  std::map<std::string, double> mean_index;  // same keying as PowerReport
  std::map<std::string, double> improvement; // phase -> engine -> percent
  // (game, user, phase, engine) -> satisfaction index
  std::map<std::string, int> per_user;

  double index(const std::string& game, const std::string& engine,
               Phase phase) const;
};

SatisfactionReport satisfaction_report(const ComparisonTable& table,
                                       const Corpus& corpus,
                                       const Codebook& pf_codebook,
                                       const Config& cfg = Config{});

/// Per-word fuzziness across the three encoders plus the mean-decrease
/// percentages of EIA and HMA relative to IA.
struct FuzzinessRow {
  std::string criterion;
  std::string word;
  FuzzinessInterval ia, eia, hma;
  double decrease_eia = 0.0;  // percent, from 2-decimal rounded means
  double decrease_hma = 0.0;
};

struct FuzzinessReport {
  std::vector<FuzzinessRow> rows;
  double avg_decrease_eia = 0.0;
  double avg_decrease_hma = 0.0;
};

FuzzinessReport fuzziness_report(const CodebookSet& codebooks,
                                 int resolution = kDefaultResolution);

/// Table X/XI analogue: per-group failure counts plus group power and
/// satisfaction averages.
struct GroupEntry {
  std::string game;
  std::string engine;
  Phase phase = Phase::Training;
  int fail_group1 = 0;
  int fail_group2 = 0;
  double watts_group1 = 0.0;
  double watts_group2 = 0.0;
  double satisfaction_group1 = 0.0;
  double satisfaction_group2 = 0.0;
};

struct GroupReport {
  std::vector<GroupEntry> entries;
  int total_fail_group1 = 0;
  int total_fail_group2 = 0;

  double failure_ratio_percent() const;  // 100*(g2-g1)/g1
};

GroupReport group_analysis(const ComparisonTable& table,
                           const PowerTable& power,
                           const SatisfactionReport& satisfaction);

// rendering helpers shared by the CLI
std::string render_comparison(const ComparisonTable& table,
                              const std::string& pc_variant = "");
std::string render_mismatch(const MismatchReport& rep);
std::string render_power(const PowerReport& rep,
                         const std::vector<std::string>& games);
std::string render_satisfaction(const SatisfactionReport& rep,
                                const std::vector<std::string>& games);
std::string render_fuzziness(const FuzzinessReport& rep);
std::string render_groups(const GroupReport& rep);
std::string render_discrepancies(const AgreementReport& rep);

}  // namespace cww
