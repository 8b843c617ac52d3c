// Command-line front end: codebook validation, virtual-subject sampling,
// single recommendations, full corpus comparisons and the report suite.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cww/reports.hpp"

using namespace cww;

namespace {

constexpr int kExitValidation = 2;  // data validation failure
constexpr int kExitMismatch = 3;    // golden-table agreement below threshold

struct DataPaths {
  std::string dir = "data";

  std::string corpus(CorpusMode mode) const {
    return dir + (mode == CorpusMode::Multi ? "/corpora/multi_feedback.csv"
                                            : "/corpora/single_feedback.csv");
  }
  std::string golden(CorpusMode mode) const {
    return dir + (mode == CorpusMode::Multi ? "/golden/table4.csv"
                                            : "/golden/table6.csv");
  }
  std::string codebook(CorpusMode mode, const std::string& variant) const {
    return dir + "/codebooks/" +
           (mode == CorpusMode::Multi ? "multi_" : "user22_") + variant +
           ".csv";
  }
  std::string power() const { return dir + "/power/table7.csv"; }
};

CodebookSet load_set(const DataPaths& paths, CorpusMode mode) {
  CodebookSet set;
  for (const char* variant : {"ia", "eia", "hma"}) {
    set.emplace(variant, parse_codebook_file(paths.codebook(mode, variant)));
  }
  return set;
}

Interval parse_interval(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw std::invalid_argument("expected two comma-separated numbers: " +
                                text);
  }
  return Interval{std::stod(text.substr(0, comma)),
                  std::stod(text.substr(comma + 1))};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

int run_validate(const std::string& file, int resolution) {
  const Codebook cb = parse_codebook_file(file);
  const ValidationReport rep = validate_codebook(cb, resolution);
  std::cout << "criterion      word  knots  contained  centroid  dev_l  dev_r\n";
  for (const auto& c : rep.checks) {
    std::printf("%-14s %-5s %-6s %-10s %-9s %5.2f  %5.2f\n",
                c.criterion.c_str(), c.word.c_str(),
                c.knots_ordered ? "ok" : "BAD",
                c.lmf_contained ? "ok" : "BAD",
                c.centroid_in_support ? "ok" : "BAD", c.centroid_l_dev,
                c.centroid_r_dev);
  }
  if (!rep.all_ok()) {
    std::cout << rep.failures() << " word(s) failed validation\n";
    return kExitValidation;
  }
  std::cout << "all " << rep.checks.size() << " words pass\n";
  return 0;
}

int run_sample(const std::string& left, const std::string& right, int n,
               std::uint64_t seed) {
  const IntervalPair pair{parse_interval(left), parse_interval(right)};
  std::cout << "L,R\n";
  for (const auto& [l, r] : person_fou_sample(pair, n, seed)) {
    std::printf("%.6f,%.6f\n", l, r);
  }
  return 0;
}

int run_recommend(const DataPaths& paths, const std::string& engine,
                  const std::string& corpus_file,
                  const std::string& codebook_file, const std::string& mode_s,
                  int user, const std::string& game, const std::string& phase_s,
                  const Config& cfg) {
  const CorpusMode mode =
      mode_s == "single" ? CorpusMode::Single : CorpusMode::Multi;
  const Corpus corpus = load_feedback_file(
      corpus_file.empty() ? paths.corpus(mode) : corpus_file, mode);
  std::vector<int> users;
  if (user > 0) {
    users.push_back(user);
  } else {
    for (int u = 1; u <= kNumUsers; ++u) users.push_back(u);
  }
  const std::vector<std::string> games =
      game.empty() ? corpus.games() : std::vector<std::string>{game};
  std::vector<Phase> phases;
  if (phase_s.empty()) {
    phases = {Phase::Training, Phase::Execution};
  } else {
    phases = {phase_from_string(phase_s)};
  }

  Codebook cb;
  if (engine == "pc") {
    cb = parse_codebook_file(
        codebook_file.empty() ? paths.codebook(mode, "eia") : codebook_file);
  }
  const PcOptions opts{cfg.grid_resolution, cfg.pc_levels};
  const bool satisfaction = mode == CorpusMode::Single;

  std::cout << "user,game,phase,frequency,satisfaction\n";
  for (const auto& g : games) {
    for (int u : users) {
      for (Phase ph : phases) {
        const UserCase uc = UserCase::from_corpus(corpus, u, g, ph);
        Recommendation rec;
        if (engine == "ep") {
          rec = ep_recommend(uc, satisfaction);
        } else if (engine == "sm") {
          rec = sm_recommend(uc, satisfaction, cfg.sm_pairing,
                             cfg.symbolic_cap);
        } else if (engine == "2tp") {
          rec = ttp_recommend(uc, satisfaction);
        } else if (engine == "pc") {
          rec = pc_recommend(cb, uc, satisfaction, opts);
        } else {
          throw std::invalid_argument("unknown engine: " + engine);
        }
        std::cout << u << ',' << g << ',' << to_string(ph) << ",F"
                  << rec.frequency << ',' << rec.satisfaction << '\n';
      }
    }
  }
  return 0;
}

int run_compare(const DataPaths& paths, const std::string& mode_s,
                const std::string& out_dir, const Config& cfg) {
  const CorpusMode mode =
      mode_s == "single" ? CorpusMode::Single : CorpusMode::Multi;
  const Corpus corpus = load_feedback_file(paths.corpus(mode), mode);
  const GoldenTable golden = GoldenTable::load(paths.golden(mode));
  const CodebookSet codebooks = load_set(paths, mode);
  const ComparisonTable table =
      run_comparison(corpus, mode, codebooks, golden, kEngineColumns, cfg);
  const std::string variant = mode == CorpusMode::Multi ? "ia" : "hma";
  const AgreementReport agreement = score_against_golden(table, variant);

  std::filesystem::create_directories(out_dir);
  write_file(out_dir + "/comparison.csv", render_comparison(table, variant));
  write_file(out_dir + "/discrepancies.csv", render_discrepancies(agreement));

  bool ok = true;
  for (const auto& engine : kEngineColumns) {
    const double frac = agreement.fraction(engine);
    const int matched = agreement.cells_matched.count(engine)
                            ? agreement.cells_matched.at(engine)
                            : 0;
    const int total = agreement.cells_total.count(engine)
                          ? agreement.cells_total.at(engine)
                          : 0;
    std::printf("%-4s agreement %d/%d = %.1f%%\n", engine.c_str(), matched,
                total, 100.0 * frac);
    ok = ok && frac >= cfg.golden_agreement_threshold;
  }
  std::printf("pc(%s) agreement %.1f%% (reference column, not gated)\n",
              variant.c_str(), 100.0 * agreement.fraction("pc"));
  std::printf("wrote %s/comparison.csv and discrepancies.csv\n",
              out_dir.c_str());
  return ok ? 0 : kExitMismatch;
}

int run_report(const DataPaths& paths, const std::string& kind,
               const std::string& mode_s, bool regenerated, bool plot_data,
               const Config& cfg) {
  const CorpusMode mode =
      mode_s == "multi" ? CorpusMode::Multi : CorpusMode::Single;
  if (kind == "fuzziness") {
    const CodebookSet codebooks = load_set(paths, mode);
    std::cout << render_fuzziness(
        fuzziness_report(codebooks, cfg.grid_resolution));
    return 0;
  }

  const Corpus corpus = load_feedback_file(paths.corpus(mode), mode);
  const GoldenTable golden = GoldenTable::load(paths.golden(mode));
  ComparisonTable table;
  if (regenerated) {
    table = run_comparison(corpus, mode, load_set(paths, mode), golden,
                           kEngineColumns, cfg);
  } else {
    table = golden_replay(corpus, mode, golden, cfg);
  }

  if (kind == "mismatch") {
    std::cout << render_mismatch(mismatch_stats(table));
    return 0;
  }
  if (mode != CorpusMode::Single) {
    throw std::invalid_argument(kind + " reports need --mode single");
  }
  const PowerTable power = load_power_file(paths.power());
  if (kind == "power") {
    const PowerReport rep = power_report(table, power);
    std::cout << render_power(rep, table.games);
    if (plot_data) {
      std::cout << "plot series (game/engine/phase,watts):\n";
      for (const auto& [key, v] : rep.mean_watts) {
        std::cout << key << ',' << v << '\n';
      }
    }
    return 0;
  }
  const Codebook pf_cb = parse_codebook_file(paths.codebook(mode, "hma"));
  const SatisfactionReport sat = satisfaction_report(table, corpus, pf_cb, cfg);
  if (kind == "satisfaction") {
    std::cout << render_satisfaction(sat, table.games);
    if (plot_data) {
      std::cout << "plot series (game/engine/phase,index):\n";
      for (const auto& [key, v] : sat.mean_index) {
        std::cout << key << ',' << v << '\n';
      }
    }
    return 0;
  }
  if (kind == "groups") {
    std::cout << render_groups(group_analysis(table, power, sat));
    return 0;
  }
  throw std::invalid_argument("unknown report: " + kind);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Computing-with-words linguistic decision toolkit"};
  app.require_subcommand(1);

  DataPaths paths;
  std::string config_file;
  app.add_option("--data-dir", paths.dir, "data directory root")
      ->capture_default_str();
  app.add_option("--config", config_file, "key=value configuration file");

  auto* codebook = app.add_subcommand("codebook", "codebook utilities");
  codebook->require_subcommand(1);
  auto* validate = codebook->add_subcommand("validate", "validate a codebook");
  std::string validate_file;
  validate->add_option("file", validate_file, "codebook csv")->required();

  auto* personfou = app.add_subcommand("personfou", "virtual-subject sampling");
  personfou->require_subcommand(1);
  auto* sample = personfou->add_subcommand("sample", "draw data intervals");
  std::string left_s, right_s;
  int n = 50;
  std::uint64_t seed = 1;
  sample->add_option("--left", left_s, "left endpoint interval a,b")
      ->required();
  sample->add_option("--right", right_s, "right endpoint interval c,d")
      ->required();
  sample->add_option("--n", n, "number of pairs")->capture_default_str();
  sample->add_option("--seed", seed, "random seed")->capture_default_str();

  auto* recommend = app.add_subcommand("recommend", "run one engine");
  std::string engine, corpus_file, codebook_file, game, phase_s;
  std::string rec_mode = "single";
  int user = 0;
  recommend->add_option("--engine", engine, "pc|ep|sm|2tp")->required();
  recommend->add_option("--corpus", corpus_file, "feedback corpus csv");
  recommend->add_option("--codebook", codebook_file, "codebook csv (pc)");
  recommend->add_option("--mode", rec_mode, "multi|single")
      ->capture_default_str();
  recommend->add_option("--user", user, "user id, 0 = all");
  recommend->add_option("--game", game, "game label");
  recommend->add_option("--phase", phase_s, "T|E");

  auto* compare = app.add_subcommand("compare", "replay a corpus vs goldens");
  std::string cmp_mode = "multi", out_dir = "out";
  compare->add_option("--mode", cmp_mode, "multi|single")->required();
  compare->add_option("--out", out_dir, "output directory")
      ->capture_default_str();

  auto* report = app.add_subcommand("report", "aggregate statistics");
  std::string report_kind, rep_mode = "single";
  bool regenerated = false, plot_data = false;
  report
      ->add_option("kind", report_kind,
                   "mismatch|power|satisfaction|fuzziness|groups")
      ->required();
  report->add_option("--mode", rep_mode, "multi|single")
      ->capture_default_str();
  report->add_flag("--regenerated", regenerated,
                   "use regenerated engine columns instead of the published "
                   "table replay");
  report->add_flag("--plot-data", plot_data, "emit x/y series");

  CLI11_PARSE(app, argc, argv);

  try {
    Config cfg;
    if (!config_file.empty()) cfg = Config::from_file(config_file);
    if (validate->parsed()) {
      return run_validate(validate_file, cfg.grid_resolution);
    }
    if (sample->parsed()) {
      return run_sample(left_s, right_s, n, seed);
    }
    if (recommend->parsed()) {
      return run_recommend(paths, engine, corpus_file, codebook_file, rec_mode,
                           user, game, phase_s, cfg);
    }
    if (compare->parsed()) {
      return run_compare(paths, cmp_mode, out_dir, cfg);
    }
    if (report->parsed()) {
      return run_report(paths, report_kind, rep_mode, regenerated, plot_data,
                        cfg);
    }
  } catch (const CodebookError& e) {
    std::cerr << "codebook error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const DatasetError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
