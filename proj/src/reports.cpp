#include "cww/reports.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace cww {

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  return out;
}

std::string phase_engine_key(Phase phase, const std::string& engine) {
  return to_string(phase) + ":" + engine;
}

}  // namespace

std::string GoldenTable::key(const std::string& game, int user, Phase phase,
                             const std::string& engine) {
  return game + "/" + std::to_string(user) + "/" + to_string(phase) + "/" +
         engine;
}

std::optional<int> GoldenTable::at(const std::string& game, int user,
                                   Phase phase,
                                   const std::string& engine) const {
  auto it = cells.find(key(game, user, phase, engine));
  if (it == cells.end()) return std::nullopt;
  return it->second;
}

GoldenTable GoldenTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DatasetError("cannot open golden table: " + path);
  GoldenTable t;
  std::string line;
  bool header_seen = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    auto cells = split_csv(line);
    if (cells.size() != 5) {
      throw DatasetError(path + ":" + std::to_string(lineno) +
                         ": expected game,user,engine,phase,frequency");
    }
    const int user = std::stoi(cells[1]);
    const Phase phase = phase_from_string(cells[3]);
    if (cells[4].size() != 2 || cells[4][0] != 'F') {
      throw DatasetError(path + ":" + std::to_string(lineno) +
                         ": bad frequency " + cells[4]);
    }
    t.cells[key(cells[0], user, phase, cells[2])] = cells[4][1] - '0';
  }
  return t;
}

const ComparisonCell& ComparisonTable::cell(const std::string& game, int user,
                                            Phase phase) const {
  for (const auto& c : cells) {
    if (c.game == game && c.user == user && c.phase == phase) return c;
  }
  throw DatasetError("no comparison cell for user " + std::to_string(user) +
                     ", game " + game);
}

int ComparisonTable::pc_reference(const ComparisonCell& c,
                                  const std::string& variant) const {
  if (auto g = golden.at(c.game, c.user, c.phase, "pc")) return *g;
  if (c.pc.empty()) throw DatasetError("no perceptual-computing column");
  if (!variant.empty()) return c.pc.at(variant).frequency;
  return c.pc.begin()->second.frequency;
}

ComparisonTable run_comparison(const Corpus& corpus, CorpusMode mode,
                               const CodebookSet& codebooks,
                               const GoldenTable& golden,
                               const std::vector<std::string>& engines,
                               const Config& cfg) {
  ComparisonTable table;
  table.mode = mode;
  table.golden = golden;
  if (engines.empty() && codebooks.empty()) return table;
  table.games = corpus.games();
  const bool satisfaction = mode == CorpusMode::Single;
  PcOptions pc_opts;
  pc_opts.resolution = cfg.grid_resolution;
  pc_opts.levels = cfg.pc_levels;
  for (const auto& game : table.games) {
    for (int user = 1; user <= kNumUsers; ++user) {
      for (Phase phase : {Phase::Training, Phase::Execution}) {
        const UserCase uc = UserCase::from_corpus(corpus, user, game, phase);
        ComparisonCell cell;
        cell.game = game;
        cell.user = user;
        cell.phase = phase;
        cell.equal_weights = uc.weights.equal;
        for (const auto& engine : engines) {
          if (engine == "ep") {
            cell.engines["ep"] = ep_recommend(uc, satisfaction);
          } else if (engine == "sm") {
            cell.engines["sm"] = sm_recommend(uc, satisfaction,
                                              cfg.sm_pairing,
                                              cfg.symbolic_cap);
          } else if (engine == "2tp") {
            cell.engines["2tp"] = ttp_recommend(uc, satisfaction);
          } else {
            throw DatasetError("unknown engine column: " + engine);
          }
        }
        for (const auto& [name, cb] : codebooks) {
          cell.pc[name] = pc_recommend(cb, uc, satisfaction, pc_opts);
        }
        table.cells.push_back(std::move(cell));
      }
    }
  }
  return table;
}

ComparisonTable golden_replay(const Corpus& corpus, CorpusMode mode,
                              const GoldenTable& golden, const Config& cfg) {
  ComparisonTable table;
  table.mode = mode;
  table.golden = golden;
  table.games = corpus.games();
  for (const auto& game : table.games) {
    for (int user = 1; user <= kNumUsers; ++user) {
      for (Phase phase : {Phase::Training, Phase::Execution}) {
        const UserCase uc = UserCase::from_corpus(corpus, user, game, phase);
        ComparisonCell cell;
        cell.game = game;
        cell.user = user;
        cell.phase = phase;
        cell.equal_weights = uc.weights.equal;
        for (const auto& engine : kEngineColumns) {
          const auto g = golden.at(game, user, phase, engine);
          if (!g) continue;
          Recommendation rec;
          if (engine == "ep") {
            rec = ep_recommend(uc, false);
            const EpScore s = ep_score_frequency(uc.words[*g - 1], uc.weights);
            rec.satisfaction_index = ep_satisfaction(s.c);
          } else if (engine == "sm") {
            rec = sm_recommend(uc, false, cfg.sm_pairing, cfg.symbolic_cap);
            rec.satisfaction_index = static_cast<int>(rec.score[*g - 1]);
          } else {
            rec = ttp_recommend(uc, false);
            rec.satisfaction_index = static_cast<int>(
                round_half_away(rec.score[*g - 1], 0));
          }
          rec.frequency = *g;  // published column; scores stay recomputed
          rec.satisfaction = satisfaction_terms().label(rec.satisfaction_index);
          cell.engines[engine] = rec;
        }
        table.cells.push_back(std::move(cell));
      }
    }
  }
  return table;
}

double AgreementReport::fraction(const std::string& engine) const {
  auto it = cells_total.find(engine);
  if (it == cells_total.end() || it->second == 0) return 1.0;
  return static_cast<double>(cells_matched.at(engine)) / it->second;
}

double AgreementReport::overall_fraction() const {
  int total = 0, matched = 0;
  for (const auto& [engine, n] : cells_total) {
    total += n;
    matched += cells_matched.at(engine);
  }
  return total == 0 ? 1.0 : static_cast<double>(matched) / total;
}

AgreementReport score_against_golden(const ComparisonTable& table,
                                     const std::string& pc_variant) {
  AgreementReport rep;
  for (const auto& cell : table.cells) {
    for (const auto& [engine, rec] : cell.engines) {
      const auto g = table.golden.at(cell.game, cell.user, cell.phase, engine);
      if (!g) continue;  // the published table has no such column
      rep.cells_total[engine] += 1;
      if (*g == rec.frequency) {
        rep.cells_matched[engine] += 1;
      } else {
        rep.discrepancies.push_back(Discrepancy{cell.game, cell.user,
                                                cell.phase, engine, *g,
                                                rec.frequency});
      }
    }
    if (!cell.pc.empty()) {
      const auto g = table.golden.at(cell.game, cell.user, cell.phase, "pc");
      if (g) {
        const Recommendation& rec = pc_variant.empty()
                                        ? cell.pc.begin()->second
                                        : cell.pc.at(pc_variant);
        rep.cells_total["pc"] += 1;
        if (*g == rec.frequency) {
          rep.cells_matched["pc"] += 1;
        } else {
          rep.discrepancies.push_back(Discrepancy{cell.game, cell.user,
                                                  cell.phase, "pc", *g,
                                                  rec.frequency});
        }
      }
    }
  }
  return rep;
}

const MismatchEntry& MismatchReport::entry(const std::string& game,
                                           const std::string& engine,
                                           Phase phase) const {
  for (const auto& e : entries) {
    if (e.game == game && e.engine == engine && e.phase == phase) return e;
  }
  throw DatasetError("no mismatch entry for " + game + "/" + engine);
}

MismatchReport mismatch_stats(const ComparisonTable& table) {
  MismatchReport rep;
  std::map<std::string, MismatchEntry> acc;
  for (const auto& cell : table.cells) {
    const int reference = table.pc_reference(cell);
    for (const auto& [engine, rec] : cell.engines) {
      const std::string key =
          cell.game + "/" + engine + "/" + to_string(cell.phase);
      MismatchEntry& e = acc[key];
      e.game = cell.game;
      e.engine = engine;
      e.phase = cell.phase;
      if (rec.frequency != reference) {
        e.count += 1;
        (cell.equal_weights ? e.group1 : e.group2) += 1;
      }
    }
  }
  for (auto& [key, e] : acc) {
    e.percent = 100.0 * e.count / kNumUsers;
    rep.total_group1 += e.group1;
    rep.total_group2 += e.group2;
    rep.entries.push_back(e);
  }
  return rep;
}

std::string PowerReport::key(const std::string& game,
                             const std::string& engine, Phase phase) {
  return game + "/" + engine + "/" + to_string(phase);
}

double PowerReport::watts(const std::string& game, const std::string& engine,
                          Phase phase) const {
  return mean_watts.at(key(game, engine, phase));
}

PowerReport power_report(const ComparisonTable& table,
                         const PowerTable& power) {
  PowerReport rep;
  std::map<std::string, std::pair<double, int>> acc;
  for (const auto& cell : table.cells) {
    auto& pf_slot = acc[PowerReport::key(cell.game, "pf", cell.phase)];
    pf_slot.first += power.at(cell.game, table.pc_reference(cell));
    pf_slot.second += 1;
    for (const auto& [engine, rec] : cell.engines) {
      auto& slot = acc[PowerReport::key(cell.game, engine, cell.phase)];
      slot.first += power.at(cell.game, rec.frequency);
      slot.second += 1;
    }
  }
  for (const auto& [key, slot] : acc) {
    rep.mean_watts[key] = slot.first / slot.second;
  }
  for (Phase phase : {Phase::Training, Phase::Execution}) {
    for (const auto& engine : kEngineColumns) {
      double sum = 0.0;
      int n = 0;
      for (const auto& game : table.games) {
        const auto it =
            rep.mean_watts.find(PowerReport::key(game, engine, phase));
        if (it == rep.mean_watts.end()) continue;
        const double pf = rep.watts(game, "pf", phase);
        sum += 100.0 * (it->second - pf) / pf;
        n += 1;
      }
      if (n > 0) rep.improvement[phase_engine_key(phase, engine)] = sum / n;
    }
  }
  return rep;
}

double SatisfactionReport::index(const std::string& game,
                                 const std::string& engine,
                                 Phase phase) const {
  return mean_index.at(PowerReport::key(game, engine, phase));
}

SatisfactionReport satisfaction_report(const ComparisonTable& table,
                                       const Corpus& corpus,
                                       const Codebook& pf_codebook,
                                       const Config& cfg) {
  SatisfactionReport rep;
  PcOptions opts;
  opts.resolution = cfg.grid_resolution;
  opts.levels = cfg.pc_levels;
  std::map<std::string, std::pair<double, int>> acc;
  for (const auto& cell : table.cells) {
    const UserCase uc =
        UserCase::from_corpus(corpus, cell.user, cell.game, cell.phase);
    // the pf column decodes the aggregate at the reference frequency
    const int ref = table.pc_reference(cell);
    const PcAggregate agg =
        pc_score_frequency(pf_codebook, uc.words[ref - 1], uc.weights, opts);
    const int pf_idx = pc_satisfaction(pf_codebook, agg, opts);
    const std::string user_key = cell.game + "/" + std::to_string(cell.user) +
                                 "/" + to_string(cell.phase);
    rep.per_user[user_key + "/pf"] = pf_idx;
    auto& pf_slot = acc[PowerReport::key(cell.game, "pf", cell.phase)];
    pf_slot.first += pf_idx;
    pf_slot.second += 1;
    for (const auto& [engine, rec] : cell.engines) {
      rep.per_user[user_key + "/" + engine] = rec.satisfaction_index;
      auto& slot = acc[PowerReport::key(cell.game, engine, cell.phase)];
      slot.first += rec.satisfaction_index;
      slot.second += 1;
    }
  }
  for (const auto& [key, slot] : acc) {
    rep.mean_index[key] = slot.first / slot.second;
  }
  for (Phase phase : {Phase::Training, Phase::Execution}) {
    for (const auto& engine : kEngineColumns) {
      double sum = 0.0;
      int n = 0;
      for (const auto& game : table.games) {
        const auto it =
            rep.mean_index.find(PowerReport::key(game, engine, phase));
        if (it == rep.mean_index.end()) continue;
        const double pf = rep.index(game, "pf", phase);
        sum += 100.0 * (pf - it->second) / it->second;
        n += 1;
      }
      if (n > 0) rep.improvement[phase_engine_key(phase, engine)] = sum / n;
    }
  }
  return rep;
}

namespace {

// Presentation convention of the published fuzziness tables: type-1
// collapsed words (umf == lmf at full height) are listed as [0, f], and the
// left end point follows the distance-to-nearest-crisp-set normalization
// min(u, 1-u), half the linear kernel. Both conventions are recoverable
// from the published rows; the kernel-level fuzziness() keeps the single
// linear kernel for both ends.
FuzzinessInterval presented_fuzziness(const Fou& f, int resolution) {
  FuzzinessInterval fz = fuzziness(f, resolution);
  if (f.lmf_height == 1.0 && f.umf.a == f.lmf.a && f.umf.b == f.lmf.b &&
      f.umf.c == f.lmf.c && f.umf.d == f.lmf.d) {
    return FuzzinessInterval{0.0, fz.f_r};
  }
  return FuzzinessInterval{0.5 * fz.f_l, fz.f_r};
}

double percent_decrease(double base, double other) {
  if (base == 0.0) return 0.0;
  return 100.0 * (base - other) / base;
}

}  // namespace

FuzzinessReport fuzziness_report(const CodebookSet& codebooks,
                                 int resolution) {
  const Codebook& ia = codebooks.at("ia");
  const Codebook& eia = codebooks.at("eia");
  const Codebook& hma = codebooks.at("hma");
  FuzzinessReport rep;
  double sum_eia = 0.0, sum_hma = 0.0;
  int n = 0;
  for (const auto& vocab : ia.criteria) {
    for (const auto& word : vocab.words) {
      FuzzinessRow row;
      row.criterion = vocab.criterion;
      row.word = word;
      row.ia = presented_fuzziness(vocab.fou(word), resolution);
      row.eia = presented_fuzziness(eia.fou(vocab.criterion, word), resolution);
      row.hma = presented_fuzziness(hma.fou(vocab.criterion, word), resolution);
      // decreases follow the published arithmetic over 2-decimal means
      const double m_ia = round_half_away(row.ia.mean());
      row.decrease_eia = percent_decrease(m_ia, round_half_away(row.eia.mean()));
      row.decrease_hma = percent_decrease(m_ia, round_half_away(row.hma.mean()));
      sum_eia += row.decrease_eia;
      sum_hma += row.decrease_hma;
      n += 1;
      rep.rows.push_back(row);
    }
  }
  if (n > 0) {
    rep.avg_decrease_eia = sum_eia / n;
    rep.avg_decrease_hma = sum_hma / n;
  }
  return rep;
}

double GroupReport::failure_ratio_percent() const {
  if (total_fail_group1 == 0) return 0.0;
  return 100.0 * (total_fail_group2 - total_fail_group1) / total_fail_group1;
}

GroupReport group_analysis(const ComparisonTable& table,
                           const PowerTable& power,
                           const SatisfactionReport& satisfaction) {
  GroupReport rep;
  struct Acc {
    int fail1 = 0, fail2 = 0;
    double watts1 = 0.0, watts2 = 0.0;
    double sat1 = 0.0, sat2 = 0.0;
    int n1 = 0, n2 = 0;
  };
  std::map<std::string, Acc> acc;
  auto idx_of = [&](const ComparisonCell& cell, const std::string& engine) {
    return satisfaction.per_user.at(cell.game + "/" +
                                    std::to_string(cell.user) + "/" +
                                    to_string(cell.phase) + "/" + engine);
  };
  for (const auto& cell : table.cells) {
    const int reference = table.pc_reference(cell);
    const bool g1 = cell.equal_weights;
    {
      Acc& a = acc[cell.game + "/pf/" + to_string(cell.phase)];
      (g1 ? a.watts1 : a.watts2) += power.at(cell.game, reference);
      (g1 ? a.sat1 : a.sat2) += idx_of(cell, "pf");
      (g1 ? a.n1 : a.n2) += 1;
    }
    for (const auto& [engine, rec] : cell.engines) {
      Acc& a = acc[cell.game + "/" + engine + "/" + to_string(cell.phase)];
      if (rec.frequency != reference) (g1 ? a.fail1 : a.fail2) += 1;
      (g1 ? a.watts1 : a.watts2) += power.at(cell.game, rec.frequency);
      (g1 ? a.sat1 : a.sat2) += idx_of(cell, engine);
      (g1 ? a.n1 : a.n2) += 1;
    }
  }
  for (const auto& [key, a] : acc) {
    const auto slash1 = key.find('/');
    const auto slash2 = key.find('/', slash1 + 1);
    GroupEntry e;
    e.game = key.substr(0, slash1);
    e.engine = key.substr(slash1 + 1, slash2 - slash1 - 1);
    e.phase = phase_from_string(key.substr(slash2 + 1));
    e.fail_group1 = a.fail1;
    e.fail_group2 = a.fail2;
    e.watts_group1 = a.n1 > 0 ? a.watts1 / a.n1 : 0.0;
    e.watts_group2 = a.n2 > 0 ? a.watts2 / a.n2 : 0.0;
    e.satisfaction_group1 = a.n1 > 0 ? a.sat1 / a.n1 : 0.0;
    e.satisfaction_group2 = a.n2 > 0 ? a.sat2 / a.n2 : 0.0;
    if (e.engine != "pf") {
      rep.total_fail_group1 += a.fail1;
      rep.total_fail_group2 += a.fail2;
    }
    rep.entries.push_back(e);
  }
  return rep;
}

// ---- rendering ------------------------------------------------------------

namespace {

std::string fixed(double v, int decimals = 2, int width = 8) {
  std::ostringstream os;
  os << std::setw(width) << std::fixed << std::setprecision(decimals)
     << round_half_away(v, decimals);
  return os.str();
}

}  // namespace

std::string render_comparison(const ComparisonTable& table,
                              const std::string& pc_variant) {
  std::ostringstream os;
  os << "game,user,phase,pc,ep,sm,2tp,golden_pc,golden_ep,golden_sm,golden_2tp\n";
  for (const auto& cell : table.cells) {
    os << cell.game << ',' << cell.user << ',' << to_string(cell.phase);
    if (cell.pc.empty()) {
      os << ',';
    } else {
      const Recommendation& pc = pc_variant.empty()
                                     ? cell.pc.begin()->second
                                     : cell.pc.at(pc_variant);
      os << ",F" << pc.frequency;
    }
    for (const auto& engine : kEngineColumns) {
      auto it = cell.engines.find(engine);
      if (it == cell.engines.end()) {
        os << ',';
      } else {
        os << ",F" << it->second.frequency;
      }
    }
    for (const auto* engine : {"pc", "ep", "sm", "2tp"}) {
      const auto g = table.golden.at(cell.game, cell.user, cell.phase, engine);
      if (g) {
        os << ",F" << *g;
      } else {
        os << ',';
      }
    }
    os << '\n';
  }
  return os.str();
}

std::string render_mismatch(const MismatchReport& rep) {
  std::ostringstream os;
  os << "game        engine  phase  count  group1  group2  percent\n";
  for (const auto& e : rep.entries) {
    os << std::left << std::setw(12) << e.game << std::setw(8) << e.engine
       << std::setw(7) << to_string(e.phase) << std::right << std::setw(5)
       << e.count << std::setw(8) << e.group1 << std::setw(8) << e.group2
       << std::setw(8) << std::fixed << std::setprecision(0)
       << round_half_away(e.percent, 0) << "%\n";
  }
  os << "totals: group1=" << rep.total_group1
     << " group2=" << rep.total_group2 << '\n';
  return os.str();
}

std::string render_power(const PowerReport& rep,
                         const std::vector<std::string>& games) {
  std::ostringstream os;
  os << "phase  game          pf      ep      sm     2tp\n";
  for (Phase phase : {Phase::Training, Phase::Execution}) {
    for (const auto& game : games) {
      os << std::left << std::setw(7) << to_string(phase) << std::setw(10)
         << game << std::right;
      for (const auto* engine : {"pf", "ep", "sm", "2tp"}) {
        const auto it =
            rep.mean_watts.find(PowerReport::key(game, engine, phase));
        os << (it == rep.mean_watts.end() ? std::string(8, ' ')
                                          : fixed(it->second));
      }
      os << '\n';
    }
  }
  os << "improvement of pf (percent, mean over games):\n";
  for (const auto& [key, v] : rep.improvement) {
    os << "  " << key << " " << fixed(v) << '\n';
  }
  return os.str();
}

std::string render_satisfaction(const SatisfactionReport& rep,
                                const std::vector<std::string>& games) {
  std::ostringstream os;
  os << "phase  game          pf      ep      sm     2tp\n";
  for (Phase phase : {Phase::Training, Phase::Execution}) {
    for (const auto& game : games) {
      os << std::left << std::setw(7) << to_string(phase) << std::setw(10)
         << game << std::right;
      for (const auto* engine : {"pf", "ep", "sm", "2tp"}) {
        const auto it =
            rep.mean_index.find(PowerReport::key(game, engine, phase));
        os << (it == rep.mean_index.end() ? std::string(8, ' ')
                                          : fixed(it->second));
      }
      os << '\n';
    }
  }
  os << "improvement of pf (percent, mean over games):\n";
  for (const auto& [key, v] : rep.improvement) {
    os << "  " << key << " " << fixed(v) << '\n';
  }
  return os.str();
}

std::string render_fuzziness(const FuzzinessReport& rep) {
  std::ostringstream os;
  os << "criterion     word  ia_l  ia_r  ia_m eia_l eia_r eia_m "
        "hma_l hma_r hma_m  dec_eia dec_hma\n";
  for (const auto& r : rep.rows) {
    os << std::left << std::setw(14) << r.criterion << std::setw(4) << r.word
       << std::right;
    for (const FuzzinessInterval* fz : {&r.ia, &r.eia, &r.hma}) {
      os << fixed(fz->f_l, 2, 6) << fixed(fz->f_r, 2, 6)
         << fixed(fz->mean(), 2, 6);
    }
    os << fixed(r.decrease_eia, 2, 9) << fixed(r.decrease_hma, 2, 8) << '\n';
  }
  os << "average decrease: eia=" << fixed(rep.avg_decrease_eia)
     << "%  hma=" << fixed(rep.avg_decrease_hma) << "%\n";
  return os.str();
}

std::string render_groups(const GroupReport& rep) {
  std::ostringstream os;
  os << "game        engine  phase  fail_g1  fail_g2  watts_g1  watts_g2 "
        " sat_g1  sat_g2\n";
  for (const auto& e : rep.entries) {
    os << std::left << std::setw(12) << e.game << std::setw(8) << e.engine
       << std::setw(7) << to_string(e.phase) << std::right << std::setw(7)
       << e.fail_group1 << std::setw(9) << e.fail_group2
       << fixed(e.watts_group1, 2, 10) << fixed(e.watts_group2, 2, 10)
       << fixed(e.satisfaction_group1, 2, 8)
       << fixed(e.satisfaction_group2, 2, 8) << '\n';
  }
  os << "failure totals: group1=" << rep.total_fail_group1
     << " group2=" << rep.total_fail_group2 << " ratio="
     << fixed(rep.failure_ratio_percent()) << "%\n";
  return os.str();
}

std::string render_discrepancies(const AgreementReport& rep) {
  std::ostringstream os;
  os << "game,user,phase,engine,golden,regenerated\n";
  for (const auto& d : rep.discrepancies) {
    os << d.game << ',' << d.user << ',' << to_string(d.phase) << ','
       << d.engine << ",F" << d.golden << ",F" << d.regenerated << '\n';
  }
  return os.str();
}

}  // namespace cww
