#include "cww/datasets.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace cww {

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

int parse_int(const std::string& s, const std::string& where) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw DatasetError(where + ": not an integer: '" + s + "'");
  }
}

double parse_double(const std::string& s, const std::string& where) {
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw DatasetError(where + ": not a number: '" + s + "'");
  }
}

int parse_frequency(const std::string& s, const std::string& where) {
  if (s.size() == 2 && s[0] == 'F') {
    int f = s[1] - '0';
    if (f >= 1 && f <= kNumFrequencies) return f;
  }
  throw DatasetError(where + ": bad frequency '" + s + "'");
}

}  // namespace

std::string to_string(Phase p) {
  return p == Phase::Training ? "T" : "E";
}

Phase phase_from_string(const std::string& s) {
  if (s == "T" || s == "Training") return Phase::Training;
  if (s == "E" || s == "Execution") return Phase::Execution;
  throw DatasetError("bad phase '" + s + "'");
}

std::vector<std::string> Corpus::games() const {
  std::vector<std::string> out;
  for (const auto& r : records) {
    if (std::find(out.begin(), out.end(), r.game) == out.end()) {
      out.push_back(r.game);
    }
  }
  return out;
}

const FeedbackRecord& Corpus::record(int user, const std::string& game,
                                     Phase phase, int frequency) const {
  for (const auto& r : records) {
    if (r.user == user && r.game == game && r.phase == phase &&
        r.frequency == frequency) {
      return r;
    }
  }
  throw DatasetError("missing record: user " + std::to_string(user) + ", game " +
                     game + ", phase " + to_string(phase) + ", F" +
                     std::to_string(frequency));
}

const WeightAssignment& Corpus::weight(int user, const std::string& game) const {
  for (const auto& w : weights) {
    if (w.user == user && w.game == game) return w;
  }
  throw DatasetError("missing weights: user " + std::to_string(user) +
                     ", game " + game);
}

Corpus load_feedback(std::istream& in, const std::string& name,
                     CorpusMode mode) {
  Corpus corpus;
  std::string line;
  int lineno = 0;
  bool header_seen = false;
  const std::size_t want =
      mode == CorpusMode::Multi ? 8u : 12u;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    const std::string where = name + ":" + std::to_string(lineno);
    auto cells = split_csv(line);
    if (cells.size() != want) {
      throw DatasetError(where + ": expected " + std::to_string(want) +
                         " columns, got " + std::to_string(cells.size()));
    }
    FeedbackRecord rec;
    rec.user = parse_int(cells[0], where);
    rec.game = cells[1];
    rec.phase = phase_from_string(cells[2]);
    rec.frequency = parse_frequency(cells[3], where);
    if (rec.user < 1 || rec.user > kNumUsers) {
      throw DatasetError(where + ": user id out of range");
    }
    for (int i = 0; i < 4; ++i) {
      if (cells[4 + i].empty()) {
        throw DatasetError(where + ": missing word for " +
                           std::string(kCriteria[i]) + " (user " +
                           std::to_string(rec.user) + ", game " + rec.game +
                           ", phase " + cells[2] + ", F" +
                           std::to_string(rec.frequency) + ")");
      }
      rec.words[i] = cells[4 + i];
    }
    corpus.records.push_back(rec);

    if (mode == CorpusMode::Single) {
      WeightAssignment w;
      w.user = rec.user;
      w.game = rec.game;
      if (cells[8] == "Equal") {
        w.equal = true;
      } else {
        w.equal = false;
        for (int i = 0; i < 4; ++i) {
          if (cells[8 + i].empty()) {
            throw DatasetError(where + ": missing weight word for " +
                               std::string(kCriteria[i]));
          }
          w.words[i] = cells[8 + i];
        }
      }
      bool known = false;
      for (const auto& prev : corpus.weights) {
        if (prev.user == w.user && prev.game == w.game) {
          if (prev.equal != w.equal || (!w.equal && prev.words != w.words)) {
            throw DatasetError(where + ": conflicting weights for user " +
                               std::to_string(w.user));
          }
          known = true;
        }
      }
      if (!known) corpus.weights.push_back(w);
    }
  }
  if (corpus.records.empty()) throw DatasetError(name + ": no records");
  return corpus;
}

Corpus load_feedback_file(const std::string& path, CorpusMode mode) {
  std::ifstream in(path);
  if (!in) throw DatasetError("cannot open corpus file: " + path);
  return load_feedback(in, path, mode);
}

std::vector<WeightAssignment> load_weights_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DatasetError("cannot open weights file: " + path);
  std::vector<WeightAssignment> out;
  std::string line;
  int lineno = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    const std::string where = path + ":" + std::to_string(lineno);
    auto cells = split_csv(line);
    if (cells.size() != 6 && !(cells.size() == 3 && cells[2] == "Equal")) {
      throw DatasetError(where + ": expected user,game,w1,w2,w3,w4 or user,game,Equal");
    }
    WeightAssignment w;
    w.user = parse_int(cells[0], where);
    w.game = cells[1];
    if (cells[2] == "Equal") {
      w.equal = true;
    } else {
      w.equal = false;
      for (int i = 0; i < 4; ++i) w.words[i] = cells[2 + i];
    }
    out.push_back(w);
  }
  return out;
}

std::string serialize_corpus(const Corpus& corpus, CorpusMode mode) {
  std::ostringstream os;
  os << "user,game,phase,frequency,battery,app_rating,app_type,time_spent";
  if (mode == CorpusMode::Single) os << ",w_battery,w_app,w_type,w_time";
  os << '\n';
  for (const auto& r : corpus.records) {
    os << r.user << ',' << r.game << ',' << to_string(r.phase) << ",F"
       << r.frequency;
    for (const auto& w : r.words) os << ',' << w;
    if (mode == CorpusMode::Single) {
      const WeightAssignment& w = corpus.weight(r.user, r.game);
      if (w.equal) {
        os << ",Equal,,,";
      } else {
        for (const auto& ww : w.words) os << ',' << ww;
      }
    }
    os << '\n';
  }
  return os.str();
}

double PowerTable::at(const std::string& game, int frequency) const {
  auto it = watts.find(game);
  if (it == watts.end()) throw DatasetError("no power data for game " + game);
  if (frequency < 1 || frequency > kNumFrequencies) {
    throw DatasetError("bad frequency " + std::to_string(frequency));
  }
  return it->second[frequency - 1];
}

PowerTable load_power(std::istream& in, const std::string& name) {
  PowerTable table;
  std::map<std::string, std::array<bool, kNumFrequencies>> seen;
  std::string line;
  int lineno = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    const std::string where = name + ":" + std::to_string(lineno);
    auto cells = split_csv(line);
    if (cells.size() != 3) throw DatasetError(where + ": expected game,frequency,watts");
    const int f = parse_frequency(cells[1], where);
    table.watts[cells[0]][f - 1] = parse_double(cells[2], where);
    seen[cells[0]][f - 1] = true;
  }
  if (table.watts.empty()) throw DatasetError(name + ": no rows");
  for (const auto& [game, present] : seen) {
    for (int f = 0; f < kNumFrequencies; ++f) {
      if (!present[f]) {
        throw DatasetError(name + ": game " + game + " missing F" +
                           std::to_string(f + 1));
      }
    }
    const auto& w = table.watts[game];
    for (int f = 1; f < kNumFrequencies; ++f) {
      if (!(w[f] > w[f - 1])) {
        throw DatasetError(name + ": power not increasing for game " + game +
                           " at F" + std::to_string(f + 1));
      }
    }
  }
  return table;
}

PowerTable load_power_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DatasetError("cannot open power file: " + path);
  return load_power(in, path);
}

}  // namespace cww
