#include "cww/codebook.hpp"

#include <algorithm>
#include <cmath>
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

double parse_num(const std::string& s, const std::string& where) {
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw CodebookError(where + ": not a number: '" + s + "'");
  }
}

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

const Fou& CriterionVocabulary::fou(const std::string& word) const {
  auto it = fous.find(word);
  if (it == fous.end()) {
    throw CodebookError("word not in codebook: '" + word + "' (criterion " +
                        criterion + ")");
  }
  return it->second;
}

int CriterionVocabulary::rank(const std::string& word) const {
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words[i] == word) return static_cast<int>(i) + 1;
  }
  return -1;
}

const CriterionVocabulary& Codebook::vocabulary(
    const std::string& criterion) const {
  for (const auto& c : criteria) {
    if (c.criterion == criterion) return c;
  }
  throw CodebookError("no such criterion: '" + criterion + "'");
}

bool Codebook::has_vocabulary(const std::string& criterion) const {
  return std::any_of(criteria.begin(), criteria.end(),
                     [&](const auto& c) { return c.criterion == criterion; });
}

const Fou& Codebook::fou(const std::string& criterion,
                         const std::string& word) const {
  return vocabulary(criterion).fou(word);
}

Codebook parse_codebook(std::istream& in, const std::string& name) {
  Codebook cb;
  std::string line;
  int lineno = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {  // header row required
      header_seen = true;
      continue;
    }
    const std::string where = name + ":" + std::to_string(lineno);
    auto cells = split_csv(line);
    if (cells.size() != 15) {
      throw CodebookError(where + ": expected 15 columns, got " +
                          std::to_string(cells.size()));
    }
    Fou f;
    f.umf = Trapezoid{parse_num(cells[3], where), parse_num(cells[4], where),
                      parse_num(cells[5], where), parse_num(cells[6], where)};
    f.lmf = Trapezoid{parse_num(cells[7], where), parse_num(cells[8], where),
                      parse_num(cells[9], where), parse_num(cells[10], where)};
    f.lmf_height = parse_num(cells[11], where);
    f.centroid = Interval{parse_num(cells[12], where),
                          parse_num(cells[13], where)};
    f.center = parse_num(cells[14], where);
    if (!f.umf.ordered() || !f.lmf.ordered()) {
      throw CodebookError(where + ": unordered knots");
    }
    if (f.umf.a < kScaleMin || f.umf.d > kScaleMax || f.lmf.a < kScaleMin ||
        f.lmf.d > kScaleMax) {
      throw CodebookError(where + ": knot outside the 0-10 scale");
    }
    if (!(f.lmf_height > 0.0 && f.lmf_height <= 1.0)) {
      throw CodebookError(where + ": lmf height outside (0,1]");
    }
    const std::string& criterion = cells[0];
    const std::string& word = cells[1];
    const int rank = static_cast<int>(parse_num(cells[2], where));

    CriterionVocabulary* vocab = nullptr;
    for (auto& c : cb.criteria) {
      if (c.criterion == criterion) vocab = &c;
    }
    if (vocab == nullptr) {
      cb.criteria.push_back(CriterionVocabulary{criterion, {}, {}});
      vocab = &cb.criteria.back();
    }
    if (vocab->fous.count(word) != 0) {
      throw CodebookError(where + ": duplicate word '" + word + "'");
    }
    if (rank != static_cast<int>(vocab->words.size()) + 1) {
      throw CodebookError(where + ": rank " + fmt(rank) +
                          " out of order (expected " +
                          std::to_string(vocab->words.size() + 1) + ")");
    }
    vocab->words.push_back(word);
    vocab->fous.emplace(word, f);
  }
  for (const auto& c : cb.criteria) {
    if (c.words.size() != 5) {
      throw CodebookError(name + ": criterion '" + c.criterion + "' has " +
                          std::to_string(c.words.size()) +
                          " words, expected 5");
    }
  }
  if (cb.criteria.empty()) throw CodebookError(name + ": no rows");
  return cb;
}

Codebook parse_codebook_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CodebookError("cannot open codebook file: " + path);
  return parse_codebook(in, path);
}

std::string serialize_codebook(const Codebook& cb) {
  std::ostringstream os;
  os << "criterion,word,rank,umf_a,umf_b,umf_c,umf_d,"
        "lmf_a,lmf_b,lmf_c,lmf_d,lmf_h,centroid_l,centroid_r,center\n";
  for (const auto& c : cb.criteria) {
    for (std::size_t i = 0; i < c.words.size(); ++i) {
      const Fou& f = c.fous.at(c.words[i]);
      os << c.criterion << ',' << c.words[i] << ',' << (i + 1) << ','
         << fmt(f.umf.a) << ',' << fmt(f.umf.b) << ',' << fmt(f.umf.c) << ','
         << fmt(f.umf.d) << ',' << fmt(f.lmf.a) << ',' << fmt(f.lmf.b) << ','
         << fmt(f.lmf.c) << ',' << fmt(f.lmf.d) << ',' << fmt(f.lmf_height)
         << ',' << fmt(f.centroid.lo) << ',' << fmt(f.centroid.hi) << ','
         << fmt(f.center) << '\n';
    }
  }
  return os.str();
}

bool ValidationReport::all_ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const WordCheck& c) { return c.ok(); });
}

int ValidationReport::failures() const {
  int n = 0;
  for (const auto& c : checks) {
    if (!c.ok()) ++n;
  }
  return n;
}

ValidationReport validate_codebook(const Codebook& cb, int resolution) {
  ValidationReport rep;
  for (const auto& c : cb.criteria) {
    for (const auto& w : c.words) {
      const Fou& f = c.fous.at(w);
      WordCheck chk;
      chk.criterion = c.criterion;
      chk.word = w;
      chk.knots_ordered = f.umf.ordered() && f.lmf.ordered();
      chk.lmf_contained = f.contained(resolution);
      chk.centroid_in_support =
          f.centroid.lo <= f.centroid.hi && f.centroid.lo >= f.umf.a - 1e-9 &&
          f.centroid.hi <= f.umf.d + 1e-9 && f.centroid.lo <= f.center + 1e-9 &&
          f.center <= f.centroid.hi + 1e-9;
      if (chk.knots_ordered && f.umf.d > f.umf.a) {
        const Interval rec = km_centroid(f, resolution);
        chk.centroid_l_dev = std::fabs(rec.lo - f.centroid.lo);
        chk.centroid_r_dev = std::fabs(rec.hi - f.centroid.hi);
      }
      rep.checks.push_back(chk);
    }
  }
  return rep;
}

namespace {

// splitmix64; stable across platforms, unlike the distributions in <random>
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  double uniform(double lo, double hi) {
    const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }
};

}  // namespace

std::vector<std::pair<double, double>> person_fou_sample(const IntervalPair& p,
                                                         int n,
                                                         std::uint64_t seed) {
  if (n <= 0) throw std::invalid_argument("person_fou_sample: n must be positive");
  auto in_scale = [](const Interval& iv) {
    return iv.lo <= iv.hi && iv.lo >= kScaleMin && iv.hi <= kScaleMax;
  };
  if (!in_scale(p.left) || !in_scale(p.right)) {
    throw std::invalid_argument("person_fou_sample: intervals outside the 0-10 scale");
  }
  SplitMix64 rng(seed);
  std::vector<std::pair<double, double>> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    double L = rng.uniform(p.left.lo, p.left.hi);
    double R = rng.uniform(p.right.lo, p.right.hi);
    int attempts = 0;
    while (L >= R) {  // a data interval needs positive width
      if (++attempts > 1000) {
        throw std::runtime_error(
            "person_fou_sample: exhausted resampling attempts (L >= R)");
      }
      L = rng.uniform(p.left.lo, p.left.hi);
      R = rng.uniform(p.right.lo, p.right.hi);
    }
    out.emplace_back(L, R);
  }
  return out;
}

TableBackedEncoder::TableBackedEncoder(const Codebook& cb,
                                       std::string criterion)
    : cb_(cb), criterion_(std::move(criterion)) {}

Fou TableBackedEncoder::encode(
    const std::string& word,
    std::span<const std::pair<double, double>> /*intervals*/) {
  return cb_.fou(criterion_, word);
}

}  // namespace cww
