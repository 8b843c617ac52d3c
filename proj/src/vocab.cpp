#include "cww/vocab.hpp"

#include <stdexcept>

namespace cww {

TriTuple uniform_tri(int rank) {
  switch (rank) {
    case 1: return TriTuple{0.00, 0.00, 0.25};
    case 2: return TriTuple{0.00, 0.25, 0.50};
    case 3: return TriTuple{0.25, 0.50, 0.75};
    case 4: return TriTuple{0.50, 0.75, 1.00};
    case 5: return TriTuple{0.75, 1.00, 1.00};
    default: throw std::out_of_range("uniform_tri: rank must be 1..5");
  }
}

int OrdinalTermSet::rank(const std::string& word) const {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == word) return static_cast<int>(i) + 1;
  }
  throw std::invalid_argument("unknown word '" + word + "' for vocabulary '" +
                              name + "'");
}

const std::string& OrdinalTermSet::label(int rank) const {
  if (rank < 1 || rank > 5) {
    throw std::out_of_range("term rank must be 1..5");
  }
  return labels[rank - 1];
}

const std::array<OrdinalTermSet, 4>& criterion_terms() {
  static const std::array<OrdinalTermSet, 4> sets = {{
      {"battery_life", {"BVL", "BL", "BM", "BH", "BEH"}},
      {"app_ratings", {"AVS", "AS", "AM", "AF", "AEF"}},
      {"app_type", {"AU", "SI", "FI", "MI", "AI"}},
      {"time_spent", {"VL", "S", "M", "L", "VLA"}},
  }};
  return sets;
}

const OrdinalTermSet& satisfaction_terms() {
  static const OrdinalTermSet set = {"satisfaction",
                                     {"NS", "SOS", "SS", "VS", "OS"}};
  return set;
}

const OrdinalTermSet& weight_terms() {
  static const OrdinalTermSet set = {"weights", {"U", "MLU", "I", "MLI", "VI"}};
  return set;
}

}  // namespace cww
