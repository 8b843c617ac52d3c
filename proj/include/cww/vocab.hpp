#pragma once

#include <array>
#include <string>

#include "cww/tri.hpp"

namespace cww {

/// The five uniformly placed triangular terms shared by every 5-word
/// vocabulary on the normalized scale, indexed by rank 1..5. The distance
/// vector d1..d5 and the satisfaction terms use the same placement.
TriTuple uniform_tri(int rank);

/// Ordered labels of one 5-term vocabulary; rank == index + 1.
struct OrdinalTermSet {
  std::string name;
  std::array<std::string, 5> labels;

  /// 1-based rank; throws naming the vocabulary and word when unknown.
  int rank(const std::string& word) const;
  const std::string& label(int rank) const;
};

/// Vocabularies of the feedback corpora, in criterion order.
const std::array<OrdinalTermSet, 4>& criterion_terms();
const OrdinalTermSet& satisfaction_terms();
const OrdinalTermSet& weight_terms();

}  // namespace cww
