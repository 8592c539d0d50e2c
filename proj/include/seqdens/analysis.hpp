#pragma once

#include "seqdens/rational.hpp"
#include "seqdens/sequence.hpp"

#include <optional>

namespace seqdens {

// Outcome of a fingerprint comparison. When the fingerprints differ,
// first_differing_fold is the smallest fold whose densities differ and
// witness_t an abscissa where their values disagree.
struct ComparisonReport {
  bool equal = false;
  int compared_max_fold = 0;
  std::optional<int> first_differing_fold;
  std::optional<Rational> witness_t;
  std::optional<Rational> value_left;
  std::optional<Rational> value_right;
};

// Compares the densities of both sequences exactly for every fold up to the
// larger motif size. By the half-shift periodicity this range is a
// conservative superset of the folds that can carry new information.
ComparisonReport fingerprints_equal(const PeriodicSequence& s, const PeriodicSequence& q);

// Whether q is a translate of s or of its mirror image. Decided exactly by
// trying the motif-size many alignments that map the first center of s (or of
// reflected s) onto each center of q. Different motif sizes compare false.
bool isometric(const PeriodicSequence& s, const PeriodicSequence& q);

// The zero-radius family with gap word 2, 1^i, 2, 1^(m-i-2) over period m+2,
// normalized: every member has the same gap multiset (m-2 unit gaps and two
// double gaps), so all share the zero-fold density, while most pairs are not
// isometric. Valid for 1 <= i <= m-3.
PeriodicSequence smi_family(int m, int i);

}  // namespace seqdens
