#pragma once

#include "seqdens/piecewise_linear.hpp"
#include "seqdens/sequence.hpp"

#include <span>
#include <vector>

namespace seqdens {

// Exact fold-count profile of one unit cell at growth radius t: lengths()[k]
// is the combined length of the region covered by exactly k grown intervals.
// The lengths add up to 1.
class CoverageProfile {
public:
  CoverageProfile(Rational t, std::vector<Rational> lengths);

  const Rational& t() const { return t_; }
  const std::vector<Rational>& lengths() const { return lengths_; }
  std::size_t max_fold() const { return lengths_.empty() ? 0 : lengths_.size() - 1; }

  // Zero beyond the stored range.
  Rational length(std::size_t fold) const {
    return fold < lengths_.size() ? lengths_[fold] : Rational(0);
  }

private:
  Rational t_;
  std::vector<Rational> lengths_;
};

// Brute-force ground truth, independent of the closed-form constructions:
// enumerates every periodic copy of every interval that can reach the unit
// cell (|shift| <= ceil(2t) + 1, a safe over-approximation), clips to [0,1],
// and sweeps the endpoints exactly. Coincident endpoints are merged, so
// tangency radii contribute no spurious cells.
CoverageProfile coverage(const PeriodicSequence& s, const Rational& t);

struct SampleMismatch {
  Rational t;
  Rational claimed;
  Rational actual;
};

// Checks a claimed fold-th density against the sweep at every sample point;
// empty result means agreement. Samples are processed in parallel.
std::vector<SampleMismatch> sample_check(const PeriodicSequence& s, const PiecewiseLinear& f,
                                         std::size_t fold, std::span<const Rational> samples);

}  // namespace seqdens
