#pragma once

#include "seqdens/piecewise_linear.hpp"
#include "seqdens/sequence.hpp"

#include <cstddef>
#include <vector>

namespace seqdens {

// Contribution of the window of `fold` consecutive intervals starting at
// motif index `index` (1-based, cyclic) to the fold-th density. Determined by
// the tuple (g, s, g2) with g <= g2: the window's k-fold intersection appears
// at t = s/2, grows with gradient 2 up to height g, stays there while one side
// shrinks as the other grows, and is fully covered at t = (g+s+g2)/2.
//
// For fold == 1 the window is a single interval that already covers 2*r at
// t = 0; this is encoded by s = -2*r, and the materialized function starts at
// value -s instead of at a corner with negative abscissa.
class Trapezoid {
public:
  Trapezoid(int fold, std::size_t index, Rational rise, Rational onset_span, Rational fall);

  int fold() const { return fold_; }
  std::size_t index() const { return index_; }

  const Rational& rise_span() const { return g_; }      // g
  const Rational& onset_span() const { return s_; }     // s
  const Rational& fall_span() const { return g2_; }     // g'
  const Rational& height() const { return g_; }

  Rational onset() const { return s_ / 2; }
  Rational rise_end() const { return (g_ + s_) / 2; }
  Rational fall_start() const { return (s_ + g2_) / 2; }
  Rational end() const { return (g_ + s_ + g2_) / 2; }

  PiecewiseLinear to_function() const;

private:
  int fold_;
  std::size_t index_;
  Rational g_, s_, g2_;
};

// The fraction of the unit cell not covered by any grown interval: starts at
// (0, 1-l) and loses one gradient unit as each sorted gap closes.
PiecewiseLinear zero_fold_density(const PeriodicSequence& s);

// The window trapezoid for fold >= 1 and 1 <= index <= motif size. Window
// indices past the motif wrap around the period.
Trapezoid trapezoid(const PeriodicSequence& s, int fold, std::size_t index);

// The fold-th density function, for any fold >= 0, built in closed form as
// the sum of the motif's window trapezoids (fold >= 1) or directly from the
// sorted gaps (fold == 0). Per-window construction runs in parallel.
PiecewiseLinear density(const PeriodicSequence& s, int fold);

// Builds the fold-th density (fold >= motif size) by half-shifting the
// density of fold - m onto [1/2, inf) and delegating [0, 1/2) to the direct
// construction. Exists as a cross-check of the index periodicity; equal to
// density(s, fold) whenever that periodicity holds.
PiecewiseLinear density_via_periodicity(const PeriodicSequence& s, int fold);

// The densities for folds 0..max_fold of one sequence. Densities of higher
// folds are recovered through the half-shift periodicity instead of stored.
class DensityFingerprint {
public:
  DensityFingerprint(PeriodicSequence sequence, std::vector<PiecewiseLinear> functions);

  const PeriodicSequence& sequence() const { return sequence_; }
  const std::vector<PiecewiseLinear>& functions() const { return functions_; }
  std::size_t motif_size() const { return sequence_.size(); }
  int max_fold() const { return static_cast<int>(functions_.size()) - 1; }

  // Value of the fold-th density at t, reducing fold by the motif size and t
  // by 1/2 while the stored range does not reach; falls back to the direct
  // construction when t is too small to reduce further.
  Rational value(int fold, const Rational& t) const;

  bool operator==(const DensityFingerprint&) const = default;

private:
  PeriodicSequence sequence_;
  std::vector<PiecewiseLinear> functions_;
};

DensityFingerprint fingerprint(const PeriodicSequence& s, int max_fold);
DensityFingerprint fingerprint(const PeriodicSequence& s);  // max_fold = motif size

// Accumulated densities: partial sums over folds 1..k for k = 1..max_fold.
// The zero fold is excluded, so entry k-1 is the fraction covered by between
// 1 and k intervals.
std::vector<PiecewiseLinear> densigram(const DensityFingerprint& fp);

}  // namespace seqdens
