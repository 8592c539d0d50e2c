#pragma once

#include "seqdens/rational.hpp"

#include <cstddef>
#include <vector>

namespace seqdens {

// One motif point: the closed interval [center - radius, center + radius].
struct WeightedPoint {
  Rational center;
  Rational radius;

  bool operator==(const WeightedPoint&) const = default;
};

// Cyclic gaps between successive intervals, plus the combined interval length.
// gaps[i] lies immediately to the left of interval i; gaps and total_length
// add up to 1 for a normalized sequence.
struct GapVector {
  std::vector<Rational> gaps;
  Rational total_length;
};

// A periodic sequence of pairwise disjoint closed intervals on the line,
// normalized to period 1: centers sorted into [0,1), radii >= 0, and every
// cyclic gap >= 0 (touching intervals are accepted, overlapping ones are
// rejected). Immutable after construction.
class PeriodicSequence {
public:
  // Normalizes: scales period to 1, reduces centers mod 1, sorts, collapses
  // exact duplicate points. Throws EmptyMotifError, OverlapError, or
  // std::invalid_argument (non-positive period, negative radius).
  PeriodicSequence(const Rational& period, std::vector<WeightedPoint> motif);

  std::size_t size() const { return points_.size(); }
  const std::vector<WeightedPoint>& motif() const { return points_; }
  const WeightedPoint& point(std::size_t i) const { return points_.at(i); }

  GapVector gaps() const { return {gaps_, total_length_}; }
  const std::vector<Rational>& gap_list() const { return gaps_; }
  const Rational& total_length() const { return total_length_; }

  bool all_radii_zero() const;

  // Every point gets half the cyclic distance to its nearest neighboring
  // center as its radius. Requires all radii zero.
  PeriodicSequence with_neighbor_radii() const;

  PeriodicSequence translated(const Rational& shift) const;
  PeriodicSequence reflected() const;

  bool operator==(const PeriodicSequence& other) const { return points_ == other.points_; }

private:
  std::vector<WeightedPoint> points_;
  std::vector<Rational> gaps_;
  Rational total_length_;
};

}  // namespace seqdens
