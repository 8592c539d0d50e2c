#pragma once

#include "seqdens/rational.hpp"

#include <span>
#include <vector>

namespace seqdens {

// Continuous piecewise-linear function on [0, inf) with rational corners,
// constant after the last corner. Canonical form: the first stored corner is
// (0, value at 0), corner abscissas are strictly increasing, the gradient
// changes at every later corner, and values are >= 0 everywhere. Two canonical
// functions are equal as functions iff their corner lists are identical.
class PiecewiseLinear {
public:
  struct Corner {
    Rational t;
    Rational v;

    bool operator==(const Corner&) const = default;
  };

  PiecewiseLinear() : pts_{{Rational(0), Rational(0)}} {}

  static PiecewiseLinear zero() { return PiecewiseLinear(); }
  static PiecewiseLinear constant(const Rational& value);

  // Builds the canonical form from a start value and corners with
  // non-decreasing abscissas: exact duplicates are collapsed, corners where
  // the gradient does not change are dropped. Throws std::invalid_argument on
  // decreasing abscissas, two values at one abscissa, or negative data.
  static PiecewiseLinear from_corners(const Rational& start_value, std::vector<Corner> corners);

  // Exact interpolation; returns the tail constant past the last corner.
  // Throws std::invalid_argument for t < 0.
  Rational value_at(const Rational& t) const;

  // Canonical corners, first entry always (0, start_value()).
  const std::vector<Corner>& corner_points() const { return pts_; }
  const Rational& start_value() const { return pts_.front().v; }
  const Rational& tail_value() const { return pts_.back().v; }
  const Rational& support_end() const { return pts_.back().t; }
  bool is_zero() const { return pts_.size() == 1 && pts_[0].v == 0; }

  // A maximal interval on which the function attains a local maximum: the
  // gradient turns from > 0 to < 0, with any flat run in between reported once
  // as [t_begin, t_end]. The left domain boundary acts as a rise, so a
  // function that starts by falling has a maximum at t = 0. A flat tail is
  // never reported (it is not followed by a fall).
  struct MaxPlateau {
    Rational t_begin;
    Rational t_end;
    Rational value;

    bool operator==(const MaxPlateau&) const = default;
  };
  std::vector<MaxPlateau> local_maxima() const;

  bool operator==(const PiecewiseLinear&) const = default;

private:
  std::vector<Corner> pts_;
};

// Exact pointwise sum. Gathers every gradient change as an event, sorts, and
// sweeps once; large inputs are split into chunks whose partial sums are
// combined, so the result is identical for any chunking or thread count.
PiecewiseLinear sum(std::span<const PiecewiseLinear> fs);
PiecewiseLinear sum(const PiecewiseLinear& a, const PiecewiseLinear& b);

}  // namespace seqdens
