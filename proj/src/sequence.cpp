#include "seqdens/sequence.hpp"

#include "seqdens/error.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace seqdens {

PeriodicSequence::PeriodicSequence(const Rational& period, std::vector<WeightedPoint> motif) {
  if (motif.empty()) {
    throw EmptyMotifError("sequence has an empty motif");
  }
  if (period <= 0) {
    throw std::invalid_argument("period must be positive");
  }
  for (auto& p : motif) {
    if (p.radius < 0) {
      throw std::invalid_argument("negative radius");
    }
    p.center /= period;
    p.radius /= period;
    p.center -= Rational(floor_to_int(p.center));  // reduce into [0,1)
  }
  std::sort(motif.begin(), motif.end(), [](const WeightedPoint& a, const WeightedPoint& b) {
    return a.center < b.center || (a.center == b.center && a.radius < b.radius);
  });
  // The motif is a set: an exactly repeated point is one point. Coincident
  // centers with different radii fall through to the overlap check below.
  motif.erase(std::unique(motif.begin(), motif.end()), motif.end());
  points_ = std::move(motif);

  const std::size_t m = points_.size();
  gaps_.resize(m);
  total_length_ = 0;
  for (const auto& p : points_) {
    total_length_ += 2 * p.radius;
  }
  for (std::size_t i = 0; i < m; ++i) {
    const WeightedPoint& cur = points_[i];
    const WeightedPoint& prev = points_[(i + m - 1) % m];
    Rational prev_right = prev.center + prev.radius;
    if (i == 0) {
      prev_right -= 1;
    }
    gaps_[i] = (cur.center - cur.radius) - prev_right;
    if (gaps_[i] < 0) {
      throw OverlapError("intervals " + std::to_string((i + m - 1) % m) + " and " +
                         std::to_string(i) + " overlap (gap " + to_fraction_string(gaps_[i]) +
                         ")");
    }
  }
}

bool PeriodicSequence::all_radii_zero() const {
  return std::all_of(points_.begin(), points_.end(),
                     [](const WeightedPoint& p) { return p.radius == 0; });
}

PeriodicSequence PeriodicSequence::with_neighbor_radii() const {
  if (!all_radii_zero()) {
    throw std::invalid_argument("neighbor radii are defined for zero-radius sequences");
  }
  const std::size_t m = points_.size();
  std::vector<WeightedPoint> out = points_;
  if (m == 1) {
    out[0].radius = Rational(1, 2);  // the closest neighbor is the point's own translate
  } else {
    for (std::size_t i = 0; i < m; ++i) {
      Rational to_prev = points_[i].center - points_[(i + m - 1) % m].center;
      Rational to_next = points_[(i + 1) % m].center - points_[i].center;
      if (i == 0) to_prev += 1;
      if (i + 1 == m) to_next += 1;
      out[i].radius = std::min(to_prev, to_next) / 2;
    }
  }
  return PeriodicSequence(1, std::move(out));
}

PeriodicSequence PeriodicSequence::translated(const Rational& shift) const {
  std::vector<WeightedPoint> out = points_;
  for (auto& p : out) {
    p.center += shift;
  }
  return PeriodicSequence(1, std::move(out));
}

PeriodicSequence PeriodicSequence::reflected() const {
  std::vector<WeightedPoint> out = points_;
  for (auto& p : out) {
    p.center = -p.center;
  }
  return PeriodicSequence(1, std::move(out));
}

}  // namespace seqdens
