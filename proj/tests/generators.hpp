#pragma once

#include "seqdens/piecewise_linear.hpp"
#include "seqdens/rational.hpp"
#include "seqdens/sequence.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

namespace seqdens::testgen {

using Engine = std::mt19937_64;

inline long uniform(Engine& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

// Random rational in [0, 1) with denominator <= max_den.
inline Rational random_unit_rational(Engine& rng, long max_den) {
  const long den = uniform(rng, 1, max_den);
  return {uniform(rng, 0, den - 1), den};
}

// Random rational in [0, hi] with denominator <= max_den.
inline Rational random_rational_up_to(Engine& rng, long hi, long max_den) {
  const long den = uniform(rng, 1, max_den);
  return {uniform(rng, 0, hi * den), den};
}

// Random normalized sequence: up to max_m distinct centers with denominators
// <= max_den, and radii (zero about a third of the time) small enough that
// the intervals stay disjoint.
inline PeriodicSequence random_sequence(Engine& rng, int max_m = 8, long max_den = 64) {
  const int m = static_cast<int>(uniform(rng, 1, max_m));
  std::set<Rational> centers;
  while (static_cast<int>(centers.size()) < m) {
    centers.insert(random_unit_rational(rng, max_den));
  }
  std::vector<Rational> cs(centers.begin(), centers.end());

  std::vector<WeightedPoint> motif;
  for (int i = 0; i < m; ++i) {
    Rational to_prev = cs[i] - cs[(i + m - 1) % m];
    Rational to_next = cs[(i + 1) % m] - cs[i];
    if (i == 0) to_prev += 1;
    if (i + 1 == m) to_next += 1;
    const Rational slack = std::min(to_prev, to_next) / 2;  // guarantees disjointness
    Rational radius = 0;
    if (uniform(rng, 0, 2) != 0) {
      const long cap = floor_to_int(slack * max_den).convert_to<long>();
      radius = Rational(uniform(rng, 0, cap), max_den);
    }
    motif.push_back({cs[i], radius});
  }
  return PeriodicSequence(1, std::move(motif));
}

inline std::vector<Rational> random_samples(Engine& rng, int count, long hi, long max_den) {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    out.push_back(random_rational_up_to(rng, hi, max_den));
  }
  return out;
}

// Random canonical non-negative piecewise-linear function.
inline PiecewiseLinear random_function(Engine& rng, int max_corners = 8, long max_den = 32) {
  const int n = static_cast<int>(uniform(rng, 0, max_corners));
  std::set<Rational> ts;
  while (static_cast<int>(ts.size()) < n) {
    const Rational t = random_rational_up_to(rng, 3, max_den);
    if (t > 0) ts.insert(t);
  }
  std::vector<PiecewiseLinear::Corner> corners;
  for (const auto& t : ts) {
    corners.push_back({t, random_rational_up_to(rng, 2, max_den)});
  }
  return PiecewiseLinear::from_corners(random_rational_up_to(rng, 2, max_den),
                                       std::move(corners));
}

}  // namespace seqdens::testgen
