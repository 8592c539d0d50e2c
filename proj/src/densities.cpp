#include "seqdens/densities.hpp"

#include <omp.h>

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>

namespace seqdens {

Trapezoid::Trapezoid(int fold, std::size_t index, Rational rise, Rational onset_span,
                     Rational fall)
    : fold_(fold), index_(index), g_(std::move(rise)), s_(std::move(onset_span)),
      g2_(std::move(fall)) {
  assert(g_ >= 0 && g_ <= g2_);
  assert(g_ + s_ >= 0);
}

PiecewiseLinear Trapezoid::to_function() const {
  std::vector<PiecewiseLinear::Corner> corners;
  Rational start = 0;
  if (s_ >= 0) {
    corners.push_back({onset(), Rational(0)});
  } else {
    start = -s_;  // the window already covers -s at t = 0
  }
  const Rational h = height();
  for (auto&& c : {PiecewiseLinear::Corner{rise_end(), h},
                   PiecewiseLinear::Corner{fall_start(), h},
                   PiecewiseLinear::Corner{end(), Rational(0)}}) {
    if (c.t > 0) {
      corners.push_back(c);
    }
  }
  return PiecewiseLinear::from_corners(start, std::move(corners));
}

PiecewiseLinear zero_fold_density(const PeriodicSequence& s) {
  std::vector<Rational> gaps = s.gap_list();
  std::sort(gaps.begin(), gaps.end());
  const std::size_t m = gaps.size();
  const Rational start = 1 - s.total_length();

  std::vector<PiecewiseLinear::Corner> corners;
  corners.reserve(m);
  Rational closed = 0;  // combined length of the gaps already fully covered
  for (std::size_t i = 0; i < m; ++i) {
    corners.push_back({gaps[i] / 2, start - closed - Rational(m - i) * gaps[i]});
    closed += gaps[i];
  }
  return PiecewiseLinear::from_corners(start, std::move(corners));
}

namespace {

// Gap and radius window sums with periodic wrap-around, via prefix sums.
struct WindowSums {
  std::size_t m;
  std::vector<Rational> gap_prefix;     // gap_prefix[i] = sum of gaps[0..i)
  std::vector<Rational> radius_prefix;  // radius_prefix[i] = sum of radii[0..i)

  explicit WindowSums(const PeriodicSequence& s) : m(s.size()) {
    gap_prefix.resize(m + 1);
    radius_prefix.resize(m + 1);
    gap_prefix[0] = 0;
    radius_prefix[0] = 0;
    for (std::size_t i = 0; i < m; ++i) {
      gap_prefix[i + 1] = gap_prefix[i] + s.gap_list()[i];
      radius_prefix[i + 1] = radius_prefix[i] + s.point(i).radius;
    }
  }

  Rational window(const std::vector<Rational>& prefix, std::size_t first,
                  std::size_t count) const {
    Rational total = Rational(count / m) * prefix[m];
    std::size_t rem = count % m;
    std::size_t a = first % m;
    if (a + rem <= m) {
      total += prefix[a + rem] - prefix[a];
    } else {
      total += (prefix[m] - prefix[a]) + prefix[a + rem - m];
    }
    return total;
  }

  Rational gaps(std::size_t first, std::size_t count) const {
    return window(gap_prefix, first, count);
  }
  Rational radii(std::size_t first, std::size_t count) const {
    return window(radius_prefix, first, count);
  }
};

Trapezoid make_trapezoid(const PeriodicSequence& s, const WindowSums& sums, int fold,
                         std::size_t i) {  // i is 0-based
  const std::size_t m = s.size();
  const auto& gaps = s.gap_list();
  if (fold == 1) {
    const Rational& r = s.point(i).radius;
    Rational g = gaps[i] + 2 * r;
    Rational g2 = gaps[(i + 1) % m] + 2 * r;
    if (g > g2) std::swap(g, g2);
    return Trapezoid(1, i + 1, std::move(g), -2 * r, std::move(g2));
  }
  const std::size_t k = static_cast<std::size_t>(fold);
  Rational onset_span = sums.gaps(i + 1, k - 1) + 2 * sums.radii(i + 1, k - 2);
  Rational g = gaps[i] + 2 * s.point(i).radius;
  Rational g2 = gaps[(i + k) % m] + 2 * s.point((i + k - 1) % m).radius;
  if (g > g2) std::swap(g, g2);
  return Trapezoid(fold, i + 1, std::move(g), std::move(onset_span), std::move(g2));
}

}  // namespace

Trapezoid trapezoid(const PeriodicSequence& s, int fold, std::size_t index) {
  if (fold < 1) {
    throw std::invalid_argument("trapezoids exist for fold >= 1");
  }
  if (index < 1 || index > s.size()) {
    throw std::out_of_range("motif index out of range");
  }
  const WindowSums sums(s);
  return make_trapezoid(s, sums, fold, index - 1);
}

PiecewiseLinear density(const PeriodicSequence& s, int fold) {
  if (fold < 0) {
    throw std::invalid_argument("fold must be non-negative");
  }
  if (fold == 0) {
    return zero_fold_density(s);
  }
  const std::size_t m = s.size();
  const WindowSums sums(s);
  std::vector<PiecewiseLinear> parts(m);
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < m; ++i) {
    parts[i] = make_trapezoid(s, sums, fold, i).to_function();
  }
  return sum(parts);
}

PiecewiseLinear density_via_periodicity(const PeriodicSequence& s, int fold) {
  const int m = static_cast<int>(s.size());
  if (fold < m) {
    throw std::out_of_range("fold must be at least the motif size");
  }
  const Rational half(1, 2);
  const PiecewiseLinear low = density(s, fold);        // authoritative on [0, 1/2)
  const PiecewiseLinear base = density(s, fold - m);   // shifted onto [1/2, inf)

  std::vector<PiecewiseLinear::Corner> corners;
  for (const auto& c : low.corner_points()) {
    if (c.t > 0 && c.t < half) {
      corners.push_back(c);
    }
  }
  corners.push_back({half, base.start_value()});
  for (const auto& c : base.corner_points()) {
    if (c.t > 0) {
      corners.push_back({c.t + half, c.v});
    }
  }
  return PiecewiseLinear::from_corners(low.start_value(), std::move(corners));
}

DensityFingerprint::DensityFingerprint(PeriodicSequence sequence,
                                       std::vector<PiecewiseLinear> functions)
    : sequence_(std::move(sequence)), functions_(std::move(functions)) {
  if (functions_.empty()) {
    throw std::invalid_argument("fingerprint needs at least the zero fold");
  }
}

Rational DensityFingerprint::value(int fold, const Rational& t) const {
  if (fold < 0 || t < 0) {
    throw std::invalid_argument("fold and t must be non-negative");
  }
  const int m = static_cast<int>(motif_size());
  int k = fold;
  Rational x = t;
  const Rational half(1, 2);
  while (k > max_fold() && k >= m && x >= half) {
    k -= m;
    x -= half;
  }
  if (k <= max_fold()) {
    return functions_[static_cast<std::size_t>(k)].value_at(x);
  }
  return density(sequence_, k).value_at(x);
}

DensityFingerprint fingerprint(const PeriodicSequence& s, int max_fold) {
  if (max_fold < 0) {
    throw std::invalid_argument("max_fold must be non-negative");
  }
  std::vector<PiecewiseLinear> functions(static_cast<std::size_t>(max_fold) + 1);
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k <= max_fold; ++k) {
    functions[static_cast<std::size_t>(k)] = density(s, k);
  }
  return DensityFingerprint(s, std::move(functions));
}

DensityFingerprint fingerprint(const PeriodicSequence& s) {
  return fingerprint(s, static_cast<int>(s.size()));
}

std::vector<PiecewiseLinear> densigram(const DensityFingerprint& fp) {
  if (fp.max_fold() < 1) {
    throw std::invalid_argument("densigram needs max_fold >= 1");
  }
  std::vector<PiecewiseLinear> out;
  out.reserve(static_cast<std::size_t>(fp.max_fold()));
  PiecewiseLinear acc = fp.functions()[1];
  out.push_back(acc);
  for (int k = 2; k <= fp.max_fold(); ++k) {
    acc = sum(acc, fp.functions()[static_cast<std::size_t>(k)]);
    out.push_back(acc);
  }
  return out;
}

}  // namespace seqdens
