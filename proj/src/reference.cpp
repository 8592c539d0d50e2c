#include "seqdens/reference.hpp"

#include <algorithm>
#include <vector>

namespace seqdens::reference {

PiecewiseLinear sum2(const PiecewiseLinear& a, const PiecewiseLinear& b) {
  std::vector<Rational> ts;
  ts.reserve(a.corner_points().size() + b.corner_points().size());
  for (const auto& c : a.corner_points()) ts.push_back(c.t);
  for (const auto& c : b.corner_points()) ts.push_back(c.t);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

  std::vector<PiecewiseLinear::Corner> corners;
  for (const auto& t : ts) {
    if (t > 0) {
      corners.push_back({t, a.value_at(t) + b.value_at(t)});
    }
  }
  return PiecewiseLinear::from_corners(a.start_value() + b.start_value(), std::move(corners));
}

PiecewiseLinear sum(std::span<const PiecewiseLinear> fs) {
  PiecewiseLinear acc = PiecewiseLinear::zero();
  for (const auto& f : fs) {
    acc = sum2(acc, f);
  }
  return acc;
}

PiecewiseLinear density(const PeriodicSequence& s, int fold) {
  if (fold == 0) {
    return zero_fold_density(s);
  }
  PiecewiseLinear acc = PiecewiseLinear::zero();
  for (std::size_t i = 1; i <= s.size(); ++i) {
    acc = sum2(acc, trapezoid(s, fold, i).to_function());
  }
  return acc;
}

}  // namespace seqdens::reference
