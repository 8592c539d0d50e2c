#include "seqdens/analysis.hpp"

#include "seqdens/densities.hpp"

#include <omp.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace seqdens {

namespace {

// Two distinct canonical functions must disagree at some corner abscissa of
// one of them (or just past both tails); returns the smallest such point.
Rational find_witness(const PiecewiseLinear& a, const PiecewiseLinear& b) {
  std::vector<Rational> ts;
  for (const auto& c : a.corner_points()) ts.push_back(c.t);
  for (const auto& c : b.corner_points()) ts.push_back(c.t);
  ts.push_back(std::max(a.support_end(), b.support_end()) + 1);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  for (const auto& t : ts) {
    if (a.value_at(t) != b.value_at(t)) {
      return t;
    }
  }
  throw std::logic_error("unequal canonical functions with no witness");
}

}  // namespace

ComparisonReport fingerprints_equal(const PeriodicSequence& s, const PeriodicSequence& q) {
  const int max_fold = static_cast<int>(std::max(s.size(), q.size()));
  std::vector<PiecewiseLinear> fs(static_cast<std::size_t>(max_fold) + 1);
  std::vector<PiecewiseLinear> fq(static_cast<std::size_t>(max_fold) + 1);
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k <= max_fold; ++k) {
    fs[static_cast<std::size_t>(k)] = density(s, k);
    fq[static_cast<std::size_t>(k)] = density(q, k);
  }

  ComparisonReport report;
  report.compared_max_fold = max_fold;
  for (int k = 0; k <= max_fold; ++k) {
    const auto& a = fs[static_cast<std::size_t>(k)];
    const auto& b = fq[static_cast<std::size_t>(k)];
    if (a != b) {
      report.equal = false;
      report.first_differing_fold = k;
      Rational t = find_witness(a, b);
      report.value_left = a.value_at(t);
      report.value_right = b.value_at(t);
      report.witness_t = std::move(t);
      return report;
    }
  }
  report.equal = true;
  return report;
}

bool isometric(const PeriodicSequence& s, const PeriodicSequence& q) {
  if (s.size() != q.size()) {
    return false;
  }
  for (const PeriodicSequence& candidate : {s, s.reflected()}) {
    const Rational& anchor = candidate.point(0).center;
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (candidate.translated(q.point(j).center - anchor) == q) {
        return true;
      }
    }
  }
  return false;
}

PeriodicSequence smi_family(int m, int i) {
  if (m < 4 || i < 1 || i > m - 3) {
    throw std::out_of_range("family needs m >= 4 and 1 <= i <= m-3");
  }
  std::vector<WeightedPoint> motif;
  motif.push_back({Rational(0), Rational(0)});
  for (int c = 2; c <= i + 2; ++c) {
    motif.push_back({Rational(c), Rational(0)});
  }
  for (int c = i + 4; c <= m + 2; ++c) {
    motif.push_back({Rational(c), Rational(0)});  // m+2 wraps onto 0
  }
  return PeriodicSequence(Rational(m + 2), std::move(motif));
}

}  // namespace seqdens
