#include "seqdens/coverage.hpp"

#include <omp.h>

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>

namespace seqdens {

CoverageProfile::CoverageProfile(Rational t, std::vector<Rational> lengths)
    : t_(std::move(t)), lengths_(std::move(lengths)) {
  while (lengths_.size() > 1 && lengths_.back() == 0) {
    lengths_.pop_back();
  }
}

CoverageProfile coverage(const PeriodicSequence& s, const Rational& t) {
  if (t < 0) {
    throw std::invalid_argument("negative growth radius");
  }
  const long window = ceil_to_int(2 * t).convert_to<long>() + 1;

  struct Endpoint {
    Rational x;
    int delta;
  };
  std::vector<Endpoint> endpoints;
  endpoints.reserve(s.size() * (2 * static_cast<std::size_t>(window) + 2) * 2);
  for (const auto& p : s.motif()) {
    for (long z = -window; z <= window; ++z) {
      Rational lo = p.center + z - p.radius - t;
      Rational hi = p.center + z + p.radius + t;
      lo = std::max(lo, Rational(0));
      hi = std::min(hi, Rational(1));
      if (lo < hi) {
        endpoints.push_back({std::move(lo), +1});
        endpoints.push_back({std::move(hi), -1});
      }
    }
  }
  std::sort(endpoints.begin(), endpoints.end(),
            [](const Endpoint& a, const Endpoint& b) { return a.x < b.x; });

  std::vector<Rational> lengths(1, Rational(0));
  auto add = [&lengths](std::size_t depth, const Rational& len) {
    if (depth >= lengths.size()) {
      lengths.resize(depth + 1, Rational(0));
    }
    lengths[depth] += len;
  };

  Rational cursor = 0;
  std::size_t depth = 0;
  std::size_t i = 0;
  while (i < endpoints.size()) {
    const Rational& x = endpoints[i].x;
    if (x > cursor) {
      add(depth, x - cursor);
      cursor = x;
    }
    long delta = 0;
    while (i < endpoints.size() && endpoints[i].x == cursor) {
      delta += endpoints[i].delta;
      ++i;
    }
    assert(delta + static_cast<long>(depth) >= 0);
    depth = static_cast<std::size_t>(static_cast<long>(depth) + delta);
  }
  if (cursor < 1) {
    add(depth, 1 - cursor);  // uncovered remainder of the cell
  }
  return CoverageProfile(t, std::move(lengths));
}

std::vector<SampleMismatch> sample_check(const PeriodicSequence& s, const PiecewiseLinear& f,
                                         std::size_t fold, std::span<const Rational> samples) {
  std::vector<std::vector<SampleMismatch>> found(samples.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < samples.size(); ++i) {
    Rational claimed = f.value_at(samples[i]);
    Rational actual = coverage(s, samples[i]).length(fold);
    if (claimed != actual) {
      found[i].push_back({samples[i], std::move(claimed), std::move(actual)});
    }
  }
  std::vector<SampleMismatch> out;
  for (auto& per_sample : found) {
    for (auto& mm : per_sample) {
      out.push_back(std::move(mm));
    }
  }
  return out;
}

}  // namespace seqdens
