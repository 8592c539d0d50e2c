#include "seqdens/piecewise_linear.hpp"

#include <omp.h>

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>

namespace seqdens {

namespace {

using Corner = PiecewiseLinear::Corner;

// gradient(a->b) == gradient(b->c), cross-multiplied
bool collinear(const Corner& a, const Corner& b, const Corner& c) {
  return (b.v - a.v) * (c.t - b.t) == (c.v - b.v) * (b.t - a.t);
}

}  // namespace

PiecewiseLinear PiecewiseLinear::constant(const Rational& value) {
  return from_corners(value, {});
}

PiecewiseLinear PiecewiseLinear::from_corners(const Rational& start_value,
                                              std::vector<Corner> corners) {
  if (start_value < 0) {
    throw std::invalid_argument("negative start value");
  }
  std::vector<Corner> pts;
  pts.reserve(corners.size() + 1);
  pts.push_back({Rational(0), start_value});
  for (auto& c : corners) {
    if (c.v < 0) {
      throw std::invalid_argument("negative corner value");
    }
    if (c.t < pts.back().t) {
      throw std::invalid_argument("corner abscissas must be non-decreasing");
    }
    if (c.t == pts.back().t) {
      if (c.v != pts.back().v) {
        throw std::invalid_argument("two distinct values at abscissa " +
                                    to_fraction_string(c.t));
      }
      continue;  // repeated corner collapses
    }
    pts.push_back(std::move(c));
  }

  std::vector<Corner> out;
  out.reserve(pts.size());
  for (auto& c : pts) {
    while (out.size() >= 2 && collinear(out[out.size() - 2], out.back(), c)) {
      out.pop_back();
    }
    out.push_back(std::move(c));
  }
  // the function is constant after the last corner, so a flat final segment
  // is part of the tail
  while (out.size() >= 2 && out.back().v == out[out.size() - 2].v) {
    out.pop_back();
  }

  PiecewiseLinear f;
  f.pts_ = std::move(out);
  return f;
}

Rational PiecewiseLinear::value_at(const Rational& t) const {
  if (t < 0) {
    throw std::invalid_argument("negative argument");
  }
  auto it = std::upper_bound(pts_.begin(), pts_.end(), t,
                             [](const Rational& x, const Corner& c) { return x < c.t; });
  // it points past the last corner with abscissa <= t; pts_[0].t == 0 <= t
  const Corner& lo = *(it - 1);
  if (it == pts_.end()) {
    return lo.v;
  }
  const Corner& hi = *it;
  return lo.v + (hi.v - lo.v) * (t - lo.t) / (hi.t - lo.t);
}

std::vector<PiecewiseLinear::MaxPlateau> PiecewiseLinear::local_maxima() const {
  std::vector<MaxPlateau> out;
  // Index into pts_ where the current candidate plateau begins. Starts at 0:
  // the domain boundary counts as having risen into t = 0.
  std::size_t cand = 0;
  bool have_cand = true;
  for (std::size_t j = 0; j + 1 < pts_.size(); ++j) {
    const Rational& a = pts_[j].v;
    const Rational& b = pts_[j + 1].v;
    if (b > a) {
      cand = j + 1;
      have_cand = true;
    } else if (b < a) {
      if (have_cand) {
        out.push_back({pts_[cand].t, pts_[j].t, pts_[j].v});
        have_cand = false;
      }
    }
    // flat segment: candidate plateau extends
  }
  return out;
}

namespace {

struct GradientEvent {
  Rational t;
  Rational dg;
};

// Accumulates f's start value, its gradient at t = 0, and one event per later
// gradient change (including the drop to the constant tail).
void gather_events(const PiecewiseLinear& f, Rational& start, Rational& grad0,
                   std::vector<GradientEvent>& events) {
  const auto& p = f.corner_points();
  start += p.front().v;
  Rational prev_gradient = 0;
  for (std::size_t j = 0; j + 1 < p.size(); ++j) {
    Rational g = (p[j + 1].v - p[j].v) / (p[j + 1].t - p[j].t);
    if (j == 0) {
      grad0 += g;
    } else {
      events.push_back({p[j].t, g - prev_gradient});
    }
    prev_gradient = std::move(g);
  }
  if (p.size() >= 2) {
    events.push_back({p.back().t, -prev_gradient});
  }
}

PiecewiseLinear sweep(const Rational& start, Rational gradient,
                      std::vector<GradientEvent> events) {
  std::sort(events.begin(), events.end(),
            [](const GradientEvent& a, const GradientEvent& b) { return a.t < b.t; });
  std::vector<Corner> corners;
  Rational cur_t = 0;
  Rational cur_v = start;
  std::size_t i = 0;
  while (i < events.size()) {
    const Rational t = events[i].t;
    Rational dg = 0;
    while (i < events.size() && events[i].t == t) {
      dg += events[i].dg;
      ++i;
    }
    if (dg == 0) {
      continue;  // gradient unchanged, no corner here
    }
    cur_v += gradient * (t - cur_t);
    cur_t = t;
    corners.push_back({t, cur_v});
    gradient += dg;
  }
  assert(gradient == 0);  // every input is constant past its last corner
  return PiecewiseLinear::from_corners(start, std::move(corners));
}

PiecewiseLinear sum_sweep(std::span<const PiecewiseLinear> fs) {
  Rational start = 0;
  Rational grad0 = 0;
  std::vector<GradientEvent> events;
  for (const auto& f : fs) {
    gather_events(f, start, grad0, events);
  }
  return sweep(start, std::move(grad0), std::move(events));
}

}  // namespace

PiecewiseLinear sum(std::span<const PiecewiseLinear> fs) {
  if (fs.empty()) {
    return PiecewiseLinear::zero();
  }
  if (fs.size() == 1) {
    return fs.front();
  }
  constexpr std::size_t kChunkSize = 64;
  if (fs.size() < 2 * kChunkSize) {
    return sum_sweep(fs);
  }
  // Chunked partial sums; exact arithmetic makes the result independent of
  // the chunk layout and of how the chunks are scheduled over threads.
  const std::size_t chunks =
      std::min(fs.size() / kChunkSize,
               static_cast<std::size_t>(omp_get_max_threads()) * 4);
  std::vector<PiecewiseLinear> partials(chunks);
  const std::size_t per = (fs.size() + chunks - 1) / chunks;
#pragma omp parallel for schedule(static)
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t lo = c * per;
    const std::size_t hi = std::min(fs.size(), lo + per);
    if (lo < hi) {
      partials[c] = sum_sweep(fs.subspan(lo, hi - lo));
    }
  }
  return sum_sweep(partials);
}

PiecewiseLinear sum(const PiecewiseLinear& a, const PiecewiseLinear& b) {
  const PiecewiseLinear fs[] = {a, b};
  return sum_sweep(fs);
}

}  // namespace seqdens
