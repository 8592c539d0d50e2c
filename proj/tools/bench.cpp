// Benchmark: the sweep/OpenMP density kernel against the serial pairwise
// reference, on synthetic sequences of growing motif size. Both paths are
// exact, so their outputs are also checked for equality.

#include "seqdens/densities.hpp"
#include "seqdens/reference.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <chrono>
#include <iomanip>
#include <iostream>
#include <vector>

namespace {

using namespace seqdens;
using Clock = std::chrono::steady_clock;

// Distinct centers with a mildly irregular gap pattern, radii on every other
// point, everything disjoint by construction.
PeriodicSequence synthetic_sequence(long m) {
  std::vector<WeightedPoint> motif;
  motif.reserve(static_cast<std::size_t>(m));
  for (long i = 0; i < m; ++i) {
    motif.push_back({Rational(4 * i + i % 3, 4 * m), Rational(i % 2, 16 * m)});
  }
  return PeriodicSequence(1, std::move(motif));
}

template <typename F>
double best_of_ms(int reps, F&& body) {
  double best = -1;
  for (int r = 0; r < reps; ++r) {
    const auto begin = Clock::now();
    body();
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - begin).count();
    if (best < 0 || ms < best) {
      best = ms;
    }
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"density kernel vs serial reference"};
  long min_m = 128;
  long max_m = 2048;
  long serial_cap = 1024;
  int fold = 3;
  int reps = 3;
  app.add_option("--min-m", min_m, "smallest motif size");
  app.add_option("--max-m", max_m, "largest motif size (doubling steps)");
  app.add_option("--serial-cap", serial_cap, "skip the reference above this size");
  app.add_option("--k", fold, "fold index to compute");
  app.add_option("--reps", reps, "repetitions per measurement (best is kept)");
  CLI11_PARSE(app, argc, argv);

  std::cout << "threads: " << omp_get_max_threads() << ", fold: " << fold << "\n\n";
  std::cout << std::setw(8) << "m" << std::setw(16) << "reference_ms" << std::setw(12)
            << "kernel_ms" << std::setw(10) << "speedup" << std::setw(8) << "equal" << '\n';

  for (long m = min_m; m <= max_m; m *= 2) {
    const PeriodicSequence s = synthetic_sequence(m);
    PiecewiseLinear kernel_out;
    const double kernel_ms = best_of_ms(reps, [&] { kernel_out = density(s, fold); });

    std::cout << std::setw(8) << m;
    if (m <= serial_cap) {
      PiecewiseLinear reference_out;
      const double reference_ms =
          best_of_ms(reps, [&] { reference_out = reference::density(s, fold); });
      std::cout << std::setw(16) << std::fixed << std::setprecision(2) << reference_ms
                << std::setw(12) << kernel_ms << std::setw(10) << std::setprecision(1)
                << reference_ms / kernel_ms << std::setw(8)
                << (kernel_out == reference_out ? "yes" : "NO");
    } else {
      std::cout << std::setw(16) << "-" << std::setw(12) << std::fixed << std::setprecision(2)
                << kernel_ms << std::setw(10) << "-" << std::setw(8) << "-";
    }
    std::cout << '\n';
  }
  return 0;
}
