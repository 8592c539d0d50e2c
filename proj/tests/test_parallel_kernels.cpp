#include "seqdens/reference.hpp"

#include "seqdens/coverage.hpp"
#include "seqdens/densities.hpp"
#include "generators.hpp"

#include <doctest.h>

#include <omp.h>

#include <vector>

using namespace seqdens;

TEST_CASE("sweep summation matches the pairwise reference") {
  testgen::Engine rng(31415);
  for (int iter = 0; iter < 15; ++iter) {
    std::vector<PiecewiseLinear> fs;
    const int n = static_cast<int>(testgen::uniform(rng, 0, 12));
    for (int i = 0; i < n; ++i) {
      fs.push_back(testgen::random_function(rng));
    }
    CHECK(sum(fs) == reference::sum(fs));
  }
}

TEST_CASE("chunked summation is independent of the chunk layout") {
  testgen::Engine rng(92653);
  std::vector<PiecewiseLinear> fs;
  for (int i = 0; i < 300; ++i) {  // large enough to take the chunked path
    fs.push_back(testgen::random_function(rng, 4, 16));
  }
  const PiecewiseLinear chunked = sum(fs);
  CHECK(chunked == reference::sum(fs));

  const int threads = omp_get_max_threads();
  omp_set_num_threads(1);
  CHECK(sum(fs) == chunked);
  omp_set_num_threads(threads);
}

TEST_CASE("density kernel matches the window-by-window reference") {
  testgen::Engine rng(58979);
  for (int iter = 0; iter < 10; ++iter) {
    const PeriodicSequence s = testgen::random_sequence(rng, 6, 32);
    for (int k = 0; k <= static_cast<int>(s.size()) + 2; ++k) {
      CHECK(density(s, k) == reference::density(s, k));
    }
  }
}

TEST_CASE("parallel sample checking equals one-by-one checking") {
  testgen::Engine rng(23846);
  const PeriodicSequence s = testgen::random_sequence(rng, 5, 24);
  const PiecewiseLinear f = density(s, 1);
  const std::vector<Rational> ts = testgen::random_samples(rng, 40, 2, 24);
  const auto parallel = sample_check(s, f, 1, ts);
  CHECK(parallel.empty());
  for (const auto& t : ts) {
    CHECK(f.value_at(t) == coverage(s, t).length(1));
  }
}
