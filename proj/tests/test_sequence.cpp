#include "seqdens/sequence.hpp"

#include "seqdens/error.hpp"
#include "generators.hpp"

#include <doctest.h>

#include <algorithm>

using namespace seqdens;

namespace {

PeriodicSequence example4() {
  return PeriodicSequence(1, {{Rational(0), Rational(1, 12)},
                              {Rational(1, 3), Rational(0)},
                              {Rational(1, 2), Rational(1, 12)}});
}

bool is_rotation(std::vector<Rational> a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (a == b) return true;
    std::rotate(a.begin(), a.begin() + 1, a.end());
  }
  return false;
}

}  // namespace

TEST_CASE("normalization scales, reduces, and sorts") {
  SUBCASE("period 15 family scales to the unit cell") {
    std::vector<WeightedPoint> motif;
    for (long c : {0, 1, 3, 4, 5, 7, 9, 10, 12}) {
      motif.push_back({Rational(c), Rational(0)});
    }
    const PeriodicSequence s(15, motif);
    REQUIRE(s.size() == 9);
    CHECK(s.point(0).center == 0);
    CHECK(s.point(1).center == Rational(1, 15));
    CHECK(s.point(8).center == Rational(12, 15));
  }
  SUBCASE("unsorted centers are ordered with their radii") {
    const PeriodicSequence s(1, {{Rational(1, 2), Rational(1, 12)},
                                 {Rational(0), Rational(1, 12)},
                                 {Rational(1, 3), Rational(0)}});
    CHECK(s == example4());
  }
  SUBCASE("period 2 sequence scales radii as well") {
    const PeriodicSequence s(2, {{Rational(0), Rational(1, 6)}, {Rational(1, 2), Rational(0)}});
    REQUIRE(s.size() == 2);
    CHECK(s.point(0) == WeightedPoint{Rational(0), Rational(1, 12)});
    CHECK(s.point(1) == WeightedPoint{Rational(1, 4), Rational(0)});
  }
  SUBCASE("centers outside the cell are reduced") {
    const PeriodicSequence s(1, {{Rational(-1, 4), Rational(0)}, {Rational(9, 8), Rational(0)}});
    CHECK(s.point(0).center == Rational(1, 8));
    CHECK(s.point(1).center == Rational(3, 4));
  }
}

TEST_CASE("normalization errors") {
  CHECK_THROWS_AS(PeriodicSequence(1, {}), EmptyMotifError);
  CHECK_THROWS_AS(PeriodicSequence(0, {{Rational(0), Rational(0)}}), std::invalid_argument);
  CHECK_THROWS_AS(PeriodicSequence(1, {{Rational(0), Rational(-1, 4)}}), std::invalid_argument);
  // overlapping intervals
  CHECK_THROWS_AS(PeriodicSequence(1, {{Rational(0), Rational(1, 4)},
                                       {Rational(1, 3), Rational(1, 4)}}),
                  OverlapError);
  // same center, different radii: nested intervals
  CHECK_THROWS_AS(PeriodicSequence(1, {{Rational(1, 2), Rational(0)},
                                       {Rational(1, 2), Rational(1, 8)}}),
                  OverlapError);
  // an exactly repeated point is collapsed, not an error
  const PeriodicSequence s(1, {{Rational(1, 2), Rational(0)}, {Rational(1, 2), Rational(0)}});
  CHECK(s.size() == 1);
}

TEST_CASE("gaps of the worked example") {
  const GapVector gv = example4().gaps();
  REQUIRE(gv.gaps.size() == 3);
  CHECK(gv.gaps[0] == Rational(1, 3));
  CHECK(gv.gaps[1] == Rational(1,  4));
  CHECK(gv.gaps[2] == Rational(1, 12));
  CHECK(gv.total_length == Rational(1, 3));
}

TEST_CASE("gaps edge cases") {
  SUBCASE("single point") {
    const PeriodicSequence s(1, {{Rational(0), Rational(0)}});
    const GapVector gv = s.gaps();
    REQUIRE(gv.gaps.size() == 1);
    CHECK(gv.gaps[0] == 1);
    CHECK(gv.total_length == 0);
  }
  SUBCASE("touching intervals cover the whole cell") {
    const PeriodicSequence s(1, {{Rational(0), Rational(1, 4)}, {Rational(1, 2), Rational(1, 4)}});
    const GapVector gv = s.gaps();
    CHECK(gv.gaps == std::vector<Rational>{0, 0});
    CHECK(gv.total_length == 1);
  }
}

TEST_CASE("neighbor radii") {
  SUBCASE("half-distance to the closest neighbor") {
    std::vector<WeightedPoint> motif;
    for (long c : {0, 1, 3, 4, 5, 7, 9, 10, 12}) {
      motif.push_back({Rational(c), Rational(0)});
    }
    const PeriodicSequence s = PeriodicSequence(15, motif).with_neighbor_radii();
    CHECK(s.point(0).radius == Rational(1, 30));
  }
  SUBCASE("two antipodal points") {
    const PeriodicSequence s =
        PeriodicSequence(1, {{Rational(0), Rational(0)}, {Rational(1, 2), Rational(0)}})
            .with_neighbor_radii();
    CHECK(s.point(0).radius == Rational(1, 4));
    CHECK(s.point(1).radius == Rational(1, 4));
  }
  SUBCASE("a single point sees its own translate") {
    const PeriodicSequence s =
        PeriodicSequence(1, {{Rational(0), Rational(0)}}).with_neighbor_radii();
    CHECK(s.point(0).radius == Rational(1, 2));
  }
  SUBCASE("requires zero radii") {
    CHECK_THROWS_AS(example4().with_neighbor_radii(), std::invalid_argument);
  }
}

TEST_CASE("translate and reflect") {
  const PeriodicSequence s = example4();
  SUBCASE("translation reduces mod 1 and keeps radii with their points") {
    const PeriodicSequence t = s.translated(Rational(1, 2));
    REQUIRE(t.size() == 3);
    CHECK(t.point(0) == WeightedPoint{Rational(0), Rational(1, 12)});
    CHECK(t.point(1) == WeightedPoint{Rational(1, 2), Rational(1, 12)});
    CHECK(t.point(2) == WeightedPoint{Rational(5, 6), Rational(0)});
  }
  SUBCASE("reflection mirrors the motif") {
    const PeriodicSequence r = s.reflected();
    CHECK(r.point(0) == WeightedPoint{Rational(0), Rational(1, 12)});
    CHECK(r.point(1) == WeightedPoint{Rational(1, 2), Rational(1, 12)});
    CHECK(r.point(2) == WeightedPoint{Rational(2, 3), Rational(0)});
  }
  SUBCASE("reflection is an involution") { CHECK(s.reflected().reflected() == s); }
}

TEST_CASE("sequence invariants on random inputs") {
  testgen::Engine rng(20240801);
  for (int iter = 0; iter < 60; ++iter) {
    const PeriodicSequence s = testgen::random_sequence(rng);
    const GapVector gv = s.gaps();

    Rational gap_sum = 0;
    for (const auto& g : gv.gaps) gap_sum += g;
    CHECK(gap_sum + gv.total_length == 1);

    const Rational d = testgen::random_unit_rational(rng, 64);
    CHECK(is_rotation(s.translated(d).gaps().gaps, gv.gaps));

    std::vector<Rational> reversed = gv.gaps;
    std::reverse(reversed.begin(), reversed.end());
    CHECK(is_rotation(s.reflected().gaps().gaps, reversed));

    // normalization is idempotent
    CHECK(PeriodicSequence(1, s.motif()) == s);

    if (s.all_radii_zero()) {
      CHECK(s.with_neighbor_radii().translated(d) == s.translated(d).with_neighbor_radii());
      CHECK(s.with_neighbor_radii().reflected() == s.reflected().with_neighbor_radii());
    }
  }
}
