#include "seqdens/analysis.hpp"

#include "seqdens/densities.hpp"
#include "seqdens/fixtures.hpp"
#include "generators.hpp"

#include <doctest.h>

#include <algorithm>
#include <vector>

using namespace seqdens;

TEST_CASE("fingerprint comparison on the period-15 pair") {
  const PeriodicSequence s15 = fixtures::get("s15");
  const PeriodicSequence q15 = fixtures::get("q15");
  SUBCASE("zero radii look identical") {
    const ComparisonReport report = fingerprints_equal(s15, q15);
    CHECK(report.equal);
    CHECK(report.compared_max_fold == 9);
    CHECK(!report.first_differing_fold.has_value());
  }
  SUBCASE("neighbor radii separate them at fold two") {
    const ComparisonReport report =
        fingerprints_equal(s15.with_neighbor_radii(), q15.with_neighbor_radii());
    REQUIRE(!report.equal);
    CHECK(*report.first_differing_fold == 2);
    REQUIRE(report.witness_t.has_value());
    CHECK(density(s15.with_neighbor_radii(), 2).value_at(*report.witness_t) ==
          *report.value_left);
    CHECK(density(q15.with_neighbor_radii(), 2).value_at(*report.witness_t) ==
          *report.value_right);
    CHECK(*report.value_left != *report.value_right);
  }
  SUBCASE("translates compare equal") {
    const ComparisonReport report =
        fingerprints_equal(s15, s15.translated(Rational(3, 7)));
    CHECK(report.equal);
  }
}

TEST_CASE("isometry decisions") {
  SUBCASE("the mirror pair from the gap reordering discussion") {
    const PeriodicSequence s(1, {{Rational(0), Rational(1, 12)},
                                 {Rational(1, 3), Rational(0)},
                                 {Rational(1, 2), Rational(1, 12)}});
    const PeriodicSequence q(1, {{Rational(0), Rational(1, 12)},
                                 {Rational(1, 2), Rational(1, 12)},
                                 {Rational(2, 3), Rational(0)}});
    CHECK(isometric(s, q));
    CHECK(isometric(s, s));
    CHECK(fingerprints_equal(s, q).equal);
  }
  SUBCASE("different motif sizes are never isometric") {
    const PeriodicSequence one(1, {{Rational(0), Rational(0)}});
    const PeriodicSequence two(1, {{Rational(0), Rational(0)}, {Rational(1, 2), Rational(0)}});
    CHECK(!isometric(one, two));
  }
  SUBCASE("random translates and reflections are recognized") {
    testgen::Engine rng(7777);
    for (int iter = 0; iter < 20; ++iter) {
      const PeriodicSequence s = testgen::random_sequence(rng, 6, 32);
      const Rational d = testgen::random_unit_rational(rng, 32);
      CHECK(isometric(s, s.translated(d)));
      CHECK(isometric(s, s.reflected().translated(d)));
    }
  }
}

TEST_CASE("gap family members") {
  SUBCASE("m=5, i=1 expands to the expected motif") {
    const PeriodicSequence s = smi_family(5, 1);
    REQUIRE(s.size() == 5);
    const std::vector<Rational> expected{Rational(0), Rational(2, 7), Rational(3, 7),
                                         Rational(5, 7), Rational(6, 7)};
    for (std::size_t i = 0; i < 5; ++i) {
      CHECK(s.point(i).center == expected[i]);
      CHECK(s.point(i).radius == 0);
    }
    std::vector<Rational> gaps = s.gap_list();
    std::sort(gaps.begin(), gaps.end());
    const std::vector<Rational> gap_multiset{Rational(1, 7), Rational(1, 7), Rational(1, 7),
                                             Rational(2, 7), Rational(2, 7)};
    CHECK(gaps == gap_multiset);
  }
  SUBCASE("every member has m-2 unit gaps and two double gaps") {
    for (int m = 4; m <= 9; ++m) {
      for (int i = 1; i <= m - 3; ++i) {
        const PeriodicSequence s = smi_family(m, i);
        REQUIRE(s.size() == static_cast<std::size_t>(m));
        std::vector<Rational> gaps = s.gap_list();
        const Rational unit(1, m + 2);
        CHECK(std::count(gaps.begin(), gaps.end(), unit) == m - 2);
        CHECK(std::count(gaps.begin(), gaps.end(), 2 * unit) == 2);
      }
    }
  }
  SUBCASE("equal zero-fold densities across the family") {
    for (int m = 5; m <= 8; ++m) {
      const PiecewiseLinear base = zero_fold_density(smi_family(m, 1));
      for (int i = 2; i <= m - 3; ++i) {
        CHECK(zero_fold_density(smi_family(m, i)) == base);
      }
    }
  }
  SUBCASE("members are isometric exactly when their gap words mirror") {
    // Reversing the word 2,1^i,2,1^(m-i-2) gives the member with i' = m-i-2,
    // so those pairs are reflections of each other; all other pairs differ.
    for (int m = 5; m <= 9; ++m) {
      for (int i = 1; i <= m - 3; ++i) {
        for (int j = 1; j <= m - 3; ++j) {
          const bool expect = (j == i) || (j == m - i - 2);
          CHECK(isometric(smi_family(m, i), smi_family(m, j)) == expect);
        }
      }
    }
    // non-isometric members with equal zero-fold density, concretely
    CHECK(!isometric(smi_family(7, 1), smi_family(7, 2)));
    CHECK(zero_fold_density(smi_family(7, 1)) == zero_fold_density(smi_family(7, 2)));
  }
  SUBCASE("index range is checked") {
    CHECK_THROWS_AS(smi_family(5, 0), std::out_of_range);
    CHECK_THROWS_AS(smi_family(5, 3), std::out_of_range);
    CHECK_THROWS_AS(smi_family(3, 1), std::out_of_range);
  }
}

TEST_CASE("comparison is reflexive, symmetric, and implied by isometry") {
  testgen::Engine rng(9999);
  for (int iter = 0; iter < 8; ++iter) {
    const PeriodicSequence s = testgen::random_sequence(rng, 5, 24);
    const PeriodicSequence q = testgen::random_sequence(rng, 5, 24);
    CHECK(fingerprints_equal(s, s).equal);
    const ComparisonReport ab = fingerprints_equal(s, q);
    const ComparisonReport ba = fingerprints_equal(q, s);
    CHECK(ab.equal == ba.equal);
    if (!ab.equal) {
      CHECK(*ab.first_differing_fold == *ba.first_differing_fold);
    }
    if (isometric(s, q)) {
      CHECK(ab.equal);
    }
    const Rational d = testgen::random_unit_rational(rng, 32);
    CHECK(fingerprints_equal(s, s.translated(d)).equal);
  }
}
