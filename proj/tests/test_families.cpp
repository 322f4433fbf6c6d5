#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "ultraseq/errors.hpp"
#include "ultraseq/families.hpp"
#include "ultraseq/transform.hpp"

using namespace ultraseq;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

std::vector<BigInt> values_on(const SeqWindow& w, Index a, Index b) {
  std::vector<BigInt> out;
  for (Index k = a; k <= b; ++k) out.push_back(w.value_at(k));
  return out;
}

}  // namespace

TEST(Pi, MatrixRows) {
  const long matrix[8][8] = {
      {1, 2, 5, 9, 16, 27, 45, 74},    {2, 2, 6, 10, 18, 30, 50, 82},
      {3, 2, 7, 11, 20, 33, 55, 90},   {4, 2, 8, 12, 22, 36, 60, 98},
      {5, 2, 9, 13, 24, 39, 65, 106},  {6, 2, 10, 14, 26, 42, 70, 114},
      {7, 2, 11, 15, 28, 45, 75, 122}, {8, 2, 12, 16, 30, 48, 80, 130},
  };
  for (Index m = 1; m <= 8; ++m) {
    const SeqWindow w = pi_window(m, 7);
    for (Index n = 0; n <= 7; ++n) EXPECT_EQ(w.value_at(n), matrix[m - 1][n]);
    EXPECT_EQ(w.value_at(-1), -2);
  }
}

TEST(Pi, ClosedFormsAgreeWithNaiveGeneration) {
  for (Index m = 1; m <= 5; ++m) {
    const auto naive = oracle::naive_generate({BigInt(m)}, 0, -2, 60);
    for (Index n = 0; n <= 60; ++n) {
      EXPECT_EQ(pi_closed(m, n, ClosedFormMethod::fib), naive.at(n));
      EXPECT_EQ(pi_closed(m, n, ClosedFormMethod::quad), naive.at(n));
    }
  }
}

TEST(Pi, RowAndTwoPointRelations) {
  for (Index m = 1; m <= 6; ++m) {
    for (Index t = 1; t <= 6; ++t) {
      for (Index n = 0; n <= 25; ++n) {
        EXPECT_EQ(pi_row_relation(m, t, n), pi_closed(m, n));
        for (Index e = 0; e <= n; e += 3) EXPECT_EQ(pi_two_point(m, t, e, n), pi_closed(m, n));
      }
    }
  }
  EXPECT_THROW(pi_two_point(1, 1, 5, 4), std::invalid_argument);
}

TEST(Pi, DifferenceIdentitiesThatHold) {
  for (Index m : {1, 3, 6}) {
    for (Index k = 1; k <= 4; ++k) {
      for (Index n = k + 1; n <= 30; ++n) {
        const auto rep = delta_identities(m, k, n);
        EXPECT_TRUE(rep.all_hold()) << m << " " << k << " " << n;
        EXPECT_NO_THROW(rep.require());
      }
    }
  }
  // Negative Lucas index at n = 0.
  const auto at_zero = delta_identities(6, 1, 0);
  ASSERT_EQ(at_zero.checks.size(), 1u);
  EXPECT_EQ(at_zero.checks[0].lhs, -4);
  EXPECT_EQ(at_zero.checks[0].rhs, 4 * oracle::lucas(-1));
}

TEST(Pi, SecondRowFibonacciFormIsOffByOneIndex) {
  // The k-th difference of row 2 equals 4 F_{n+1-k}; the 4 F_{n-k} form does
  // not hold, and require() reports it.
  for (Index k = 1; k <= 4; ++k) {
    for (Index n = 0; n <= 20; ++n) {
      const SeqWindow d = difference(pi_window(2, n + k), k);
      EXPECT_EQ(d.value_at(n), 4 * oracle::fib(n + 1 - k));
    }
  }
  const auto rep = delta_identities(2, 1, 5);
  EXPECT_FALSE(rep.all_hold());
  EXPECT_THROW(rep.require(), IdentityViolation);
}

TEST(Pi, GrowthResidualVanishesOnPi) {
  const SeqWindow w = pi_window(4, 20);
  for (Index n = 1; n <= 18; ++n) {
    EXPECT_EQ(growth_residual(w, n), 0);
    EXPECT_EQ(w.value_at(n + 2), w.value_at(n + 1) + w.value_at(n) + 2);
  }
}

TEST(Pi, GrowthResidualOnComposite) {
  const SeqWindow w = composite_family({1, {5}, {1}}, {}, 1, 12);
  for (Index n = 2; n <= 10; ++n) {
    const BigInt r = growth_residual(w, n);
    EXPECT_EQ(w.value_at(n + 2), w.value_at(n + 1) + w.value_at(n) + r + 2) << n;
  }
}

TEST(PiStar, DisplayedWindow) {
  const SeqWindow w = pi_star_window(1, 9);
  EXPECT_EQ(values_on(w, 0, 9), ints({1, 2, 5, 9, 16, 20, 38, 42, 82, 86}));
  EXPECT_EQ(w.value_at(-6), -9);
  EXPECT_EQ(w.value_at(-15), -20);
  EXPECT_EQ(w.value_at(-35), -42);
  EXPECT_EQ(w.value_at(-77), -86);
  EXPECT_EQ(w.lo(), -77);
  std::size_t big = 0;
  for (Index k = -77; k < 0; ++k) big += w.value_at(k) != -2;
  EXPECT_EQ(big, 4u);
}

TEST(PiStar, EvenClosedFormAndVerification) {
  for (Index m = 1; m <= 4; ++m) {
    const SeqWindow w = pi_star_window(m, 21);
    for (Index n = 2; 2 * n <= 20; ++n) EXPECT_EQ(w.value_at(2 * n), pi_star_even_closed(m, n));
    const auto rep = verify_O_range(w, w.lo(), w.hi());
    EXPECT_EQ(rep.violations, 0u) << m;
    // Only the leftmost run, whose reach leaves the window, and the last
    // element are uncheckable.
    EXPECT_GT(rep.ok, rep.uncheckable);
  }
}

TEST(Tau, ValidationNamesTheInvariant) {
  EXPECT_NO_THROW((TauConfig{2, {6, 9}, {1, 3}}.validate()));
  EXPECT_THROW((TauConfig{1, {5, 3}, {1}}.validate()), InvalidConfig);
  EXPECT_THROW((TauConfig{1, {2}, {1}}.validate()), InvalidConfig);
  EXPECT_THROW((TauConfig{1, {6}, {1}}.validate()), InvalidConfig);  // cyclic wrap
  EXPECT_THROW((TauConfig{1, {7}, {1}}.validate()), InvalidConfig);
  EXPECT_THROW((TauConfig{1, {3}, {3}}.validate()), InvalidConfig);
}

TEST(Tau, UnitRoundTrip) {
  const TauConfig c{2, {6, 9}, {1, 3}};
  EXPECT_EQ(c.unit(), ints({-10, -2, -10, -2, -2, 10, -2, -2, 10, -2}));
  EXPECT_EQ(TauConfig::from_unit(2, c.unit()), c);
}

TEST(Tau, EnumerationMatchesBruteForceEigenSearch) {
  for (Index m = 1; m <= 2; ++m) {
    auto brute = oracle::brute_periodic_eigen(m);
    // The constant -2 unit is an eigen-sequence with no large entries.
    const std::vector<BigInt> constant(static_cast<std::size_t>(4 * m + 2), BigInt(-2));
    brute.erase(std::remove(brute.begin(), brute.end(), constant), brute.end());

    std::vector<std::vector<BigInt>> raw;
    for (const auto& c : tau_enumerate(m, false)) raw.push_back(c.unit());
    std::sort(raw.begin(), raw.end());
    EXPECT_EQ(raw, brute) << m;

    const auto classes = oracle::rotation_classes(brute);
    std::set<std::vector<BigInt>> canon;
    for (const auto& c : tau_enumerate(m, true)) canon.insert(c.unit());
    EXPECT_EQ(canon, classes) << m;
  }
  EXPECT_EQ(tau_enumerate(1, false).size(), 18u);
  EXPECT_EQ(tau_enumerate(1, true).size(), 3u);
}

TEST(Tau, OutputIsDeterministicallySorted) {
  const auto a = tau_enumerate(2, false);
  for (std::size_t i = 1; i < a.size(); ++i) {
    EXPECT_TRUE(std::tie(a[i - 1].P, a[i - 1].N) < std::tie(a[i].P, a[i].N));
  }
  const auto c = tau_enumerate(2, true);
  for (std::size_t i = 1; i < c.size(); ++i) EXPECT_LT(c[i - 1].unit(), c[i].unit());
}

TEST(Tau, GuardOnLargePeriods) {
  EXPECT_THROW(tau_enumerate(8, true), TooLarge);
  EXPECT_NO_THROW(tau_enumerate(3, true));
}

TEST(Omega, ValuesAndWindow) {
  EXPECT_EQ(omega_segment(-6, 7),
            ints({-14, -2, -10, -2, -6, -2, -2, -2, -2, 6, -2, 10, -2, 14}));
  const SeqWindow w = omega_window(3);
  EXPECT_EQ(w.lo(), -6);
  EXPECT_EQ(w.hi(), 8);
  EXPECT_EQ(values_on(w, -6, 8), omega_segment(-6, 8));
  for (Index n = 2; n <= 10; ++n) {
    const auto seg = omega_segment(-2 * n, 2 * n + 2);
    EXPECT_TRUE(is_free(seg, -2 * n)) << n;
  }
}

TEST(Composite, SeedMatrix) {
  const long rows[6][9] = {
      {1, 2, 5, 17, 24, 47, 93, 174, 321},   {2, 2, 6, 18, 34, 62, 118, 218, 398},
      {3, 10, 19, 35, 60, 113, 215, 398, 731}, {4, 10, 20, 36, 70, 128, 240, 442, 820},
      {5, 10, 21, 33, 68, 127, 229, 426, 793}, {6, 10, 22, 34, 66, 122, 234, 430, 798},
  };
  const TauConfig tau{1, {5}, {1}};
  for (int s = 1; s <= 6; ++s) {
    const SeqWindow w = composite_family(tau, {}, s, 8);
    for (Index n = 0; n <= 8; ++n) EXPECT_EQ(w.value_at(n), rows[s - 1][n]) << s << " " << n;
  }
}

TEST(Composite, BreveTailPlacement) {
  const SeqWindow w = composite_family({1, {5}, {1}}, {}, 1, 1);
  EXPECT_EQ(values_on(w, -10, -1), ints({-2, -2, 6, -2, -6, -2, -2, -2, 6, -2}));
}

TEST(Composite, LongRows) {
  const SeqWindow a =
      composite_family({2, {6, 9}, {1, 3}}, omega_segment(-4, 6), 1, 12);
  EXPECT_EQ(values_on(a, 0, 12), ints({1, 2, 5, 21, 48, 83, 169, 302, 589, 1121, 2128, 4075, 7753}));
  const SeqWindow b =
      composite_family({3, {8, 11, 13}, {1, 3, 6}}, omega_segment(-6, 8), 1, 12);
  EXPECT_EQ(values_on(b, 0, 12),
            ints({1, 2, 5, 25, 60, 103, 201, 402, 749, 1477, 2852, 5495, 10641}));
  EXPECT_EQ(verify_O_range(a, -60, 11).violations, 0u);
  EXPECT_EQ(verify_O_range(b, -60, 11).violations, 0u);
}

TEST(Approx, ModelReproducesBasePoints) {
  const SeqWindow w = composite_family({1, {5}, {1}}, {}, 1, 20);
  const auto rep = approx_report(1, w, 8, 6);
  EXPECT_NEAR(rep.rows[0].predicted, 321.0, 1e-9);
  EXPECT_NEAR(rep.rows[1].predicted, 589.0, 1e-9);
  EXPECT_NEAR(rep.model.phi_m, (5 + std::sqrt(37.0)) / 6, 1e-12);
  for (const auto& row : rep.rows) EXPECT_LT(row.relative_error, 0.05);
  EXPECT_THROW(ApproxModel::build(1, 0, 5, 5), DegenerateBase);
}

TEST(OPower, OddFamilyShape) {
  const auto c = OPowerConfig::odd_family(2);
  EXPECT_EQ(c.r, 5);
  EXPECT_EQ(c.unit(), ints({6, 6, -6, -6, -6}));
  EXPECT_THROW((OPowerConfig{3, {1, 1, -1}}.validate()), InvalidConfig);
  EXPECT_THROW((OPowerConfig{3, {1, -1}}.validate()), InvalidConfig);
}

TEST(OPower, ActsAsShiftAndHasExactOrder) {
  for (Index m = 1; m <= 3; ++m) {
    const auto c = OPowerConfig::odd_family(m);
    const SeqWindow w = o_power_window(c, 3);
    EXPECT_TRUE(agree_on(apply_O(w), shift_L(w), -3 * c.r, 6 * c.r));
    EXPECT_TRUE(agree_on(iterate(Transformation::o(), c.r, w), w, -3 * c.r, 6 * c.r));
    for (Index s = 1; s < c.r; ++s) {
      EXPECT_FALSE(agree_on(iterate(Transformation::o(), s, w), w, 1, 3 * c.r)) << s;
    }
  }
}

TEST(PiStar, LeftBoundKeepsEveryPlacementInside) {
  const SeqWindow full = pi_star_window(1, 9);
  const SeqWindow cut = pi_star_window(1, 9, -40);
  EXPECT_EQ(cut.lo(), -40);
  EXPECT_TRUE(agree_on(cut, full, -40, 9));
  // Placements from odd indices beyond n_max are added when they land inside.
  const SeqWindow wide = pi_star_window(1, 5, -100);
  EXPECT_EQ(wide.value_at(-77), -86);
  EXPECT_EQ(wide.value_at(-35), -42);
  EXPECT_EQ(wide.hi(), 5);
  EXPECT_THROW(pi_star_window(1, 5, 3), std::invalid_argument);
}
