#include <gtest/gtest.h>

#include "oracles.hpp"
#include "property.hpp"
#include "schwarz/error.hpp"
#include "schwarz/sampling.hpp"
#include "schwarz/schur.hpp"

using schwarz::Complex;
using schwarz::SchurFunction;

TEST(SchurFunction, ConstantAndValidation) {
  EXPECT_EQ(SchurFunction::constant(0.5)(Complex{0.3, 0.1}), Complex(0.5));
  EXPECT_THROW(SchurFunction::constant(1.1), schwarz::InvalidArgument);
  EXPECT_THROW(SchurFunction::blaschke({1.0}), schwarz::InvalidArgument);
  EXPECT_THROW(SchurFunction::blaschke({0.2}, 2.0), schwarz::InvalidArgument);
  EXPECT_THROW(SchurFunction::random_blaschke(1, -1), schwarz::InvalidArgument);
}

TEST(SchurFunction, SingleFactorIsDiskAutomorphism) {
  const Complex a{0.3, -0.2};
  const SchurFunction s = SchurFunction::blaschke({a});
  const Complex z{0.1, 0.5};
  EXPECT_LT(std::abs(s(z) - (z - a) / (1.0 - std::conj(a) * z)), 1e-15);
  EXPECT_LT(std::abs(s(a)), 1e-15);
}

TEST(SchurFunction, RandomProductsMapDiskIntoDisk) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const SchurFunction s = SchurFunction::random_blaschke(seed, 1 + static_cast<int>(seed % 8));
    for (const auto& a : s.zeros()) EXPECT_LE(std::abs(a), schwarz::kRandomZeroCap + 1e-15);
    EXPECT_NEAR(std::abs(s.rotation()), 1.0, 1e-15);
    for (const Complex z : schwarz::disk_samples(1000, 1.0 - 1e-9)) {
      ASSERT_LE(std::abs(s(z)), 1.0 + 1e-12) << "seed " << seed;
    }
  }
}

TEST(SchurFunction, UnimodularOnTheCircle) {
  const SchurFunction s = SchurFunction::random_blaschke(5, 6);
  for (int j = 0; j < 64; ++j) EXPECT_NEAR(std::abs(s(std::polar(1.0, 0.1 * j))), 1.0, 1e-12);
}

TEST(SchurFunction, SeedDeterminismAndOriginZero) {
  const SchurFunction a = SchurFunction::random_blaschke(42, 5);
  const SchurFunction b = SchurFunction::random_blaschke(42, 5);
  ASSERT_EQ(a.zeros().size(), b.zeros().size());
  for (std::size_t k = 0; k < a.zeros().size(); ++k) EXPECT_EQ(a.zeros()[k], b.zeros()[k]);
  EXPECT_EQ(a.rotation(), b.rotation());
  EXPECT_NE(SchurFunction::random_blaschke(43, 5).rotation(), a.rotation());
  const SchurFunction o = SchurFunction::random_blaschke(42, 3, true);
  EXPECT_EQ(std::abs(o(Complex{0.0, 0.0})), 0.0);
}

TEST(SchurFunction, JetMatchesCauchyOracle) {
  const SchurFunction s = SchurFunction::random_blaschke(9, 4);
  for (const Complex z0 : {Complex{0.0, 0.0}, Complex{0.4, -0.3}, Complex{-0.7, 0.2}}) {
    const auto jet = s.jet_at(z0, 6);
    const auto ref = oracle::cauchy_coefficients([&](Complex w) { return s(w); }, z0,
                                                 0.5 * (1.0 - std::abs(z0)), 6);
    for (int k = 0; k <= 6; ++k) EXPECT_LT(std::abs(jet[k] - ref[k]), 1e-9 * std::max(1.0, std::abs(ref[k])));
  }
}

TEST(SchurFunction, DefectMatchesNaiveFormulaAwayFromRim) {
  prop::for_all("defect", 200, 7, [](prop::Rng& g, int i) {
    const SchurFunction s = SchurFunction::random_blaschke(static_cast<std::uint64_t>(i), 1 + i % 8);
    const Complex z = prop::disk_point(g, 0.9);
    const double naive = 1.0 - std::norm(s(z));
    const double d = s.defect(z);
    if (std::abs(d - naive) < 1e-12) return ::testing::AssertionSuccess();
    return ::testing::AssertionFailure() << d << " vs " << naive;
  });
  EXPECT_DOUBLE_EQ(SchurFunction::constant(0.6).defect(0.3), 0.64);
}

TEST(SchurFunction, JsonRoundTrip) {
  for (const SchurFunction& s :
       {SchurFunction::constant(Complex{0.1, -0.2}), SchurFunction::random_blaschke(3, 5)}) {
    const SchurFunction t = SchurFunction::from_json(s.to_json());
    EXPECT_EQ(t.kind(), s.kind());
    EXPECT_EQ(t.to_json(), s.to_json());
    EXPECT_EQ(t(Complex{0.2, 0.3}), s(Complex{0.2, 0.3}));
  }
  EXPECT_THROW(SchurFunction::from_json(schwarz::Json{{"kind", "nope"}}), schwarz::InvalidArgument);
}
