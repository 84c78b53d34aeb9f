#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pat1324/asymptotics.hpp"
#include "pat1324/errors.hpp"

using namespace pat1324;

namespace {

bool close(const Real& got, const Real& want, double rel) { return abs(got - want) <= Real(rel) * abs(want); }

}  // namespace

TEST(FitThreeTerm, PureExponential) {
  std::vector<BigInt> a;
  for (int m = 1; m <= 40; ++m) a.push_back(BigInt(1) << m);
  for (int n = 3; n <= 40; ++n) {
    const auto f = fit_three_term(a, n);
    EXPECT_TRUE(close(f.mu, 2, 1e-40)) << n;
    EXPECT_LT(abs(f.theta), Real(1e-40)) << n;
  }
}

TEST(FitThreeTerm, ExactAnsatzRecovery) {
  const std::vector<std::array<double, 3>> cases = {{1, 3, -2}, {1.7, 8, -2.5}, {0.01, 10.4, -8.6}, {5, 1.5, 3}};
  for (const auto& [c, mu, theta] : cases) {
    const auto a = oracle::ansatz(Real(c), Real(mu), Real(theta), 31);
    for (int n = 3; n <= 31; ++n) {
      const auto f = fit_three_term(a, n);
      EXPECT_TRUE(close(f.mu, Real(mu), 1e-9)) << mu << ' ' << n;
      EXPECT_TRUE(close(f.theta, Real(theta), 1e-9)) << theta << ' ' << n;
    }
  }
}

TEST(FitThreeTerm, ScaleInvariance) {
  const auto a = oracle::ansatz(Real(1), Real(7), Real(-1.25), 20);
  std::vector<Real> scaled;
  for (const auto& x : a) scaled.push_back(x * Real(123456.789));
  for (int n = 3; n <= 20; ++n) {
    const auto f = fit_three_term(a, n);
    const auto g = fit_three_term(scaled, n);
    EXPECT_TRUE(close(g.mu, f.mu, 1e-40));
    EXPECT_TRUE(close(g.theta, f.theta, 1e-40));
  }
}

TEST(FitThreeTerm, RejectsBadInput) {
  const std::vector<Real> a{1, 2, 0, 4};
  EXPECT_THROW(fit_three_term(std::span<const Real>(a), 2), InvalidInputError);
  EXPECT_THROW(fit_three_term(std::span<const Real>(a), 5), InvalidInputError);
  EXPECT_THROW(fit_three_term(std::span<const Real>(a), 4), InvalidInputError);
}

TEST(FitProfile, ConstantOnSyntheticData) {
  const auto a = oracle::ansatz(Real(1.7), Real(8), Real(-2.5), 31);
  const auto profile = fit_profile(a, 10, 31);
  ASSERT_EQ(profile.size(), 22u);
  for (const auto& f : profile) {
    EXPECT_TRUE(close(f.mu, 8, 1e-9));
    EXPECT_TRUE(close(f.theta, -2.5, 1e-9));
  }
  EXPECT_THROW(fit_profile(a, 2, 5), InvalidInputError);
  EXPECT_THROW(fit_profile(a, 6, 5), InvalidInputError);
}

TEST(FitProfile, UsesBigIntegersExactly) {
  // Terms past 2^64 must not lose precision on conversion.
  std::vector<BigInt> a;
  BigInt p = 1;
  for (int m = 1; m <= 31; ++m) a.push_back(p *= 11);
  for (const auto& f : fit_profile(a, 3, 31)) EXPECT_TRUE(close(f.mu, 11, 1e-40));
}

TEST(FitLeastSquares, RecoversExactAnsatz) {
  const auto a = oracle::ansatz(Real(2.5), Real(9), Real(-3.5), 31);
  for (int window : {3, 5, 10}) {
    const auto f = fit_least_squares(a, 31, window);
    EXPECT_TRUE(close(f.mu, 9, 1e-9)) << window;
    EXPECT_TRUE(close(f.theta, -3.5, 1e-9)) << window;
  }
  EXPECT_THROW(fit_least_squares(a, 31, 2), InvalidInputError);
  EXPECT_THROW(fit_least_squares(a, 4, 5), InvalidInputError);
}

TEST(FormatReal, SignificantDigits) {
  EXPECT_EQ(format_real(Real(2)), "2");
  EXPECT_EQ(format_real(Real(-8.6433167481234)), "-8.643316748");
  EXPECT_EQ(format_real(Real(10.449363834), 6), "10.4494");
}
