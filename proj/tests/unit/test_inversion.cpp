#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pat1324/inversion.hpp"

using namespace pat1324;

namespace {

BigInt joint_at(const std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t>& m, int j, std::size_t k) {
  const auto it = m.find({static_cast<std::uint64_t>(j), static_cast<std::uint64_t>(k)});
  return it == m.end() ? BigInt(0) : BigInt(it->second);
}

std::vector<BigInt> big(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

// T(n, k) straight from the joint oracle, as a dense table.
std::vector<std::vector<BigInt>> oracle_table(int nmax, int kmax) {
  std::vector<std::vector<BigInt>> t;
  for (int n = 1; n <= nmax; ++n) {
    const auto j = oracle::joint(n);
    std::vector<BigInt> row;
    for (int k = 0; k <= kmax; ++k) row.push_back(joint_at(j, 0, static_cast<std::size_t>(k)));
    t.push_back(row);
  }
  return t;
}

}  // namespace

TEST(InversionPolynomial, Basics) {
  InversionPolynomial p{big({1, 2, 3})};
  EXPECT_EQ(p.total(), 6);
  EXPECT_EQ(p.reversed().coeffs, big({3, 2, 1}));
  EXPECT_EQ(p.at(7), 0);
  InversionPolynomial acc;
  acc.add_shifted(p, 2, std::nullopt);
  EXPECT_EQ(acc.coeffs, big({0, 0, 1, 2, 3}));
  acc.add_shifted(p, 1, 2);
  EXPECT_EQ(acc.coeffs, big({0, 1, 3, 2, 3}));
}

TEST(InversionLength, Formula) {
  EXPECT_EQ(inversion_length(1, std::nullopt), 1u);
  EXPECT_EQ(inversion_length(5, std::nullopt), 11u);
  EXPECT_EQ(inversion_length(5, 3), 4u);
  EXPECT_EQ(inversion_length(5, 40), 11u);
}

TEST(AvoidersByInversions, Examples) {
  EXPECT_EQ(avoiders_by_inversions(3).coeffs, big({1, 2, 2, 1}));
  const auto four = avoiders_by_inversions(4);
  EXPECT_EQ(four.total(), 23);
  const auto j4 = oracle::joint(4);
  for (std::size_t k = 0; k < four.coeffs.size(); ++k) EXPECT_EQ(four.coeffs[k], joint_at(j4, 0, k));
  EXPECT_EQ(avoiders_by_noninversions(3).coeffs, big({1, 2, 2, 1}));
}

TEST(AvoidersByInversions, OracleEquivalence) {
  for (int n = 1; n <= 8; ++n) {
    const auto j = oracle::joint(n);
    const auto p = avoiders_by_inversions(n);
    const auto q = avoiders_by_noninversions(n);
    ASSERT_EQ(p.coeffs.size(), inversion_length(n, std::nullopt)) << n;
    const std::size_t top = p.coeffs.size() - 1;
    for (std::size_t k = 0; k <= top; ++k) {
      EXPECT_EQ(p.coeffs[k], joint_at(j, 0, k)) << n << ' ' << k;
      EXPECT_EQ(q.coeffs[k], joint_at(j, 0, top - k)) << n << ' ' << k;
    }
  }
}

TEST(AvoidersByInversions, ReversalDuality) {
  for (int n = 1; n <= 13; ++n) EXPECT_EQ(avoiders_by_noninversions(n), avoiders_by_inversions(n).reversed()) << n;
}

TEST(AvoidersByInversions, Marginalization) {
  for (int n = 1; n <= 14; ++n) EXPECT_EQ(avoiders_by_inversions(n).total(), count_avoiders(n)) << n;
}

TEST(AvoidersByInversions, TruncationKeepsLowDegrees) {
  for (int n = 1; n <= 10; ++n) {
    const auto full = avoiders_by_inversions(n);
    for (int kmax : {0, 3, 9, 20}) {
      const auto cut = avoiders_by_inversions(n, {.kmax = kmax});
      ASSERT_EQ(cut.coeffs.size(), inversion_length(n, kmax));
      for (std::size_t k = 0; k < cut.coeffs.size(); ++k) EXPECT_EQ(cut.coeffs[k], full.coeffs[k]) << n << ' ' << k;
    }
  }
}

TEST(AvoidersByInversions, DeterministicAcrossThreads) {
  EXPECT_EQ(avoiders_by_inversions(12, {.threads = 3}), avoiders_by_inversions(12));
}

TEST(OccurrencesByInversions, Examples) {
  const auto four = occurrences_by_inversions(4, 1);
  ASSERT_EQ(four.size(), 2u);
  EXPECT_EQ(four[0].total(), 23);
  EXPECT_EQ(four[1].total(), 1);
  EXPECT_EQ(four[1].at(1), 1);
  EXPECT_EQ(occurrences_by_inversions(3, 0)[0], avoiders_by_inversions(3));
}

TEST(OccurrencesByInversions, OracleEquivalence) {
  for (int n = 1; n <= 8; ++n) {
    const auto j = oracle::joint(n);
    const auto refined = occurrences_by_inversions(n, 3);
    for (int r = 0; r <= 3; ++r) {
      for (std::size_t k = 0; k < inversion_length(n, std::nullopt); ++k) {
        EXPECT_EQ(refined[static_cast<std::size_t>(r)].at(k), joint_at(j, r, k)) << n << ' ' << r << ' ' << k;
      }
    }
  }
}

TEST(OccurrencesByInversions, SumsToSeriesCounts) {
  for (int n = 1; n <= 8; ++n) {
    const auto refined = occurrences_by_inversions(n, 2);
    const auto series = series_counts(n, 2);
    for (int r = 0; r <= 2; ++r) EXPECT_EQ(refined[static_cast<std::size_t>(r)].total(), series.coeffs[static_cast<std::size_t>(r)]);
  }
}

TEST(OccurrencesByInversions, FullGroup) {
  for (int n = 1; n <= 7; ++n) {
    BigInt total = 0;
    for (const auto& p : occurrences_by_inversions(n, 35)) total += p.total();
    EXPECT_EQ(total, factorial(n)) << n;
  }
}

TEST(Monotonicity, SmallRangeMatchesOracleTable) {
  const auto table = inversion_table(8, {.kmax = 8});
  const auto want = oracle_table(8, 8);
  for (int n = 1; n <= 8; ++n)
    for (int k = 0; k <= 8; ++k) {
      const BigInt expected = k < static_cast<int>(inversion_length(n, std::nullopt)) ? want[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(k)] : BigInt(0);
      EXPECT_EQ(table.at(n, k), expected) << n << ' ' << k;
    }
  EXPECT_TRUE(check_monotonicity(8, 8).empty());
}

TEST(Monotonicity, DeskRange) {
  EXPECT_TRUE(check_monotonicity(14, 14).empty());
  const auto table = inversion_table(10, {.kmax = 5});
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(table.at(n, 0), 1);
}

TEST(Monotonicity, ReportsViolations) {
  // Dropping a coefficient in the middle row must be caught.
  auto table = inversion_table(6, {.kmax = 6});
  table.rows[4].coeffs[3] = 0;
  const auto v = monotonicity_violations(table, 6);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].n, 4);
  EXPECT_EQ(v[0].k, 3);
}
