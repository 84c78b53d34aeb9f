#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pat1324/errors.hpp"
#include "pat1324/permutation.hpp"

using namespace pat1324;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

std::vector<int> as_vector(const Permutation& p) { return {p.entries().begin(), p.entries().end()}; }

}  // namespace

TEST(Permutation, RejectsNonBijections) {
  EXPECT_THROW(Permutation({1, 1, 2}), InvalidInputError);
  EXPECT_THROW(Permutation({0, 1}), InvalidInputError);
  EXPECT_THROW(Permutation({1, 3}), InvalidInputError);
  EXPECT_THROW(P("12a"), InvalidInputError);
  EXPECT_NO_THROW(Permutation(std::vector<int>{}));
}

TEST(Permutation, ParsesBothForms) {
  EXPECT_EQ(P("1324"), Permutation({1, 3, 2, 4}));
  EXPECT_EQ(P("10,1,2,3,4,5,6,7,8,9").size(), 10);
  EXPECT_EQ(P("41325").to_string(), "41325");
  EXPECT_EQ(P("41325").reversed(), P("52314"));
}

TEST(Reduce, Examples) {
  const std::vector<int> a{1, 2, 3}, b{5, 3, 4, 1, 2}, c{9, 2, 7, 4};
  EXPECT_EQ(reduce(std::span<const int>(a)), P("123"));
  EXPECT_EQ(reduce(std::span<const int>(b)), P("53412"));
  EXPECT_EQ(reduce(std::span<const int>(c)), P("4132"));
  const std::vector<long long> big{-5, 1000000000000LL, 7};
  EXPECT_EQ(reduce(std::span<const long long>(big)), P("132"));
  const std::vector<int> dup{3, 3};
  EXPECT_THROW(reduce(std::span<const int>(dup)), InvalidInputError);
}

TEST(CountOccurrences, Examples) {
  EXPECT_EQ(count_occurrences(P("53412"), P("123")), 0u);
  EXPECT_EQ(count_occurrences(P("52134"), P("123")), 2u);
  EXPECT_EQ(count_occurrences(P("1324"), P("1324")), 1u);
  EXPECT_EQ(count_occurrences(P("12"), P("1324")), 0u);
}

TEST(CountOccurrences, MatchesSubsetOracleOnS6) {
  const std::vector<Permutation> patterns = {P("1324"), P("213"), P("21"), P("1234"), P("2413")};
  oracle::all_perms(6, [&](const oracle::Perm& p) {
    const Permutation pi(p);
    for (const auto& tau : patterns) {
      ASSERT_EQ(count_occurrences(pi, tau), oracle::occurrences(p, as_vector(tau))) << pi.to_string();
    }
    ASSERT_EQ(count_1324(pi), oracle::occurrences(p, {1, 3, 2, 4})) << pi.to_string();
  });
}

TEST(Count1324, MatchesGenericCounterOnLongerPermutations) {
  std::vector<int> v(12);
  std::iota(v.begin(), v.end(), 1);
  for (int trial = 0; trial < 200; ++trial) {
    std::next_permutation(v.begin(), v.end());
    std::rotate(v.begin(), v.begin() + trial % 7, v.end());
    const Permutation pi(v);
    ASSERT_EQ(count_1324(pi), count_occurrences(pi, P("1324")));
  }
}

TEST(Inversions, Examples) {
  EXPECT_EQ(inversions(Permutation::identity(7)), 0u);
  EXPECT_EQ(inversions(Permutation::identity(7).reversed()), 21u);
  EXPECT_EQ(inversions(P("41325")), 4u);
  oracle::all_perms(5, [](const oracle::Perm& p) { ASSERT_EQ(inversions(Permutation(p)), oracle::inversions(p)); });
}

TEST(BruteForce, DistributionExamples) {
  EXPECT_EQ(brute_force_distribution(4, P("1324")), (Distribution{{0, 23}, {1, 1}}));
  EXPECT_EQ(brute_force_distribution(3, P("1324")), (Distribution{{0, 6}}));
  const auto d5 = brute_force_distribution(5, P("1324"));
  EXPECT_EQ(d5.at(0), 103u);
  EXPECT_EQ(d5.at(1), 10u);
}

TEST(BruteForce, SumsToFactorial) {
  std::uint64_t fact = 1;
  for (int n = 1; n <= 8; ++n) {
    fact *= static_cast<std::uint64_t>(n);
    std::uint64_t total = 0;
    for (const auto& [r, c] : brute_force_distribution(n, P("1324"))) total += c;
    EXPECT_EQ(total, fact) << n;
  }
}

TEST(BruteForce, JointExamples) {
  EXPECT_EQ(brute_force_joint(2, P("1324")), (JointDistribution{{{0, 0}, 1}, {{0, 1}, 1}}));
  std::uint64_t k0 = 0;
  for (const auto& [key, c] : brute_force_joint(4, P("1324"))) k0 += key.second == 0 ? c : 0;
  EXPECT_EQ(k0, 1u);
  const auto j6 = brute_force_joint(6, P("1324"));
  const auto expected = oracle::joint(6);
  ASSERT_EQ(j6.size(), expected.size());
  for (const auto& [key, c] : expected) EXPECT_EQ(j6.at(key), c);
}

TEST(BruteForce, RefusesPastCap) {
  EXPECT_THROW(brute_force_distribution(11, P("1324")), ResourceLimitError);
  EXPECT_THROW(brute_force_joint(5, P("1324"), 4), ResourceLimitError);
  EXPECT_NO_THROW(brute_force_distribution(4, P("1324"), 4));
}
