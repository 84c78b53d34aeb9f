#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pat1324/weight.hpp"

using namespace pat1324;

namespace {

void expect_matches_oracle(const oracle::Perm& p) {
  const auto got = weight_exponents(Permutation(p));
  const auto want = oracle::weight(p);
  ASSERT_EQ(got.t_exp, want.t);
  ASSERT_EQ(got.x_exp, want.x);
  ASSERT_EQ(got.y_exp, want.y);
}

}  // namespace

// The printed weight of 213 also lists x_{2,1}, which is not one of the
// variables (x_{i,j} needs i <= j); the definition gives the three below.
TEST(Weight, Of213) {
  const auto w = weight_exponents(Permutation::parse("213"));
  EXPECT_EQ(w.t_exp, 0u);
  EXPECT_EQ(w.x_exp, (ExponentMap{{{1, 1}, 1}, {{1, 2}, 1}, {{2, 2}, 1}}));
  EXPECT_EQ(w.y_exp, (ExponentMap{{{2, 1}, 1}}));
}

TEST(Weight, Of41325) {
  const auto w = weight_exponents(Permutation::parse("41325"));
  EXPECT_EQ(w.t_exp, 1u);
  EXPECT_EQ(w.x_exp, (ExponentMap{{{1, 1}, 3}, {{1, 2}, 2}, {{1, 3}, 1}, {{1, 4}, 1}, {{2, 2}, 1},
                                  {{2, 3}, 1}, {{2, 4}, 1}, {{3, 3}, 1}, {{3, 4}, 1}, {{4, 4}, 1}}));
  EXPECT_EQ(w.y_exp, (ExponentMap{{{3, 1}, 1}, {{3, 2}, 1}, {{4, 1}, 3}, {{4, 2}, 2}, {{4, 3}, 1}}));
}

TEST(Weight, IdentityHasNoY) {
  for (int n = 0; n <= 9; ++n) {
    const auto w = weight_exponents(Permutation::identity(n));
    EXPECT_EQ(w.t_exp, 0u);
    EXPECT_TRUE(w.y_exp.empty());
  }
}

TEST(Weight, MatchesDefinitionOnS6) {
  for (int n = 0; n <= 6; ++n) oracle::all_perms(n, expect_matches_oracle);
}

TEST(FirstLetterDecomposition, Examples) {
  EXPECT_TRUE(lemma1_check(Permutation::parse("213")));
  EXPECT_TRUE(lemma1_check(Permutation::parse("41325")));
  EXPECT_EQ(weight_by_first_letter(Permutation::parse("41325")), weight_exponents(Permutation::parse("41325")));
}

TEST(FirstLetterDecomposition, HoldsOnS1ToS7) {
  for (int n = 1; n <= 7; ++n) {
    oracle::all_perms(n, [](const oracle::Perm& p) { ASSERT_TRUE(lemma1_check(Permutation(p))); });
  }
}
