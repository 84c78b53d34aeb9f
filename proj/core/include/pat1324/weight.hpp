#ifndef PAT1324_WEIGHT_HPP
#define PAT1324_WEIGHT_HPP

#include <cstdint>
#include <map>
#include <utility>

#include "pat1324/permutation.hpp"

namespace pat1324 {

using IndexPair = std::pair<int, int>;
using ExponentMap = std::map<IndexPair, std::uint64_t>;

/// Exponents of the monomial weight(pi) in t, x_{i,j} (i <= j) and
/// y_{i,j} (j <= i). Zero exponents are never stored.
///
///   x_{i,j}: pairs a < b with pi_a = i < pi_b and pi_b > j
///   y_{i,j}: triples a < b < c with pi_b < pi_a = i < pi_c and pi_b >= j
///   t:       occurrences of 1324
struct WeightExponents {
  std::uint64_t t_exp = 0;
  ExponentMap x_exp;
  ExponentMap y_exp;

  bool operator==(const WeightExponents&) const = default;
};

WeightExponents weight_exponents(const Permutation& pi);

/// Builds weight(pi) the other way: the x_{i,i}^{n-i} ... x_{i,n-1}^1 prefactor
/// times weight(red(pi_2..pi_n)) rewritten under the first-letter
/// substitution rules, where i = pi_1.
WeightExponents weight_by_first_letter(const Permutation& pi);

/// True iff both constructions of the weight agree.
bool lemma1_check(const Permutation& pi);

}  // namespace pat1324

#endif  // PAT1324_WEIGHT_HPP
