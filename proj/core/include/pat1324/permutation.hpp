#ifndef PAT1324_PERMUTATION_HPP
#define PAT1324_PERMUTATION_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pat1324 {

/// A rearrangement of 1..n. Values are one-indexed; positions are plain
/// zero-based vector indices.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidInputError unless `entries` is a bijection on 1..n.
  explicit Permutation(std::vector<int> entries);

  static Permutation identity(int n);
  /// Accepts "1324" (single digits, n <= 9) or "1,3,2,4".
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(entries_.size()); }
  int operator[](int pos) const { return entries_[static_cast<std::size_t>(pos)]; }
  std::span<const int> entries() const { return entries_; }

  Permutation reversed() const;
  std::string to_string() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> entries_;
};

/// The permutation order-isomorphic to `seq`. Throws on duplicates.
Permutation reduce(std::span<const long long> seq);
Permutation reduce(std::span<const int> seq);

/// N_tau(pi): index subsequences of pi order-isomorphic to tau.
std::uint64_t count_occurrences(const Permutation& pi, const Permutation& tau);

/// O(n^2) count of 1324 occurrences.
std::uint64_t count_1324(const Permutation& pi);

std::uint64_t inversions(const Permutation& pi);

inline constexpr int kDefaultOracleCap = 10;

using Distribution = std::map<std::uint64_t, std::uint64_t>;
/// Keyed by (occurrences, inversions).
using JointDistribution = std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t>;

/// m[r] = #{pi in S_n : N_tau(pi) = r}, by exhaustive enumeration.
/// Throws ResourceLimitError when n > cap.
Distribution brute_force_distribution(int n, const Permutation& tau, int cap = kDefaultOracleCap);

/// m[(r, k)] = #{pi in S_n : N_tau(pi) = r, inv(pi) = k}.
JointDistribution brute_force_joint(int n, const Permutation& tau, int cap = kDefaultOracleCap);

/// Calls f(const Permutation&) for every element of S_n in lexicographic order.
template <class F>
void for_each_permutation(int n, F&& f);

}  // namespace pat1324

#include "pat1324/detail/for_each_permutation.hpp"

#endif  // PAT1324_PERMUTATION_HPP
