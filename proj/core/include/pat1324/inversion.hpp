#ifndef PAT1324_INVERSION_HPP
#define PAT1324_INVERSION_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "pat1324/avoider.hpp"
#include "pat1324/bigint.hpp"
#include "pat1324/fe_engine.hpp"
#include "pat1324/memory_budget.hpp"

namespace pat1324 {

/// Dense polynomial in q; coeffs[k] counts permutations with statistic k.
struct InversionPolynomial {
  std::vector<BigInt> coeffs;

  BigInt total() const;
  InversionPolynomial reversed() const;
  /// coeffs[k], or zero past the stored degree.
  BigInt at(std::size_t k) const;
  /// this += q^shift * other, dropping degrees above max_degree.
  void add_shifted(const InversionPolynomial& other, int shift, std::optional<int> max_degree);
  /// Pads or truncates to exactly `length` coefficients.
  void resize(std::size_t length) { coeffs.resize(length, BigInt(0)); }

  bool operator==(const InversionPolynomial&) const = default;
};

enum class InversionStatistic {
  inversions,     // branch i weighted by q^{i-1}
  noninversions,  // branch i weighted by q^{n-i}
};

struct InversionRing {
  using value_type = InversionPolynomial;

  InversionStatistic statistic = InversionStatistic::inversions;
  std::optional<int> max_degree;

  value_type zero() const { return {}; }
  value_type one() const { return InversionPolynomial{{BigInt(1)}}; }
  void accumulate(value_type& acc, const value_type& child, int n, int i) const {
    acc.add_shifted(child, statistic == InversionStatistic::inversions ? i - 1 : n - i, max_degree);
  }
  std::size_t bytes(const value_type& v) const;
};

struct InversionOptions {
  /// Keep only degrees 0..kmax. Lower coefficients are unaffected because
  /// branch weights only raise degrees.
  std::optional<int> kmax;
  std::size_t memory_cap_bytes = kDefaultMemoryCap;
  int threads = 1;
};

/// Number of coefficients reported for size n: n(n-1)/2 + 1, or kmax + 1
/// when that is smaller.
std::size_t inversion_length(int n, std::optional<int> kmax);

/// coeffs[k] = #{pi in S_n avoiding 1324 with inv(pi) = k}.
InversionPolynomial avoiders_by_inversions(int n, const InversionOptions& options = {});

/// coeffs[k] = #{pi in S_n avoiding 1324 with n(n-1)/2 - inv(pi) = k}.
InversionPolynomial avoiders_by_noninversions(int n, const InversionOptions& options = {});

/// Element j: coeffs[k] = #{pi : N_1324(pi) = j, inv(pi) = k}, j = 0..r.
std::vector<InversionPolynomial> occurrences_by_inversions(int n, int r, const InversionOptions& options = {});

/// T(n, k) for n = 1..nmax, built in one consecutive run.
struct InversionTable {
  std::optional<int> kmax;
  std::vector<InversionPolynomial> rows;  // rows[n-1]

  int nmax() const { return static_cast<int>(rows.size()); }
  const InversionPolynomial& row(int n) const { return rows.at(static_cast<std::size_t>(n) - 1); }
  BigInt at(int n, int k) const { return row(n).at(static_cast<std::size_t>(k)); }
};

InversionTable inversion_table(int nmax, const InversionOptions& options = {});

struct MonotonicityViolation {
  int n = 0;
  int k = 0;
  BigInt count_n;     // T(n, k)
  BigInt count_next;  // T(n+1, k)

  bool operator==(const MonotonicityViolation&) const = default;
};

/// Every (n, k) with k <= kmax, n < nmax and T(n, k) > T(n+1, k).
std::vector<MonotonicityViolation> monotonicity_violations(const InversionTable& table, int kmax);

/// Builds the table truncated at kmax and checks that each column is
/// non-decreasing in n. An empty result means no counterexample on the range.
std::vector<MonotonicityViolation> check_monotonicity(int nmax, int kmax, const InversionOptions& options = {});

}  // namespace pat1324

#endif  // PAT1324_INVERSION_HPP
