#ifndef PAT1324_FE_ENGINE_HPP
#define PAT1324_FE_ENGINE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <absl/container/flat_hash_map.h>

#include "pat1324/bigint.hpp"
#include "pat1324/errors.hpp"
#include "pat1324/memory_budget.hpp"
#include "pat1324/permutation.hpp"
#include "pat1324/rings.hpp"

namespace pat1324 {

using Exponent = std::uint8_t;

/// Upper-triangular n x n matrix of t-exponents saturating at `cap`.
/// Indices are one-based; entries below the diagonal are not stored and
/// read as zero.
class ExponentMatrix {
 public:
  ExponentMatrix() = default;
  ExponentMatrix(int n, int cap);

  int size() const { return n_; }
  int cap() const { return cap_; }

  Exponent operator()(int i, int j) const {
    return i <= j ? cells_[index(i, j)] : Exponent{0};
  }
  /// Stores min(value, cap). Writes below the diagonal are ignored.
  void set(int i, int j, unsigned value);

  std::span<const Exponent> packed() const { return cells_; }

  bool operator==(const ExponentMatrix&) const = default;

 private:
  std::size_t index(int i, int j) const {
    const auto row = static_cast<std::size_t>(i - 1);
    return row * static_cast<std::size_t>(n_) - row * (row - 1) / 2 + static_cast<std::size_t>(j - i);
  }

  int n_ = 0;
  int cap_ = 1;
  std::vector<Exponent> cells_;
};

/// The state (U, v) of the exponent-form recurrence.
struct ExponentState {
  ExponentMatrix u;
  std::vector<Exponent> v;

  /// All-zero state of size n; saturation cap r + 1.
  static ExponentState zero(int n, int r);

  int size() const { return u.size(); }
  int cap() const { return u.cap(); }
  bool operator==(const ExponentState&) const = default;
};

/// Deletes row i and merges columns i-1 and i into the new column i-1,
/// adding the prefix sum v_1 + ... + v_k to row k. For i = 1 it deletes the
/// first row and column. Throws InvalidInputError unless 1 <= i <= n.
ExponentMatrix r2prime(const ExponentState& state, int i);

/// Merges v_i and v_{i+1} into v_i + v_{i+1} + 1 (saturating); i = n drops
/// the last entry.
std::vector<Exponent> v_update(std::span<const Exponent> v, int i, int cap);

/// (r2prime, v_update) together: the state handed to branch i.
ExponentState successor(const ExponentState& state, int i);

/// e_i = (n-i) u_{i,i} + (n-i-1) u_{i,i+1} + ... + 1 * u_{i,n-1}.
std::uint64_t branch_exponent(const ExponentState& state, int i);

/// Coefficients c_0..c_r of f_n(t) truncated above t^r.
struct TruncatedCounterSeries {
  int r = 0;
  std::vector<BigInt> coeffs;

  bool operator==(const TruncatedCounterSeries&) const = default;
};

struct EngineOptions {
  std::size_t memory_cap_bytes = kDefaultMemoryCap;
  /// Skip branches whose prefactor t^{e_i} already exceeds t^r.
  bool discard_branches = true;
  bool memoize = true;
};

/// Memoized evaluation of H_n(t; U; v) mod t^{r+1}. Single-threaded.
template <class Ring = CountRing>
class SeriesEngine {
 public:
  using Value = typename Ring::value_type;
  using Series = std::vector<Value>;  // indexed by t-degree 0..r

  explicit SeriesEngine(int r, Ring ring = {}, EngineOptions options = {});

  Series evaluate(const ExponentState& state);
  /// H_n(t; 0; 0,...,0) = f_n(t) mod t^{r+1}.
  Series evaluate_top(int n) { return evaluate(ExponentState::zero(n, r_)); }

  int r() const { return r_; }
  std::size_t entries() const;
  std::uint64_t calls() const { return calls_; }
  std::size_t approx_bytes() const { return budget_.used(); }

 private:
  std::string memo_key(const ExponentState& state) const;
  std::size_t entry_bytes(const std::string& key, const Series& s) const;

  int r_;
  Ring ring_;
  EngineOptions options_;
  MemoryBudget budget_;
  std::uint64_t calls_ = 0;
  std::vector<absl::flat_hash_map<std::string, Series>> memo_;  // indexed by n
};

/// s_n(1324, j) for j = 0..r.
TruncatedCounterSeries series_counts(int n, int r, const EngineOptions& options = {});

/// series_counts cross-checked against the brute-force oracle; throws
/// ConsistencyError on any disagreement.
TruncatedCounterSeries series_counts_checked(int n, int r, int oracle_cap = kDefaultOracleCap);

// --- implementation --------------------------------------------------------

template <class Ring>
SeriesEngine<Ring>::SeriesEngine(int r, Ring ring, EngineOptions options)
    : r_(r), ring_(std::move(ring)), options_(options), budget_(options.memory_cap_bytes) {
  if (r < 0) throw InvalidInputError("truncation order r must be non-negative");
  if (r + 1 > 255) throw InvalidInputError("truncation order r too large for byte exponents");
}

template <class Ring>
std::size_t SeriesEngine<Ring>::entries() const {
  std::size_t total = 0;
  for (const auto& m : memo_) total += m.size();
  return total;
}

template <class Ring>
std::string SeriesEngine<Ring>::memo_key(const ExponentState& state) const {
  // The last column of U and the last entry of v never reach a branch
  // exponent or a prefix sum, so they are left out of the key.
  const int n = state.size();
  std::string key;
  key.reserve(state.u.packed().size() + state.v.size());
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j < n; ++j) key.push_back(static_cast<char>(state.u(i, j)));
  }
  for (int i = 0; i + 1 < n; ++i) key.push_back(static_cast<char>(state.v[static_cast<std::size_t>(i)]));
  return key;
}

template <class Ring>
std::size_t SeriesEngine<Ring>::entry_bytes(const std::string& key, const Series& s) const {
  std::size_t bytes = sizeof(std::string) + key.capacity() + sizeof(Series) + 16;
  for (const auto& v : s) bytes += ring_.bytes(v);
  return bytes;
}

template <class Ring>
auto SeriesEngine<Ring>::evaluate(const ExponentState& state) -> Series {
  ++calls_;
  const int n = state.size();
  if (state.cap() != r_ + 1) throw InvalidInputError("state saturation cap must equal r + 1");
  Series acc(static_cast<std::size_t>(r_) + 1, ring_.zero());
  if (n == 0) {
    acc[0] = ring_.one();
    return acc;
  }

  std::string key;
  if (options_.memoize) {
    if (memo_.size() <= static_cast<std::size_t>(n)) memo_.resize(static_cast<std::size_t>(n) + 1);
    key = memo_key(state);
    auto& table = memo_[static_cast<std::size_t>(n)];
    if (auto it = table.find(key); it != table.end()) return it->second;
  }

  for (int i = 1; i <= n; ++i) {
    const std::uint64_t e = branch_exponent(state, i);
    if (e > static_cast<std::uint64_t>(r_) && options_.discard_branches) continue;
    const Series child = evaluate(successor(state, i));
    for (std::uint64_t d = 0; d + e <= static_cast<std::uint64_t>(r_); ++d) {
      ring_.accumulate(acc[d + e], child[d], n, i);
    }
  }

  if (options_.memoize) {
    budget_.charge(entry_bytes(key, acc));
    memo_[static_cast<std::size_t>(n)].emplace(std::move(key), acc);
  }
  return acc;
}

}  // namespace pat1324

#endif  // PAT1324_FE_ENGINE_HPP
