#ifndef PAT1324_AVOIDER_HPP
#define PAT1324_AVOIDER_HPP

#include <algorithm>
#include <array>
#include <atomic>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <shared_mutex>
#include <string>
#include <thread>
#include <vector>

#include <absl/container/flat_hash_map.h>

#include "pat1324/bigint.hpp"
#include "pat1324/errors.hpp"
#include "pat1324/memory_budget.hpp"
#include "pat1324/rings.hpp"

#ifndef PAT1324_MAX_N
#define PAT1324_MAX_N 32
#endif

namespace pat1324 {

/// Longest permutation the byte-key layout can describe.
inline constexpr int kMaxAvoiderSize = PAT1324_MAX_N;
static_assert(kMaxAvoiderSize >= 2 && kMaxAvoiderSize <= 254);

/// State of the r = 0 recurrence. b[j-1] holds b_j, the column of the
/// leftmost 1 in row j of the 0-1 matrix (n+1 for an all-zero row); k is the
/// number of leading zeros of the v vector.
struct AvoiderState {
  int n = 0;
  int k = 0;
  std::vector<int> b;

  /// The all-zero matrix with v = 0...0: b_j = n+1, k = n.
  static AvoiderState root(int n);

  /// 0 <= k <= n, j <= b_j <= n+1.
  bool valid() const;
  bool operator==(const AvoiderState&) const = default;
};

/// Branches with e_i = 0, i.e. rows whose leftmost 1 sits in column n or
/// does not exist.
std::vector<int> admissible_branches(const AvoiderState& state);

/// The state reached through branch i. Throws ContractViolation when i is
/// not admissible.
AvoiderState transition(const AvoiderState& state, int i);

struct CacheStats {
  std::uint64_t hits = 0;
  std::uint64_t misses = 0;
  std::uint64_t entries = 0;
  std::uint64_t peak_bytes = 0;
  /// False when the split between hits and misses depends on thread timing.
  bool reproducible = true;

  CacheStats operator-(const CacheStats& earlier) const;
};

struct AvoiderOptions {
  std::size_t memory_cap_bytes = kDefaultMemoryCap;
  int threads = 1;
  /// Use the overflow-checked 128-bit counter instead of arbitrary precision.
  bool fixed_width = false;
  /// Per-n progress lines (n, a_n, elapsed, entries) go here when set.
  std::ostream* progress = nullptr;
};

namespace detail {

/// Zero-aligned byte layout: bt[j] = b_{j+1} - 1, padded with zeros.
struct PackedAvoiderState {
  std::uint8_t n = 0;
  std::uint8_t k = 0;
  std::array<std::uint8_t, kMaxAvoiderSize> bt{};
};

PackedAvoiderState pack(const AvoiderState& state);
AvoiderState unpack(const PackedAvoiderState& packed);

inline bool admissible(const PackedAvoiderState& s, int i) {
  // b_i >= n  <=>  bt[i-1] >= n-1
  return s.bt[static_cast<std::size_t>(i) - 1] + 1 >= s.n;
}

/// Transition on the packed layout; the single source of the b/k rules.
inline PackedAvoiderState step(const PackedAvoiderState& s, int i) {
  const int n = s.n;
  PackedAvoiderState out;
  out.n = static_cast<std::uint8_t>(n - 1);
  out.k = static_cast<std::uint8_t>(std::min(i - 1, static_cast<int>(s.k)));
  std::size_t slot = 0;
  for (int j = 1; j <= n; ++j) {
    if (j == i) continue;
    const int bj = s.bt[static_cast<std::size_t>(j) - 1] + 1;
    int next;
    if (i == 1 || j > i) {
      next = bj - 1;  // row and columns shift left
    } else if (bj <= i - 2) {
      next = bj;
    } else if (bj <= i) {
      next = i - 1;  // columns i-1 and i merge
    } else {
      // Rows past the leading zeros of v pick up a prefix sum in the merged column.
      next = j > s.k ? i - 1 : bj - 1;
    }
    assert(next >= static_cast<int>(slot) + 1 && next <= n);
    out.bt[slot++] = static_cast<std::uint8_t>(next - 1);
  }
  return out;
}

}  // namespace detail

/// Memoized G(n, k, b) = sum over admissible i of G(transition(i)), with
/// G = 1 for n <= 1. Maps are kept per (n, k) and persist across count()
/// calls, so consecutive n reuse earlier work.
template <class Ring = CountRing>
class AvoiderEngine {
 public:
  using Value = typename Ring::value_type;

  explicit AvoiderEngine(Ring ring = {}, AvoiderOptions options = {});

  /// G at the root state of size n.
  Value count(int n);
  Value evaluate(const AvoiderState& state);

  CacheStats stats() const;
  const Ring& ring() const { return ring_; }

 private:
  using Key = std::array<std::uint8_t, kMaxAvoiderSize>;
  struct KeyHash {
    std::size_t operator()(const Key& key) const;
  };
  using Map = absl::flat_hash_map<Key, Value, KeyHash>;
  struct Shard {
    mutable std::shared_mutex mutex;
    Map map;
    std::size_t charged_capacity = 0;
  };

  Value eval(const detail::PackedAvoiderState& s);
  Shard& shard(int n, int k) { return *memo_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]; }
  static Key memo_key(const detail::PackedAvoiderState& s);
  static int memo_k(const detail::PackedAvoiderState& s) { return std::min<int>(s.k, std::max(s.n - 1, 0)); }
  std::optional<Value> lookup(const detail::PackedAvoiderState& s);
  void store(const detail::PackedAvoiderState& s, const Value& value);
  Value eval_parallel_root(const detail::PackedAvoiderState& root);

  Ring ring_;
  AvoiderOptions options_;
  bool concurrent_ = false;
  bool ever_parallel_ = false;
  MemoryBudget budget_;
  std::atomic<std::uint64_t> hits_{0};
  std::atomic<std::uint64_t> misses_{0};
  std::vector<std::vector<std::unique_ptr<Shard>>> memo_;
};

/// a_n = s_n(1324, 0).
BigInt count_avoiders(int n, const AvoiderOptions& options = {});

struct UptoResult {
  /// values[m-1] = a_m for every completed m.
  std::vector<BigInt> values;
  /// Cumulative cache statistics after each completed m.
  std::vector<CacheStats> stats;
  /// Set when the run stopped early (memory cap, overflow).
  std::optional<std::string> aborted;
  /// Which limit stopped the run, when aborted.
  bool aborted_by_resource_limit = false;
};

/// a_1..a_nmax computed consecutively with one shared cache. A resource
/// limit ends the run and keeps the completed prefix.
UptoResult count_avoiders_upto(int nmax, const AvoiderOptions& options = {});

/// Largest n accepted by the uncached call counters.
inline constexpr int kMaxUncachedCallsN = 15;

/// Invocations of G needed to evaluate the root of size n with memoization
/// off (base case n <= 1, only admissible branches recursed into).
std::uint64_t count_calls_uncached_single(int n);

/// Total uncached invocations of G for the consecutive run a_1..a_n. This
/// is the convention behind the reference call-count column.
std::uint64_t count_calls_uncached(int n);

// --- implementation --------------------------------------------------------

template <class Ring>
AvoiderEngine<Ring>::AvoiderEngine(Ring ring, AvoiderOptions options)
    : ring_(std::move(ring)), options_(options), budget_(options.memory_cap_bytes) {
  if (options_.threads < 1) throw InvalidInputError("threads must be at least 1");
  memo_.resize(static_cast<std::size_t>(kMaxAvoiderSize) + 1);
  for (int n = 0; n <= kMaxAvoiderSize; ++n) {
    for (int k = 0; k <= n; ++k) memo_[static_cast<std::size_t>(n)].push_back(std::make_unique<Shard>());
  }
}

template <class Ring>
std::size_t AvoiderEngine<Ring>::KeyHash::operator()(const Key& key) const {
  // FNV-1a over 8-byte words, finished with a murmur-style mix.
  std::uint64_t h = 1469598103934665603ULL;
  for (std::size_t w = 0; w < key.size(); w += 8) {
    std::uint64_t word = 0;
    for (std::size_t b = 0; b < 8 && w + b < key.size(); ++b) word |= std::uint64_t{key[w + b]} << (8 * b);
    h = (h ^ word) * 1099511628211ULL;
  }
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  return static_cast<std::size_t>(h);
}

template <class Ring>
auto AvoiderEngine<Ring>::memo_key(const detail::PackedAvoiderState& s) -> Key {
  // Column n is never read by a branch exponent, so a leftmost 1 there is
  // the same as an all-zero row.
  Key key{};
  const auto cap = static_cast<std::uint8_t>(s.n > 0 ? s.n - 1 : 0);
  for (int j = 0; j < s.n; ++j) key[static_cast<std::size_t>(j)] = std::min(s.bt[static_cast<std::size_t>(j)], cap);
  return key;
}

template <class Ring>
auto AvoiderEngine<Ring>::lookup(const detail::PackedAvoiderState& s) -> std::optional<Value> {
  Shard& sh = shard(s.n, memo_k(s));
  const Key key = memo_key(s);
  std::shared_lock lock(sh.mutex, std::defer_lock);
  if (concurrent_) lock.lock();
  if (auto it = sh.map.find(key); it != sh.map.end()) {
    hits_.fetch_add(1, std::memory_order_relaxed);
    return it->second;
  }
  return std::nullopt;
}

template <class Ring>
void AvoiderEngine<Ring>::store(const detail::PackedAvoiderState& s, const Value& value) {
  Shard& sh = shard(s.n, memo_k(s));
  std::unique_lock lock(sh.mutex, std::defer_lock);
  if (concurrent_) lock.lock();
  const auto [it, inserted] = sh.map.try_emplace(memo_key(s), value);
  if (!inserted) return;  // another thread got here first with the same value
  constexpr std::size_t slot_bytes = sizeof(typename Map::value_type) + 1;
  std::size_t charge = ring_.bytes(value) - sizeof(Value);
  if (sh.map.capacity() != sh.charged_capacity) {
    charge += (sh.map.capacity() - sh.charged_capacity) * slot_bytes;
    sh.charged_capacity = sh.map.capacity();
  }
  budget_.charge(charge);
}

template <class Ring>
auto AvoiderEngine<Ring>::eval(const detail::PackedAvoiderState& s) -> Value {
  if (auto cached = lookup(s)) return std::move(*cached);
  misses_.fetch_add(1, std::memory_order_relaxed);
  Value acc = ring_.zero();
  if (s.n <= 1) {
    acc = ring_.one();
  } else {
    for (int i = 1; i <= s.n; ++i) {
      if (!detail::admissible(s, i)) continue;
      ring_.accumulate(acc, eval(detail::step(s, i)), s.n, i);
    }
  }
  store(s, acc);
  return acc;
}

template <class Ring>
auto AvoiderEngine<Ring>::eval_parallel_root(const detail::PackedAvoiderState& root) -> Value {
  if (auto cached = lookup(root)) return std::move(*cached);
  misses_.fetch_add(1, std::memory_order_relaxed);
  std::vector<int> branches;
  for (int i = 1; i <= root.n; ++i) {
    if (detail::admissible(root, i)) branches.push_back(i);
  }
  std::vector<std::optional<Value>> results(branches.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  concurrent_ = true;
  ever_parallel_ = true;
  {
    std::vector<std::jthread> workers;
    const auto count = std::min<std::size_t>(static_cast<std::size_t>(options_.threads), branches.size());
    for (std::size_t w = 0; w < count; ++w) {
      workers.emplace_back([&] {
        for (std::size_t idx = next.fetch_add(1); idx < branches.size(); idx = next.fetch_add(1)) {
          try {
            results[idx] = eval(detail::step(root, branches[idx]));
          } catch (...) {
            std::lock_guard guard(error_mutex);
            if (!error) error = std::current_exception();
          }
        }
      });
    }
  }
  concurrent_ = false;
  if (error) std::rethrow_exception(error);
  // Summing in branch order keeps the result independent of scheduling.
  Value acc = ring_.zero();
  for (std::size_t idx = 0; idx < branches.size(); ++idx) ring_.accumulate(acc, *results[idx], root.n, branches[idx]);
  store(root, acc);
  return acc;
}

template <class Ring>
auto AvoiderEngine<Ring>::count(int n) -> Value {
  return evaluate(AvoiderState::root(n));
}

template <class Ring>
auto AvoiderEngine<Ring>::evaluate(const AvoiderState& state) -> Value {
  if (state.n < 0 || state.n > kMaxAvoiderSize) {
    throw InvalidInputError("n must be in 0.." + std::to_string(kMaxAvoiderSize));
  }
  if (!state.valid()) throw InvalidInputError("invalid avoider state");
  const auto packed = detail::pack(state);
  if (options_.threads > 1 && state.n >= 3) return eval_parallel_root(packed);
  return eval(packed);
}

template <class Ring>
CacheStats AvoiderEngine<Ring>::stats() const {
  CacheStats s;
  s.hits = hits_.load();
  s.misses = misses_.load();
  for (const auto& row : memo_) {
    for (const auto& sh : row) s.entries += sh->map.size();
  }
  s.peak_bytes = budget_.peak();
  s.reproducible = !ever_parallel_;
  return s;
}

}  // namespace pat1324

#endif  // PAT1324_AVOIDER_HPP
