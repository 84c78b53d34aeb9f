#include "pat1324/avoider.hpp"

#include <chrono>
#include <map>

namespace pat1324 {

AvoiderState AvoiderState::root(int n) {
  if (n < 0) throw InvalidInputError("n must be non-negative");
  return AvoiderState{n, n, std::vector<int>(static_cast<std::size_t>(n), n + 1)};
}

bool AvoiderState::valid() const {
  if (n < 0 || k < 0 || k > n || static_cast<int>(b.size()) != n) return false;
  for (int j = 1; j <= n; ++j) {
    const int bj = b[static_cast<std::size_t>(j) - 1];
    if (bj < j || bj > n + 1) return false;
  }
  return true;
}

CacheStats CacheStats::operator-(const CacheStats& earlier) const {
  CacheStats d = *this;
  d.hits -= earlier.hits;
  d.misses -= earlier.misses;
  d.entries -= earlier.entries;
  return d;
}

namespace detail {

PackedAvoiderState pack(const AvoiderState& state) {
  if (state.n > kMaxAvoiderSize) throw InvalidInputError("state larger than the key layout");
  PackedAvoiderState p;
  p.n = static_cast<std::uint8_t>(state.n);
  p.k = static_cast<std::uint8_t>(state.k);
  for (int j = 0; j < state.n; ++j) {
    p.bt[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(state.b[static_cast<std::size_t>(j)] - 1);
  }
  return p;
}

AvoiderState unpack(const PackedAvoiderState& p) {
  AvoiderState s{p.n, p.k, std::vector<int>(p.n)};
  for (int j = 0; j < p.n; ++j) s.b[static_cast<std::size_t>(j)] = p.bt[static_cast<std::size_t>(j)] + 1;
  return s;
}

}  // namespace detail

std::vector<int> admissible_branches(const AvoiderState& state) {
  if (!state.valid()) throw InvalidInputError("invalid avoider state");
  std::vector<int> out;
  for (int i = 1; i <= state.n; ++i) {
    if (state.b[static_cast<std::size_t>(i) - 1] >= state.n) out.push_back(i);
  }
  return out;
}

AvoiderState transition(const AvoiderState& state, int i) {
  if (!state.valid()) throw InvalidInputError("invalid avoider state");
  if (i < 1 || i > state.n || state.b[static_cast<std::size_t>(i) - 1] < state.n) {
    throw ContractViolation("branch " + std::to_string(i) + " is not admissible");
  }
  return detail::unpack(detail::step(detail::pack(state), i));
}

namespace {

template <class Ring>
UptoResult run_upto(int nmax, const AvoiderOptions& options) {
  AvoiderEngine<Ring> engine(Ring{}, options);
  UptoResult result;
  const auto start = std::chrono::steady_clock::now();
  for (int n = 1; n <= nmax; ++n) {
    try {
      result.values.push_back(to_bigint(engine.count(n)));
    } catch (const ResourceLimitError& e) {
      result.aborted = e.what();
      result.aborted_by_resource_limit = true;
      break;
    } catch (const CounterOverflowError& e) {
      result.aborted = e.what();
      break;
    }
    result.stats.push_back(engine.stats());
    if (options.progress != nullptr) {
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
      *options.progress << "n=" << n << " a_n=" << result.values.back() << " elapsed=" << elapsed.count()
                        << "s entries=" << result.stats.back().entries << '\n';
    }
  }
  return result;
}

}  // namespace

UptoResult count_avoiders_upto(int nmax, const AvoiderOptions& options) {
  if (nmax < 1) throw InvalidInputError("nmax must be at least 1");
  if (nmax > kMaxAvoiderSize) {
    throw InvalidInputError("nmax exceeds the key layout limit of " + std::to_string(kMaxAvoiderSize));
  }
  return options.fixed_width ? run_upto<Fixed128Ring>(nmax, options) : run_upto<CountRing>(nmax, options);
}

BigInt count_avoiders(int n, const AvoiderOptions& options) {
  if (n < 0 || n > kMaxAvoiderSize) throw InvalidInputError("n must be in 0.." + std::to_string(kMaxAvoiderSize));
  if (options.fixed_width) {
    AvoiderEngine<Fixed128Ring> engine(Fixed128Ring{}, options);
    return to_bigint(engine.count(n));
  }
  AvoiderEngine<CountRing> engine(CountRing{}, options);
  return engine.count(n);
}

namespace {

// Calls made by G below state s without memoization, itself included.
// Memoized here only to make the count cheap; the count is the uncached one.
class UncachedCallCounter {
 public:
  std::uint64_t calls(const detail::PackedAvoiderState& s) {
    if (s.n <= 1) return 1;
    auto key = std::make_pair(s.n, std::vector<std::uint8_t>(s.bt.begin(), s.bt.begin() + s.n));
    key.second.push_back(s.k);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::uint64_t total = 1;
    for (int i = 1; i <= s.n; ++i) {
      if (detail::admissible(s, i)) total += calls(detail::step(s, i));
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  std::map<std::pair<int, std::vector<std::uint8_t>>, std::uint64_t> memo_;
};

void check_uncached_n(int n) {
  if (n < 0) throw InvalidInputError("n must be non-negative");
  if (n > kMaxUncachedCallsN) {
    throw ResourceLimitError("uncached call counts are limited to n <= " + std::to_string(kMaxUncachedCallsN));
  }
}

}  // namespace

std::uint64_t count_calls_uncached_single(int n) {
  check_uncached_n(n);
  UncachedCallCounter counter;
  return counter.calls(detail::pack(AvoiderState::root(n)));
}

std::uint64_t count_calls_uncached(int n) {
  check_uncached_n(n);
  UncachedCallCounter counter;
  std::uint64_t total = 0;
  for (int m = 1; m <= n; ++m) total += counter.calls(detail::pack(AvoiderState::root(m)));
  return total;
}

}  // namespace pat1324
