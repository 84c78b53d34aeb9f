#ifndef PAT1324_MEMORY_BUDGET_HPP
#define PAT1324_MEMORY_BUDGET_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <string>

#include "pat1324/errors.hpp"

namespace pat1324 {

inline constexpr std::size_t kGiB = std::size_t{1} << 30;
inline constexpr std::size_t kDefaultMemoryCap = 4 * kGiB;

/// Approximate accounting of memo-table bytes. Thread-safe.
class MemoryBudget {
 public:
  explicit MemoryBudget(std::size_t cap = kDefaultMemoryCap) : cap_(cap) {}

  void charge(std::size_t bytes) {
    const std::size_t now = used_.fetch_add(bytes, std::memory_order_relaxed) + bytes;
    std::size_t peak = peak_.load(std::memory_order_relaxed);
    while (now > peak && !peak_.compare_exchange_weak(peak, now, std::memory_order_relaxed)) {
    }
    if (now > cap_) {
      throw ResourceLimitError("memo table exceeded memory cap of " + std::to_string(cap_) +
                               " bytes (approx. " + std::to_string(now) + " in use)");
    }
  }

  void release(std::size_t bytes) { used_.fetch_sub(bytes, std::memory_order_relaxed); }

  std::size_t used() const { return used_.load(std::memory_order_relaxed); }
  std::size_t peak() const { return peak_.load(std::memory_order_relaxed); }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
  std::atomic<std::size_t> used_{0};
  std::atomic<std::size_t> peak_{0};
};

}  // namespace pat1324

#endif  // PAT1324_MEMORY_BUDGET_HPP
