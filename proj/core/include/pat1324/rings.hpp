#ifndef PAT1324_RINGS_HPP
#define PAT1324_RINGS_HPP

#include <cstddef>
#include <string>

#include "pat1324/bigint.hpp"
#include "pat1324/errors.hpp"

namespace pat1324 {

// A "ring" tells the recursive engines what a memoized value is and how a
// child's value enters its parent's sum. accumulate() receives the parent's
// size n and the branch index i (1..n) so that refined counts can attach a
// branch-dependent weight.
//
//   value_type zero() const;
//   value_type one() const;                  // value at the base case
//   void accumulate(value_type& acc, const value_type& child, int n, int i) const;
//   std::size_t bytes(const value_type&) const;

/// Plain arbitrary-precision counting.
struct CountRing {
  using value_type = BigInt;
  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  void accumulate(value_type& acc, const value_type& child, int, int) const { acc += child; }
  std::size_t bytes(const value_type& v) const { return sizeof(value_type) + heap_bytes(v); }
};

/// Fixed-width counting; throws CounterOverflowError instead of wrapping.
struct Fixed128Ring {
  using value_type = unsigned __int128;
  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  void accumulate(value_type& acc, const value_type& child, int, int) const {
    if (__builtin_add_overflow(acc, child, &acc)) {
      throw CounterOverflowError("128-bit counter overflow; rerun with arbitrary precision");
    }
  }
  std::size_t bytes(const value_type&) const { return sizeof(value_type); }
};

inline BigInt to_bigint(unsigned __int128 v) {
  BigInt out = static_cast<std::uint64_t>(v >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(v);
  return out;
}

inline BigInt to_bigint(const BigInt& v) { return v; }

}  // namespace pat1324

#endif  // PAT1324_RINGS_HPP
