// Reference implementations written straight from the definitions. They
// share nothing with the library beyond the Permutation container.
#ifndef PAT1324_TESTS_ORACLES_HPP
#define PAT1324_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Perm = std::vector<int>;
using BigInt = boost::multiprecision::cpp_int;
using Real = boost::multiprecision::cpp_bin_float_50;

inline void all_perms(int n, const std::function<void(const Perm&)>& f) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  do f(p);
  while (std::next_permutation(p.begin(), p.end()));
}

// Same relative order, checked pairwise.
inline bool isomorphic(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if ((a[i] < a[j]) != (b[i] < b[j])) return false;
  return true;
}

// Walks every k-subset of positions through a bitmask (n <= 20).
inline std::uint64_t occurrences(const Perm& pi, const Perm& tau) {
  const int n = static_cast<int>(pi.size());
  const int k = static_cast<int>(tau.size());
  std::uint64_t count = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    std::vector<int> sub;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) sub.push_back(pi[static_cast<std::size_t>(i)]);
    if (isomorphic(sub, tau)) ++count;
  }
  return count;
}

inline std::uint64_t inversions(const Perm& pi) {
  std::uint64_t inv = 0;
  for (std::size_t a = 0; a < pi.size(); ++a)
    for (std::size_t b = a + 1; b < pi.size(); ++b) inv += pi[a] > pi[b];
  return inv;
}

struct Weight {
  std::uint64_t t = 0;
  std::map<std::pair<int, int>, std::uint64_t> x, y;
};

inline Weight weight(const Perm& pi) {
  const int n = static_cast<int>(pi.size());
  Weight w;
  w.t = occurrences(pi, {1, 3, 2, 4});
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      std::uint64_t e = 0;
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) e += pi[a] == i && pi[a] < pi[b] && pi[b] > j;
      if (e) w.x[{i, j}] = e;
    }
    for (int j = 1; j <= i; ++j) {
      std::uint64_t e = 0;
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          for (int c = b + 1; c < n; ++c) e += pi[a] == i && pi[b] < pi[a] && pi[a] < pi[c] && pi[b] >= j;
      if (e) w.y[{i, j}] = e;
    }
  }
  return w;
}

// Joint distribution of (1324 occurrences, inversions) over S_n.
inline std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> joint(int n) {
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> m;
  all_perms(n, [&](const Perm& p) { ++m[{occurrences(p, {1, 3, 2, 4}), inversions(p)}]; });
  return m;
}

// C mu^m m^theta for m = 1..len in 50-digit arithmetic.
inline std::vector<Real> ansatz(const Real& c, const Real& mu, const Real& theta, int len) {
  std::vector<Real> a;
  for (int m = 1; m <= len; ++m) a.push_back(c * pow(mu, m) * pow(Real(m), theta));
  return a;
}

}  // namespace oracle

#endif  // PAT1324_TESTS_ORACLES_HPP
