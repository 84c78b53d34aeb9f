#include "pat1324/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "pat1324/errors.hpp"

namespace pat1324 {

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : entries_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw InvalidInputError("not a permutation of 1.." + std::to_string(n));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  return Permutation(std::move(e));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> e;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '0' || c > '9') throw InvalidInputError("bad permutation literal: " + std::string(text));
      e.push_back(c - '0');
    }
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      const auto end = std::min(text.find(',', start), text.size());
      const auto piece = text.substr(start, end - start);
      int v = 0;
      auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
      if (ec != std::errc{} || ptr != piece.data() + piece.size()) {
        throw InvalidInputError("bad permutation literal: " + std::string(text));
      }
      e.push_back(v);
      start = end + 1;
    }
  }
  return Permutation(std::move(e));
}

Permutation Permutation::reversed() const {
  std::vector<int> e(entries_.rbegin(), entries_.rend());
  return Permutation(std::move(e));
}

std::string Permutation::to_string() const {
  std::string out;
  const bool compact = size() <= 9;
  for (std::size_t p = 0; p < entries_.size(); ++p) {
    if (!compact && p > 0) out += ',';
    out += std::to_string(entries_[p]);
  }
  return out;
}

namespace {

template <class T>
Permutation reduce_impl(std::span<const T> seq) {
  std::vector<std::size_t> order(seq.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return seq[a] < seq[b]; });
  std::vector<int> out(seq.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    if (rank > 0 && seq[order[rank]] == seq[order[rank - 1]]) {
      throw InvalidInputError("reduce: duplicate entry " + std::to_string(seq[order[rank]]));
    }
    out[order[rank]] = static_cast<int>(rank) + 1;
  }
  return Permutation(std::move(out));
}

// Extends a partial occurrence ending at position `last` with pattern entry `depth`.
std::uint64_t extend_occurrence(const Permutation& pi, const Permutation& tau,
                                std::vector<int>& chosen, int depth) {
  if (depth == tau.size()) return 1;
  std::uint64_t total = 0;
  const int first = depth == 0 ? 0 : chosen[static_cast<std::size_t>(depth) - 1] + 1;
  const int slack = tau.size() - depth - 1;
  for (int p = first; p + slack < pi.size(); ++p) {
    bool consistent = true;
    for (int l = 0; l < depth && consistent; ++l) {
      const int q = chosen[static_cast<std::size_t>(l)];
      consistent = (pi[q] < pi[p]) == (tau[l] < tau[depth]);
    }
    if (!consistent) continue;
    chosen[static_cast<std::size_t>(depth)] = p;
    total += extend_occurrence(pi, tau, chosen, depth + 1);
  }
  return total;
}

void check_oracle_size(int n, int cap) {
  if (n < 0) throw InvalidInputError("n must be non-negative");
  if (n > cap) {
    throw ResourceLimitError("brute force oracle refuses n=" + std::to_string(n) +
                             " (cap " + std::to_string(cap) + ")");
  }
}

}  // namespace

Permutation reduce(std::span<const long long> seq) { return reduce_impl(seq); }
Permutation reduce(std::span<const int> seq) { return reduce_impl(seq); }

std::uint64_t count_occurrences(const Permutation& pi, const Permutation& tau) {
  if (tau.size() < 1) throw InvalidInputError("pattern must be non-empty");
  if (tau.size() > pi.size()) return 0;
  std::vector<int> chosen(static_cast<std::size_t>(tau.size()));
  return extend_occurrence(pi, tau, chosen, 0);
}

std::uint64_t count_1324(const Permutation& pi) {
  // Every occurrence is a "32" pair (b, c) with a smaller entry to the left
  // and a larger entry to the right.
  const int n = pi.size();
  if (n < 4) return 0;
  const auto idx = [n](int pos, int value) { return static_cast<std::size_t>(pos * (n + 2) + value); };
  // below[pos][v] = #{a < pos : pi_a < v};  above[pos][v] = #{d > pos : pi_d > v}
  std::vector<int> below(static_cast<std::size_t>(n * (n + 2)), 0);
  std::vector<int> above(static_cast<std::size_t>(n * (n + 2)), 0);
  for (int pos = 1; pos < n; ++pos) {
    for (int v = 1; v <= n; ++v) below[idx(pos, v)] = below[idx(pos - 1, v)] + (pi[pos - 1] < v ? 1 : 0);
  }
  for (int pos = n - 2; pos >= 0; --pos) {
    for (int v = 1; v <= n; ++v) above[idx(pos, v)] = above[idx(pos + 1, v)] + (pi[pos + 1] > v ? 1 : 0);
  }
  std::uint64_t total = 0;
  for (int b = 1; b < n - 2; ++b) {
    for (int c = b + 1; c < n - 1; ++c) {
      if (pi[b] <= pi[c]) continue;
      total += static_cast<std::uint64_t>(below[idx(b, pi[c])]) *
               static_cast<std::uint64_t>(above[idx(c, pi[b])]);
    }
  }
  return total;
}

std::uint64_t inversions(const Permutation& pi) {
  std::uint64_t total = 0;
  for (int a = 0; a < pi.size(); ++a) {
    for (int b = a + 1; b < pi.size(); ++b) total += pi[a] > pi[b] ? 1 : 0;
  }
  return total;
}

namespace {

std::uint64_t occurrences_for(const Permutation& pi, const Permutation& tau, bool is_1324) {
  return is_1324 ? count_1324(pi) : count_occurrences(pi, tau);
}

}  // namespace

Distribution brute_force_distribution(int n, const Permutation& tau, int cap) {
  check_oracle_size(n, cap);
  const bool is_1324 = tau == Permutation({1, 3, 2, 4});
  Distribution out;
  for_each_permutation(n, [&](const Permutation& pi) { ++out[occurrences_for(pi, tau, is_1324)]; });
  return out;
}

JointDistribution brute_force_joint(int n, const Permutation& tau, int cap) {
  check_oracle_size(n, cap);
  const bool is_1324 = tau == Permutation({1, 3, 2, 4});
  JointDistribution out;
  for_each_permutation(n, [&](const Permutation& pi) {
    ++out[{occurrences_for(pi, tau, is_1324), inversions(pi)}];
  });
  return out;
}

}  // namespace pat1324
