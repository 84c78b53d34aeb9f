#include "pat1324/fe_engine.hpp"

#include <algorithm>

namespace pat1324 {

namespace {

Exponent saturate(unsigned value, int cap) {
  return static_cast<Exponent>(std::min(value, static_cast<unsigned>(cap)));
}

void check_branch(int n, int i) {
  if (n < 1 || i < 1 || i > n) {
    throw InvalidInputError("branch index " + std::to_string(i) + " out of range 1.." + std::to_string(n));
  }
}

}  // namespace

ExponentMatrix::ExponentMatrix(int n, int cap)
    : n_(n), cap_(cap), cells_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n + 1) / 2, 0) {
  if (n < 0) throw InvalidInputError("matrix size must be non-negative");
  if (cap < 1 || cap > 255) throw InvalidInputError("saturation cap must be in 1..255");
}

void ExponentMatrix::set(int i, int j, unsigned value) {
  if (i < 1 || j < 1 || i > n_ || j > n_) throw InvalidInputError("matrix index out of range");
  if (i > j) return;
  cells_[index(i, j)] = saturate(value, cap_);
}

ExponentState ExponentState::zero(int n, int r) {
  return ExponentState{ExponentMatrix(n, r + 1), std::vector<Exponent>(static_cast<std::size_t>(n), 0)};
}

ExponentMatrix r2prime(const ExponentState& state, int i) {
  const int n = state.size();
  check_branch(n, i);
  ExponentMatrix out(n - 1, state.cap());
  // old row/column -> new row/column
  const auto new_row = [i](int k) { return k < i ? k : k - 1; };
  if (i == 1) {
    for (int k = 2; k <= n; ++k) {
      for (int c = k; c <= n; ++c) out.set(k - 1, c - 1, state.u(k, c));
    }
    return out;
  }
  unsigned prefix = 0;
  for (int k = 1; k <= n; ++k) {
    if (k <= i - 1) prefix += state.v[static_cast<std::size_t>(k) - 1];
    if (k == i) continue;
    const int row = new_row(k);
    for (int c = k; c <= n; ++c) {
      if (c == i - 1 || c == i) continue;
      out.set(row, c < i ? c : c - 1, state.u(k, c));
    }
    if (k <= i - 1) out.set(row, i - 1, prefix + state.u(k, i - 1) + state.u(k, i));
  }
  return out;
}

std::vector<Exponent> v_update(std::span<const Exponent> v, int i, int cap) {
  const int n = static_cast<int>(v.size());
  check_branch(n, i);
  std::vector<Exponent> out(v.begin(), v.end());
  if (i == n) {
    out.pop_back();
    return out;
  }
  const auto pos = static_cast<std::size_t>(i) - 1;
  out[pos] = saturate(static_cast<unsigned>(v[pos]) + v[pos + 1] + 1, cap);
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(pos) + 1);
  return out;
}

ExponentState successor(const ExponentState& state, int i) {
  return ExponentState{r2prime(state, i), v_update(state.v, i, state.cap())};
}

std::uint64_t branch_exponent(const ExponentState& state, int i) {
  const int n = state.size();
  check_branch(n, i);
  std::uint64_t e = 0;
  for (int j = i; j <= n - 1; ++j) e += static_cast<std::uint64_t>(n - j) * state.u(i, j);
  return e;
}

TruncatedCounterSeries series_counts(int n, int r, const EngineOptions& options) {
  if (n < 0) throw InvalidInputError("n must be non-negative");
  SeriesEngine<CountRing> engine(r, CountRing{}, options);
  return TruncatedCounterSeries{r, engine.evaluate_top(n)};
}

TruncatedCounterSeries series_counts_checked(int n, int r, int oracle_cap) {
  const auto oracle = brute_force_distribution(n, Permutation({1, 3, 2, 4}), oracle_cap);
  auto series = series_counts(n, r);
  for (int j = 0; j <= r; ++j) {
    const auto it = oracle.find(static_cast<std::uint64_t>(j));
    const BigInt expected = it == oracle.end() ? BigInt(0) : BigInt(it->second);
    if (series.coeffs[static_cast<std::size_t>(j)] != expected) {
      throw ConsistencyError("series_counts(" + std::to_string(n) + ", " + std::to_string(r) +
                             ") coefficient " + std::to_string(j) + " = " +
                             to_decimal(series.coeffs[static_cast<std::size_t>(j)]) +
                             ", oracle says " + to_decimal(expected));
    }
  }
  return series;
}

}  // namespace pat1324
