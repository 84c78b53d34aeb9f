#include "pat1324/inversion.hpp"

#include <algorithm>

namespace pat1324 {

BigInt InversionPolynomial::total() const {
  BigInt sum = 0;
  for (const auto& c : coeffs) sum += c;
  return sum;
}

InversionPolynomial InversionPolynomial::reversed() const {
  return InversionPolynomial{std::vector<BigInt>(coeffs.rbegin(), coeffs.rend())};
}

BigInt InversionPolynomial::at(std::size_t k) const { return k < coeffs.size() ? coeffs[k] : BigInt(0); }

void InversionPolynomial::add_shifted(const InversionPolynomial& other, int shift, std::optional<int> max_degree) {
  std::size_t end = other.coeffs.size() + static_cast<std::size_t>(shift);
  if (max_degree) end = std::min(end, static_cast<std::size_t>(*max_degree) + 1);
  if (end <= static_cast<std::size_t>(shift)) return;
  if (coeffs.size() < end) coeffs.resize(end, BigInt(0));
  for (std::size_t k = static_cast<std::size_t>(shift); k < end; ++k) coeffs[k] += other.coeffs[k - static_cast<std::size_t>(shift)];
}

std::size_t InversionRing::bytes(const value_type& v) const {
  std::size_t total = sizeof(value_type);
  for (const auto& c : v.coeffs) total += sizeof(BigInt) + heap_bytes(c);
  return total;
}

std::size_t inversion_length(int n, std::optional<int> kmax) {
  const std::size_t full = static_cast<std::size_t>(n) * static_cast<std::size_t>(std::max(n - 1, 0)) / 2 + 1;
  return kmax ? std::min(full, static_cast<std::size_t>(*kmax) + 1) : full;
}

namespace {

void check_n(int n) {
  if (n < 1) throw InvalidInputError("n must be at least 1");
  if (n > kMaxAvoiderSize) throw InvalidInputError("n exceeds the key layout limit");
}

void check_kmax(std::optional<int> kmax) {
  if (kmax && *kmax < 0) throw InvalidInputError("kmax must be non-negative");
}

AvoiderOptions avoider_options(const InversionOptions& options) {
  AvoiderOptions out;
  out.memory_cap_bytes = options.memory_cap_bytes;
  out.threads = options.threads;
  return out;
}

InversionPolynomial avoiders_by(InversionStatistic statistic, int n, const InversionOptions& options) {
  check_n(n);
  check_kmax(options.kmax);
  AvoiderEngine<InversionRing> engine(InversionRing{statistic, options.kmax}, avoider_options(options));
  auto poly = engine.count(n);
  poly.resize(inversion_length(n, options.kmax));
  return poly;
}

}  // namespace

InversionPolynomial avoiders_by_inversions(int n, const InversionOptions& options) {
  return avoiders_by(InversionStatistic::inversions, n, options);
}

InversionPolynomial avoiders_by_noninversions(int n, const InversionOptions& options) {
  return avoiders_by(InversionStatistic::noninversions, n, options);
}

std::vector<InversionPolynomial> occurrences_by_inversions(int n, int r, const InversionOptions& options) {
  check_n(n);
  check_kmax(options.kmax);
  EngineOptions engine_options;
  engine_options.memory_cap_bytes = options.memory_cap_bytes;
  SeriesEngine<InversionRing> engine(r, InversionRing{InversionStatistic::inversions, options.kmax}, engine_options);
  auto series = engine.evaluate_top(n);
  for (auto& poly : series) poly.resize(inversion_length(n, options.kmax));
  return series;
}

InversionTable inversion_table(int nmax, const InversionOptions& options) {
  check_n(nmax);
  check_kmax(options.kmax);
  AvoiderEngine<InversionRing> engine(InversionRing{InversionStatistic::inversions, options.kmax},
                                      avoider_options(options));
  InversionTable table;
  table.kmax = options.kmax;
  for (int n = 1; n <= nmax; ++n) {
    auto poly = engine.count(n);
    poly.resize(inversion_length(n, options.kmax));
    table.rows.push_back(std::move(poly));
  }
  return table;
}

std::vector<MonotonicityViolation> monotonicity_violations(const InversionTable& table, int kmax) {
  std::vector<MonotonicityViolation> out;
  if (table.kmax && kmax > *table.kmax) throw InvalidInputError("kmax exceeds the table's truncation degree");
  for (int k = 0; k <= kmax; ++k) {
    for (int n = 1; n < table.nmax(); ++n) {
      BigInt here = table.at(n, k);
      BigInt next = table.at(n + 1, k);
      if (here > next) out.push_back({n, k, std::move(here), std::move(next)});
    }
  }
  return out;
}

std::vector<MonotonicityViolation> check_monotonicity(int nmax, int kmax, const InversionOptions& options) {
  if (nmax < 2) throw InvalidInputError("nmax must be at least 2");
  if (kmax < 0) throw InvalidInputError("kmax must be non-negative");
  InversionOptions truncated = options;
  truncated.kmax = kmax;
  return monotonicity_violations(inversion_table(nmax, truncated), kmax);
}

}  // namespace pat1324
