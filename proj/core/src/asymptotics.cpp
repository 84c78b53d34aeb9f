#include "pat1324/asymptotics.hpp"

#include <array>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "pat1324/errors.hpp"

namespace pat1324 {

namespace {

const Real& term(std::span<const Real> a, int m) {
  const Real& v = a[static_cast<std::size_t>(m) - 1];
  if (!(v > 0)) throw InvalidInputError("term a_" + std::to_string(m) + " must be positive");
  return v;
}

void check_index(std::span<const Real> a, int n, int lowest) {
  if (n < 3) throw InvalidInputError("fits need n >= 3");
  if (lowest < 1 || n > static_cast<int>(a.size())) {
    throw InvalidInputError("terms a_" + std::to_string(lowest) + "..a_" + std::to_string(n) + " are not all present");
  }
}

}  // namespace

std::vector<Real> to_reals(std::span<const BigInt> a) {
  std::vector<Real> out;
  out.reserve(a.size());
  for (const auto& x : a) out.emplace_back(x);
  return out;
}

FitResult fit_three_term(std::span<const Real> a, int n) {
  check_index(a, n, n - 2);
  const Real r_n = term(a, n) / term(a, n - 1);
  const Real r_prev = term(a, n - 1) / term(a, n - 2);
  const Real nn = n;
  const Real theta = log(r_n / r_prev) / log(nn * (nn - 2) / ((nn - 1) * (nn - 1)));
  const Real mu = r_n / pow(nn / (nn - 1), theta);
  return FitResult{n, mu, theta};
}

FitResult fit_three_term(std::span<const BigInt> a, int n) {
  const auto reals = to_reals(a);
  return fit_three_term(std::span<const Real>(reals), n);
}

std::vector<FitResult> fit_profile(std::span<const Real> a, int nmin, int nmax) {
  if (nmin < 3) throw InvalidInputError("nmin must be at least 3");
  if (nmax < nmin) throw InvalidInputError("nmax must be at least nmin");
  std::vector<FitResult> out;
  for (int n = nmin; n <= nmax; ++n) out.push_back(fit_three_term(a, n));
  return out;
}

std::vector<FitResult> fit_profile(std::span<const BigInt> a, int nmin, int nmax) {
  const auto reals = to_reals(a);
  return fit_profile(std::span<const Real>(reals), nmin, nmax);
}

FitResult fit_least_squares(std::span<const Real> a, int n, int window) {
  if (window < 3) throw InvalidInputError("least-squares window must be at least 3");
  check_index(a, n, n - window + 1);
  // Normal equations for the basis (1, m, log m).
  std::array<std::array<Real, 4>, 3> m{};
  for (int j = n - window + 1; j <= n; ++j) {
    const std::array<Real, 3> basis{Real(1), Real(j), log(Real(j))};
    const Real y = log(term(a, j));
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) m[r][c] += basis[r] * basis[c];
      m[r][3] += basis[r] * y;
    }
  }
  for (int p = 0; p < 3; ++p) {
    int pivot = p;
    for (int r = p + 1; r < 3; ++r) {
      if (abs(m[r][p]) > abs(m[pivot][p])) pivot = r;
    }
    std::swap(m[p], m[pivot]);
    for (int r = 0; r < 3; ++r) {
      if (r == p) continue;
      const Real f = m[r][p] / m[p][p];
      for (int c = p; c < 4; ++c) m[r][c] -= f * m[p][c];
    }
  }
  return FitResult{n, exp(m[1][3] / m[1][1]), m[2][3] / m[2][2]};
}

std::string format_real(const Real& x, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << (x == 0 ? Real(0) : x);  // no "-0"
  return os.str();
}

}  // namespace pat1324
