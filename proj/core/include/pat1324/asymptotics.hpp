#ifndef PAT1324_ASYMPTOTICS_HPP
#define PAT1324_ASYMPTOTICS_HPP

#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "pat1324/bigint.hpp"

namespace pat1324 {

/// 50 significant decimal digits.
using Real = boost::multiprecision::cpp_bin_float_50;

/// Empirical estimate of (mu, theta) in a_n ~ C mu^n n^theta using terms up
/// to index n. Nothing here claims mu is the Stanley-Wilf limit.
struct FitResult {
  int n = 0;
  Real mu;
  Real theta;
};

/// Sequences are passed with a[0] = a_1.
std::vector<Real> to_reals(std::span<const BigInt> a);

/// The (mu, theta) for which C mu^m m^theta matches a_{n-2}, a_{n-1}, a_n:
///   theta = log(r_n / r_{n-1}) / log(n(n-2) / (n-1)^2),  mu = r_n / (n/(n-1))^theta
/// with r_m = a_m / a_{m-1}.
FitResult fit_three_term(std::span<const Real> a, int n);
FitResult fit_three_term(std::span<const BigInt> a, int n);

/// One three-term fit per n in [nmin, nmax].
std::vector<FitResult> fit_profile(std::span<const Real> a, int nmin, int nmax);
std::vector<FitResult> fit_profile(std::span<const BigInt> a, int nmin, int nmax);

/// Alternative: least-squares fit of log a_m = c + m log mu + theta log m
/// over the window m = n-window+1 .. n (window >= 3).
FitResult fit_least_squares(std::span<const Real> a, int n, int window);

/// Formats with `digits` significant digits.
std::string format_real(const Real& x, int digits = 10);

}  // namespace pat1324

#endif  // PAT1324_ASYMPTOTICS_HPP
