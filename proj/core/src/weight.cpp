#include "pat1324/weight.hpp"

#include <vector>

#include "pat1324/errors.hpp"

namespace pat1324 {

namespace {

void bump(ExponentMap& m, int i, int j, std::uint64_t by = 1) {
  if (by != 0) m[{i, j}] += by;
}

}  // namespace

WeightExponents weight_exponents(const Permutation& pi) {
  const int n = pi.size();
  WeightExponents w;
  w.t_exp = count_1324(pi);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (pi[a] >= pi[b]) continue;
      for (int j = pi[a]; j < pi[b]; ++j) bump(w.x_exp, pi[a], j);
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (pi[b] >= pi[a]) continue;
      for (int c = b + 1; c < n; ++c) {
        if (pi[c] <= pi[a]) continue;
        for (int j = 1; j <= pi[b]; ++j) bump(w.y_exp, pi[a], j);
      }
    }
  }
  return w;
}

WeightExponents weight_by_first_letter(const Permutation& pi) {
  const int n = pi.size();
  if (n < 1) throw InvalidInputError("weight_by_first_letter needs a non-empty permutation");
  const int i = pi[0];
  std::vector<int> tail(pi.entries().begin() + 1, pi.entries().end());
  const WeightExponents inner = weight_exponents(reduce(std::span<const int>(tail)));

  WeightExponents out;
  out.t_exp = inner.t_exp;
  for (int j = i; j <= n - 1; ++j) bump(out.x_exp, i, j, static_cast<std::uint64_t>(n - j));

  for (const auto& [key, e] : inner.x_exp) {
    const auto [b, c] = key;
    if (b < i && c >= i) {
      bump(out.x_exp, b, c + 1, e);
    } else if (b >= i && c >= i) {
      bump(out.x_exp, b + 1, c + 1, e);
    } else if (b < i && c == i - 1) {
      for (int l = 1; l <= b; ++l) bump(out.y_exp, i, l, e);
      bump(out.x_exp, b, c, e);
      bump(out.x_exp, b, c + 1, e);
    } else {
      bump(out.x_exp, b, c, e);
    }
  }
  for (const auto& [key, e] : inner.y_exp) {
    const auto [b, c] = key;
    if (b < i) {
      bump(out.y_exp, b, c, e);
    } else if (c < i) {
      bump(out.y_exp, b + 1, c, e);
    } else if (c > i) {
      bump(out.y_exp, b + 1, c + 1, e);
    } else {
      out.t_exp += e;
      bump(out.y_exp, b + 1, c, e);
      bump(out.y_exp, b + 1, c + 1, e);
    }
  }
  return out;
}

bool lemma1_check(const Permutation& pi) { return weight_exponents(pi) == weight_by_first_letter(pi); }

}  // namespace pat1324
