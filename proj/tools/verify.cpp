#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>
#include <tuple>
#include <string>
#include <vector>

#include "cli.hpp"
#include "pat1324/avoider.hpp"
#include "pat1324/errors.hpp"
#include "pat1324/fe_engine.hpp"
#include "pat1324/inversion.hpp"
#include "pat1324/permutation.hpp"
#include "pat1324/weight.hpp"

namespace pat1324::cli {

namespace {

constexpr int kMaxVerifyR = 3;

using Counterexample = std::optional<std::string>;

template <class... Args>
std::string describe(const Args&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

const Permutation& pattern_1324() {
  static const Permutation tau = Permutation::parse("1324");
  return tau;
}

Counterexample oracle_vs_engine(int nmax) {
  for (int n = 1; n <= nmax; ++n) {
    const Distribution oracle = brute_force_distribution(n, pattern_1324(), nmax);
    for (int r = 0; r <= kMaxVerifyR; ++r) {
      const auto series = series_counts(n, r);
      for (int j = 0; j <= r; ++j) {
        const auto it = oracle.find(static_cast<std::uint64_t>(j));
        const BigInt expected = it == oracle.end() ? BigInt(0) : BigInt(it->second);
        if (series.coeffs[static_cast<std::size_t>(j)] != expected) {
          return describe("n=", n, " r=", r, " j=", j, ": engine ", series.coeffs[static_cast<std::size_t>(j)],
                          ", oracle ", expected);
        }
      }
    }
  }
  return std::nullopt;
}

Counterexample engine_vs_avoider(int nmax, const VerifyHooks& hooks) {
  AvoiderEngine<CountRing> avoider;
  for (int n = 1; n <= nmax; ++n) {
    BigInt fast = avoider.count(n);
    if (hooks.perturb_avoider_count) fast = hooks.perturb_avoider_count(n, fast);
    const BigInt reference = series_counts(n, 0).coeffs[0];
    if (fast != reference) return describe("n=", n, ": avoider ", fast, ", series engine ", reference);
  }
  return std::nullopt;
}

Counterexample qrefined_vs_joint(int nmax) {
  for (int n = 1; n <= nmax; ++n) {
    const JointDistribution joint = brute_force_joint(n, pattern_1324(), nmax);
    const auto expected = [&](int j, std::size_t k) {
      const auto it = joint.find({static_cast<std::uint64_t>(j), static_cast<std::uint64_t>(k)});
      return it == joint.end() ? BigInt(0) : BigInt(it->second);
    };
    const std::size_t length = inversion_length(n, std::nullopt);
    const auto avoiders = avoiders_by_inversions(n);
    for (std::size_t k = 0; k < length; ++k) {
      if (avoiders.at(k) != expected(0, k)) {
        return describe("avoiders n=", n, " k=", k, ": engine ", avoiders.at(k), ", oracle ", expected(0, k));
      }
    }
    const auto refined = occurrences_by_inversions(n, kMaxVerifyR);
    for (int j = 0; j <= kMaxVerifyR; ++j) {
      for (std::size_t k = 0; k < length; ++k) {
        const BigInt got = refined[static_cast<std::size_t>(j)].at(k);
        if (got != expected(j, k)) {
          return describe("occurrences n=", n, " j=", j, " k=", k, ": engine ", got, ", oracle ", expected(j, k));
        }
      }
    }
  }
  return std::nullopt;
}

Counterexample reversal_duality(int nmax) {
  for (int n = 1; n <= nmax; ++n) {
    auto inv = avoiders_by_inversions(n);
    auto noninv = avoiders_by_noninversions(n);
    const std::size_t length = inversion_length(n, std::nullopt);
    inv.resize(length);
    noninv.resize(length);
    const auto mirrored = inv.reversed();
    for (std::size_t k = 0; k < length; ++k) {
      if (noninv.at(k) != mirrored.at(k)) {
        return describe("n=", n, " k=", k, ": noninversions ", noninv.at(k), ", reversed inversions ", mirrored.at(k));
      }
    }
  }
  return std::nullopt;
}

Counterexample first_letter_weights(int nmax) {
  Counterexample found;
  for (int n = 1; n <= nmax && !found; ++n) {
    for_each_permutation(n, [&](const Permutation& pi) {
      if (!found && !lemma1_check(pi)) found = describe("pi=", pi.to_string());
    });
  }
  return found;
}

// A representative of the r = 0 state: row j of U is 1 from column b_j on,
// v has k leading zeros followed by ones. With saturation at 1 only the
// leftmost 1 of each row and the first nonzero of v are observable.
ExponentState staircase(const AvoiderState& s) {
  ExponentState e = ExponentState::zero(s.n, 0);
  for (int j = 1; j <= s.n; ++j) {
    for (int c = std::max(j, s.b[static_cast<std::size_t>(j) - 1]); c <= s.n; ++c) e.u.set(j, c, 1);
  }
  for (int j = s.k; j < s.n; ++j) e.v[static_cast<std::size_t>(j)] = 1;
  return e;
}

int leading_zeros(const ExponentState& e, int limit) {
  int k = 0;
  while (k < limit && e.v[static_cast<std::size_t>(k)] == 0) ++k;
  return k;
}

int leftmost_one(const ExponentState& e, int row) {
  int c = row;
  while (c < e.size() && e.u(row, c) == 0) ++c;
  return c;  // n when columns row..n-1 are all zero
}

// Column n and v_n never reach a branch exponent, so they are left out.
bool same_observables(const ExponentState& a, const ExponentState& b) {
  const int n = a.size();
  if (n != b.size()) return false;
  for (int i = 1; i <= n; ++i) {
    if (leftmost_one(a, i) != leftmost_one(b, i)) return false;
  }
  return leading_zeros(a, std::max(n - 1, 0)) == leading_zeros(b, std::max(n - 1, 0));
}

std::string show(const AvoiderState& s) {
  std::string out = describe("(n=", s.n, ", k=", s.k, ", b=[");
  for (std::size_t j = 0; j < s.b.size(); ++j) out += (j ? "," : "") + std::to_string(s.b[j]);
  return out + "])";
}

Counterexample transition_soundness(int nmax) {
  std::vector<AvoiderState> frontier;
  for (int n = 1; n <= nmax; ++n) frontier.push_back(AvoiderState::root(n));
  std::vector<std::vector<std::uint8_t>> seen_keys;
  while (!frontier.empty()) {
    std::vector<AvoiderState> next;
    for (const auto& s : frontier) {
      if (s.n <= 1) continue;
      const ExponentState full = staircase(s);
      const auto branches = admissible_branches(s);
      for (int i = 1; i <= s.n; ++i) {
        const bool admissible = std::find(branches.begin(), branches.end(), i) != branches.end();
        if (admissible != (branch_exponent(full, i) == 0)) {
          return describe(show(s), " i=", i, ": admissibility disagrees with e_i=", branch_exponent(full, i));
        }
        if (!admissible) continue;
        const AvoiderState child = transition(s, i);
        if (!child.valid()) return describe(show(s), " i=", i, ": invalid child ", show(child));
        if (!same_observables(staircase(child), successor(full, i))) {
          return describe(show(s), " i=", i, ": transition gives ", show(child), ", full matrix disagrees");
        }
        next.push_back(child);
      }
    }
    // Deduplicate so the walk covers each reachable state once.
    std::sort(next.begin(), next.end(), [](const AvoiderState& a, const AvoiderState& b) {
      return std::tie(a.n, a.k, a.b) < std::tie(b.n, b.k, b.b);
    });
    next.erase(std::unique(next.begin(), next.end()), next.end());
    frontier = std::move(next);
  }
  return std::nullopt;
}

}  // namespace

int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err, const VerifyHooks& hooks) {
  const int nmax = cfg.nmax.value_or(8);
  if (nmax > cfg.oracle_cap) {
    throw InvalidInputError("verify needs --nmax <= oracle cap (" + std::to_string(cfg.oracle_cap) + ")");
  }
  struct Suite {
    const char* name;
    std::function<Counterexample()> run;
  };
  const std::vector<Suite> suites = {
      {"oracle-vs-engine", [&] { return oracle_vs_engine(nmax); }},
      {"engine-vs-avoider", [&] { return engine_vs_avoider(nmax, hooks); }},
      {"q-refined-vs-joint", [&] { return qrefined_vs_joint(nmax); }},
      {"reversal-duality", [&] { return reversal_duality(nmax); }},
      {"first-letter-weights", [&] { return first_letter_weights(nmax); }},
      {"transition-soundness", [&] { return transition_soundness(nmax); }},
  };
  bool all = true;
  for (const auto& suite : suites) {
    const Counterexample failure = suite.run();
    if (failure) {
      all = false;
      out << "FAIL " << suite.name << ": " << *failure << '\n';
    } else {
      out << "PASS " << suite.name << '\n';
    }
    if (cfg.verbose) err << "verify: " << suite.name << " done\n";
  }
  out << (all ? "PASS" : "FAIL") << " verify n<=" << nmax << '\n';
  return all ? exit_code::success : exit_code::verification_failure;
}

}  // namespace pat1324::cli
