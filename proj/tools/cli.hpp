#ifndef PAT1324_TOOLS_CLI_HPP
#define PAT1324_TOOLS_CLI_HPP

#include <cstddef>
#include <filesystem>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "pat1324/bigint.hpp"
#include "pat1324/memory_budget.hpp"
#include "pat1324/permutation.hpp"

namespace pat1324::cli {

enum class Subcommand { avoid, occur, invtable, fit, verify, stats };
enum class OutputFormat { csv, json, plain };
enum class FitMethod { three_term, least_squares };

namespace exit_code {
inline constexpr int success = 0;
inline constexpr int verification_failure = 1;
inline constexpr int invalid_input = 2;
inline constexpr int resource_limit = 3;
}  // namespace exit_code

inline constexpr const char* kMemoryCapEnv = "PAT1324_MEMORY_CAP";

struct RunConfig {
  Subcommand subcommand = Subcommand::avoid;
  std::optional<int> nmax;  // per-command default when unset
  int nmin = 3;             // fit only
  int r = 0;
  std::optional<int> kmax;
  OutputFormat format = OutputFormat::csv;
  std::size_t memory_cap_bytes = kDefaultMemoryCap;
  int threads = 1;
  std::optional<std::filesystem::path> fixture_path;  // "-" reads stdin
  bool check_monotone = false;
  bool verbose = false;
  bool verbose_cache = false;
  bool fixed_width = false;
  FitMethod fit_method = FitMethod::three_term;
  int window = 5;
  int oracle_cap = kDefaultOracleCap;
};

/// Throws InvalidInputError on a config that violates its invariants.
void validate(const RunConfig& cfg);

/// "4G", "512M", "1048576" -> bytes.
std::size_t parse_byte_size(std::string_view text);

/// Default memory cap: the environment variable if set, otherwise 4 GiB.
std::size_t default_memory_cap();

/// One positive decimal integer per line, line m holding a_m. Lines that
/// start with '#' and blank lines are skipped. Errors name the line number.
std::vector<BigInt> read_fixture(std::istream& in);
std::vector<BigInt> read_fixture(const std::filesystem::path& path);

/// Test-only fault injection for the verification harness.
struct VerifyHooks {
  std::function<BigInt(int n, const BigInt& value)> perturb_avoider_count;
};

int run_avoid(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_occur(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_invtable(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_fit(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err);
int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err, const VerifyHooks& hooks = {});
int run_stats(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Validates, dispatches and maps exceptions onto the exit-code contract.
int run(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace pat1324::cli

#endif  // PAT1324_TOOLS_CLI_HPP
