#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "cli.hpp"
#include "pat1324/errors.hpp"

using namespace pat1324;

namespace {

void add_common(CLI::App* sub, cli::RunConfig& cfg, std::string& format, std::string& memory_cap) {
  sub->add_option("--format", format, "csv, json or plain")->check(CLI::IsMember({"csv", "json", "plain"}));
  sub->add_option("--memory-cap", memory_cap, "Memory cap, e.g. 2G or 512M");
  sub->add_option("--threads", cfg.threads, "Worker threads");
  sub->add_flag("-v,--verbose", cfg.verbose, "Progress on stderr");
}

}  // namespace

int main(int argc, char** argv) {
  cli::RunConfig cfg;
  std::string format = "csv";
  std::string memory_cap;
  std::string method = "three-term";
  std::string fixture;

  CLI::App app{"Counts 1324-avoiding permutations and related statistics."};
  app.require_subcommand(1);

  auto* avoid = app.add_subcommand("avoid", "a_n for n = 1..nmax");
  auto* occur = app.add_subcommand("occur", "Permutations with exactly j <= r occurrences");
  auto* invtable = app.add_subcommand("invtable", "Avoiders refined by inversion number");
  auto* fit = app.add_subcommand("fit", "Empirical (mu, theta) estimates from a sequence");
  auto* verify = app.add_subcommand("verify", "Cross-check the engines against brute force");
  auto* stats = app.add_subcommand("stats", "Cache statistics of the avoider engine");

  for (auto* sub : {avoid, occur, invtable, fit, verify, stats}) {
    add_common(sub, cfg, format, memory_cap);
    sub->add_option("--nmax", cfg.nmax, "Largest n");
  }
  for (auto* sub : {avoid, stats}) sub->add_flag("--verbose-cache", cfg.verbose_cache, "Cache statistics on stderr");
  avoid->add_flag("--fixed-width", cfg.fixed_width, "128-bit counters (overflow-checked)");
  occur->add_option("--r", cfg.r, "Largest occurrence count")->required();
  invtable->add_option("--kmax", cfg.kmax, "Largest inversion number");
  invtable->add_flag("--check-monotone", cfg.check_monotone, "Check T(n,k) <= T(n+1,k)");
  fit->add_option("--fixture", fixture, "File with a_1, a_2, ... one per line; '-' for stdin");
  fit->add_option("--nmin", cfg.nmin, "Smallest n to fit at");
  fit->add_option("--method", method, "three-term or least-squares")
      ->check(CLI::IsMember({"three-term", "least-squares"}));
  fit->add_option("--window", cfg.window, "Window for least-squares");
  verify->add_option("--oracle-cap", cfg.oracle_cap, "Largest n for brute force");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::exit_code::invalid_input;
  }

  const std::map<CLI::App*, cli::Subcommand> kinds = {
      {avoid, cli::Subcommand::avoid}, {occur, cli::Subcommand::occur}, {invtable, cli::Subcommand::invtable},
      {fit, cli::Subcommand::fit},     {verify, cli::Subcommand::verify}, {stats, cli::Subcommand::stats}};
  cfg.subcommand = kinds.at(app.get_subcommands().front());
  if (!fixture.empty()) cfg.fixture_path = fixture;
  cfg.format = format == "json" ? cli::OutputFormat::json
               : format == "plain" ? cli::OutputFormat::plain
                                   : cli::OutputFormat::csv;
  cfg.fit_method = method == "least-squares" ? cli::FitMethod::least_squares : cli::FitMethod::three_term;
  try {
    cfg.memory_cap_bytes = memory_cap.empty() ? cli::default_memory_cap() : cli::parse_byte_size(memory_cap);
  } catch (const InvalidInputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::exit_code::invalid_input;
  }
  return cli::run(cfg, std::cin, std::cout, std::cerr);
}
