#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "pat1324/asymptotics.hpp"
#include "pat1324/avoider.hpp"
#include "pat1324/errors.hpp"
#include "pat1324/fe_engine.hpp"
#include "pat1324/inversion.hpp"

namespace pat1324::cli {

namespace {

using json = nlohmann::json;

struct Column {
  std::string name;
  bool numeric = true;  // false: emitted as a JSON string
};

using Row = std::vector<std::string>;

void emit_table(std::ostream& out, OutputFormat format, const std::string& command,
                const std::vector<Column>& columns, const std::vector<Row>& rows, json extra = json::object()) {
  switch (format) {
    case OutputFormat::csv:
      for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
        out << '\n';
      }
      break;
    case OutputFormat::plain: {
      std::vector<std::size_t> width(columns.size());
      for (std::size_t c = 0; c < columns.size(); ++c) {
        width[c] = columns[c].name.size();
        for (const auto& row : rows) width[c] = std::max(width[c], row[c].size());
      }
      for (std::size_t c = 0; c < columns.size(); ++c) {
        out << (c ? "  " : "") << std::setw(static_cast<int>(width[c])) << columns[c].name;
      }
      out << '\n';
      for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
          out << (c ? "  " : "") << std::setw(static_cast<int>(width[c])) << row[c];
        }
        out << '\n';
      }
      break;
    }
    case OutputFormat::json: {
      json doc = std::move(extra);
      doc["command"] = command;
      json array = json::array();
      for (const auto& row : rows) {
        json obj = json::object();
        for (std::size_t c = 0; c < columns.size(); ++c) {
          if (columns[c].numeric) {
            obj[columns[c].name] = std::stoll(row[c]);
          } else {
            obj[columns[c].name] = row[c];
          }
        }
        array.push_back(std::move(obj));
      }
      doc["rows"] = std::move(array);
      out << doc.dump(2) << '\n';
      break;
    }
  }
}

void emit_cache_stats(std::ostream& err, const std::vector<CacheStats>& stats) {
  err << "# n,hits,misses,hits_delta,misses_delta,entries,peak_bytes\n";
  CacheStats previous;
  for (std::size_t m = 0; m < stats.size(); ++m) {
    const CacheStats delta = stats[m] - previous;
    err << "# " << m + 1 << ',' << stats[m].hits << ',' << stats[m].misses << ',' << delta.hits << ','
        << delta.misses << ',' << stats[m].entries << ',' << stats[m].peak_bytes << '\n';
    previous = stats[m];
  }
  if (!stats.empty() && !stats.back().reproducible) err << "# hit/miss split is non-reproducible (threads > 1)\n";
}

std::string str(int v) { return std::to_string(v); }

int nmax_or(const RunConfig& cfg, int fallback) { return cfg.nmax.value_or(fallback); }

}  // namespace

void validate(const RunConfig& cfg) {
  if (cfg.nmax && *cfg.nmax < 1) throw InvalidInputError("--nmax must be at least 1");
  if (cfg.r < 0) throw InvalidInputError("--r must be non-negative");
  if (cfg.kmax && *cfg.kmax < 0) throw InvalidInputError("--kmax must be non-negative");
  if (cfg.threads < 1) throw InvalidInputError("--threads must be at least 1");
  if (cfg.memory_cap_bytes == 0) throw InvalidInputError("--memory-cap must be positive");
  if (cfg.subcommand == Subcommand::fit) {
    if (cfg.nmin < 3) throw InvalidInputError("--nmin must be at least 3");
    if (cfg.window < 3) throw InvalidInputError("--window must be at least 3");
  }
}

std::size_t parse_byte_size(std::string_view text) {
  if (text.empty()) throw InvalidInputError("empty byte size");
  std::size_t digits = 0;
  while (digits < text.size() && std::isdigit(static_cast<unsigned char>(text[digits]))) ++digits;
  if (digits == 0) throw InvalidInputError("bad byte size: " + std::string(text));
  const std::size_t value = std::stoull(std::string(text.substr(0, digits)));
  std::string suffix(text.substr(digits));
  std::transform(suffix.begin(), suffix.end(), suffix.begin(), [](unsigned char c) { return std::toupper(c); });
  if (suffix.empty() || suffix == "B") return value;
  if (suffix == "K" || suffix == "KB" || suffix == "KIB") return value << 10;
  if (suffix == "M" || suffix == "MB" || suffix == "MIB") return value << 20;
  if (suffix == "G" || suffix == "GB" || suffix == "GIB") return value << 30;
  if (suffix == "T" || suffix == "TB" || suffix == "TIB") return value << 40;
  throw InvalidInputError("bad byte size suffix: " + std::string(text));
}

std::size_t default_memory_cap() {
  if (const char* env = std::getenv(kMemoryCapEnv); env != nullptr && *env != '\0') return parse_byte_size(env);
  return kDefaultMemoryCap;
}

std::vector<BigInt> read_fixture(std::istream& in) {
  std::vector<BigInt> terms;
  std::string line;
  for (int line_no = 1; std::getline(in, line); ++line_no) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    const std::string token = line.substr(first, last - first + 1);
    BigInt value;
    try {
      value = parse_decimal(token);
    } catch (const InvalidInputError&) {
      throw InvalidInputError("fixture line " + std::to_string(line_no) + ": not a decimal integer: '" + token + "'");
    }
    if (value <= 0) throw InvalidInputError("fixture line " + std::to_string(line_no) + ": counts must be positive");
    terms.push_back(std::move(value));
  }
  if (terms.empty()) throw InvalidInputError("fixture contains no terms");
  return terms;
}

std::vector<BigInt> read_fixture(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInputError("cannot open fixture " + path.string());
  return read_fixture(in);
}

int run_avoid(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  AvoiderOptions options;
  options.memory_cap_bytes = cfg.memory_cap_bytes;
  options.threads = cfg.threads;
  options.fixed_width = cfg.fixed_width;
  if (cfg.verbose) options.progress = &err;
  const UptoResult result = count_avoiders_upto(nmax_or(cfg, 10), options);

  std::vector<Row> rows;
  for (std::size_t m = 0; m < result.values.size(); ++m) rows.push_back({str(static_cast<int>(m) + 1), to_decimal(result.values[m])});
  json extra = {{"complete", !result.aborted.has_value()}};
  if (result.aborted) extra["error"] = *result.aborted;
  emit_table(out, cfg.format, "avoid", {{"n"}, {"a_n", false}}, rows, extra);
  if (cfg.verbose_cache) emit_cache_stats(err, result.stats);
  if (result.aborted) {
    err << "avoid: stopped after n=" << result.values.size() << ": " << *result.aborted << '\n';
    return exit_code::resource_limit;
  }
  return exit_code::success;
}

int run_occur(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  EngineOptions options;
  options.memory_cap_bytes = cfg.memory_cap_bytes;
  SeriesEngine<CountRing> engine(cfg.r, CountRing{}, options);
  std::vector<Row> rows;
  std::optional<std::string> aborted;
  for (int n = 1; n <= nmax_or(cfg, 10); ++n) {
    try {
      const auto series = engine.evaluate_top(n);
      for (int j = 0; j <= cfg.r; ++j) rows.push_back({str(n), str(j), to_decimal(series[static_cast<std::size_t>(j)])});
    } catch (const ResourceLimitError& e) {
      aborted = e.what();
      break;
    }
    if (cfg.verbose) err << "n=" << n << " entries=" << engine.entries() << " bytes~" << engine.approx_bytes() << '\n';
  }
  json extra = {{"r", cfg.r}, {"complete", !aborted.has_value()}};
  if (aborted) extra["error"] = *aborted;
  emit_table(out, cfg.format, "occur", {{"n"}, {"j"}, {"count", false}}, rows, extra);
  if (aborted) {
    err << "occur: " << *aborted << '\n';
    return exit_code::resource_limit;
  }
  return exit_code::success;
}

int run_invtable(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const int nmax = nmax_or(cfg, 10);
  InversionOptions options;
  options.kmax = cfg.kmax;
  options.memory_cap_bytes = cfg.memory_cap_bytes;
  options.threads = cfg.threads;
  const InversionTable table = inversion_table(nmax, options);

  std::vector<Row> rows;
  for (int n = 1; n <= nmax; ++n) {
    const auto& poly = table.row(n);
    for (std::size_t k = 0; k < poly.coeffs.size(); ++k) rows.push_back({str(n), str(static_cast<int>(k)), to_decimal(poly.coeffs[k])});
  }

  json extra = json::object();
  std::vector<MonotonicityViolation> violations;
  int checked_k = 0;
  if (cfg.check_monotone) {
    checked_k = cfg.kmax.value_or(static_cast<int>(inversion_length(nmax, std::nullopt)) - 1);
    if (nmax < 2) throw InvalidInputError("--check-monotone needs --nmax >= 2");
    violations = monotonicity_violations(table, checked_k);
    json v = json::array();
    for (const auto& x : violations) {
      v.push_back({{"n", x.n}, {"k", x.k}, {"count_n", to_decimal(x.count_n)}, {"count_next", to_decimal(x.count_next)}});
    }
    extra["monotone"] = {{"pass", violations.empty()}, {"nmax", nmax}, {"kmax", checked_k}, {"violations", v}};
  }
  emit_table(out, cfg.format, "invtable", {{"n"}, {"k"}, {"count", false}}, rows, extra);

  if (cfg.check_monotone && cfg.format != OutputFormat::json) {
    const std::string prefix = cfg.format == OutputFormat::csv ? "# " : "";
    out << prefix << "monotone " << (violations.empty() ? "PASS" : "FAIL") << " (n<=" << nmax << ", k<=" << checked_k << ")\n";
    for (const auto& x : violations) {
      out << prefix << "violation n=" << x.n << " k=" << x.k << ": " << x.count_n << " > " << x.count_next << '\n';
    }
  }
  if (cfg.verbose) err << "invtable: " << rows.size() << " rows\n";
  return violations.empty() ? exit_code::success : exit_code::verification_failure;
}

int run_fit(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream&) {
  std::vector<BigInt> terms;
  if (!cfg.fixture_path || cfg.fixture_path->string() == "-") {
    terms = read_fixture(in);
  } else {
    terms = read_fixture(*cfg.fixture_path);
  }
  const int nmax = nmax_or(cfg, static_cast<int>(terms.size()));
  if (nmax > static_cast<int>(terms.size())) {
    throw InvalidInputError("--nmax " + str(nmax) + " exceeds the " + str(static_cast<int>(terms.size())) + " terms supplied");
  }
  const auto reals = to_reals(terms);
  std::vector<FitResult> fits;
  if (cfg.fit_method == FitMethod::three_term) {
    fits = fit_profile(reals, cfg.nmin, nmax);
  } else {
    if (nmax < cfg.nmin) throw InvalidInputError("--nmax must be at least --nmin");
    for (int n = std::max(cfg.nmin, cfg.window); n <= nmax; ++n) fits.push_back(fit_least_squares(reals, n, cfg.window));
  }
  std::vector<Row> rows;
  for (const auto& f : fits) rows.push_back({str(f.n), format_real(f.theta), format_real(f.mu)});
  const std::string method = cfg.fit_method == FitMethod::three_term ? "three-term" : "least-squares";
  if (cfg.format == OutputFormat::plain) {
    out << "empirical estimates of mu and theta in a_n ~ C mu^n n^theta (" << method << " fit)\n";
  }
  json extra = {{"kind", "empirical"}, {"method", method}};
  if (cfg.fit_method == FitMethod::least_squares) extra["window"] = cfg.window;
  emit_table(out, cfg.format, "fit", {{"n"}, {"theta", false}, {"mu", false}}, rows, extra);
  return exit_code::success;
}

int run_stats(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  AvoiderOptions options;
  options.memory_cap_bytes = cfg.memory_cap_bytes;
  options.threads = cfg.threads;
  if (cfg.verbose) options.progress = &err;
  const UptoResult result = count_avoiders_upto(nmax_or(cfg, 15), options);
  std::vector<Row> rows;
  CacheStats previous;
  for (std::size_t m = 0; m < result.values.size(); ++m) {
    const int n = static_cast<int>(m) + 1;
    const CacheStats& s = result.stats[m];
    const CacheStats delta = s - previous;
    previous = s;
    rows.push_back({str(n), to_decimal(result.values[m]), std::to_string(s.hits), std::to_string(s.misses),
                    std::to_string(delta.hits), std::to_string(delta.misses), std::to_string(s.entries),
                    std::to_string(s.peak_bytes),
                    n <= kMaxUncachedCallsN ? std::to_string(count_calls_uncached(n)) : std::string("-1")});
  }
  const bool reproducible = result.stats.empty() || result.stats.back().reproducible;
  json extra = {{"reproducible", reproducible}, {"complete", !result.aborted.has_value()}};
  emit_table(out, cfg.format, "stats",
             {{"n"}, {"a_n", false}, {"hits"}, {"misses"}, {"hits_delta"}, {"misses_delta"}, {"entries"},
              {"peak_bytes"}, {"calls_uncached"}},
             rows, extra);
  if (!reproducible) err << "stats: hit/miss split is non-reproducible with --threads > 1\n";
  if (result.aborted) {
    err << "stats: " << *result.aborted << '\n';
    return exit_code::resource_limit;
  }
  return exit_code::success;
}

int run(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    validate(cfg);
    switch (cfg.subcommand) {
      case Subcommand::avoid: return run_avoid(cfg, out, err);
      case Subcommand::occur: return run_occur(cfg, out, err);
      case Subcommand::invtable: return run_invtable(cfg, out, err);
      case Subcommand::fit: return run_fit(cfg, in, out, err);
      case Subcommand::verify: return run_verify(cfg, out, err);
      case Subcommand::stats: return run_stats(cfg, out, err);
    }
  } catch (const InvalidInputError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::invalid_input;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << '\n';
    return exit_code::resource_limit;
  } catch (const CounterOverflowError& e) {
    err << "overflow: " << e.what() << '\n';
    return exit_code::resource_limit;
  } catch (const ConsistencyError& e) {
    err << "FAIL: " << e.what() << '\n';
    return exit_code::verification_failure;
  }
  return exit_code::invalid_input;
}

}  // namespace pat1324::cli
