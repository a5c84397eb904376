#pragma once

// Command-line front end. Every subcommand resolves a JobConfig, runs one
// pipeline and prints a JSON (default) or plain-text report.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "flagflux/json_io.hpp"

namespace flagflux::cli {

enum ExitCode { kOk = 0, kDomainError = 1, kParseError = 2 };

struct JobConfig {
  std::string command;
  FlagSpec spec;
  bool has_spec = false;
  std::optional<std::vector<int>> ideal;
  std::string algebra;  // Malcev tuple for dualize without a flag
  std::optional<int> dim;
  std::string flux = "0";
  int rank_bound = kDefaultRankBound;
  std::string rank_bound_source = "default";  // default | env | flag | config
  std::string format = "json";
  Json blocks = Json::array();  // gcs-transport
  std::optional<FlagSpec> target;  // gcs-transport partition on the far side
};

/// Overlays a JSON config onto `config`. Keys already set from flags are
/// overwritten; each such conflict adds a line to `warnings`.
void apply_config_file(JobConfig& config, const Json& file,
                       const std::vector<std::string>& flags_given,
                       std::vector<std::string>& warnings);

/// Runs a resolved job. Throws ParseError or DomainError.
Json execute(const JobConfig& config);

/// Plain-text rendering of a report: one "key: value" line per scalar.
std::string render_text(const Json& report);

struct GoldenOutcome {
  std::string job;
  bool matched = false;
  std::string detail;
};

/// Runs every job file in `dir` (any *.json except *.expected.json) and
/// compares the JSON report with the stored <job>.expected.json. With
/// `update`, rewrites the expected files instead.
std::vector<GoldenOutcome> run_golden(const std::filesystem::path& dir,
                                      bool update);

/// The report for one job file, exactly as golden mode writes it.
std::string job_report(const std::filesystem::path& job_file);

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace flagflux::cli
