#pragma once

// Job configuration, report structure and JSON/CSV/table emitters for the
// command-line front end.

#include <optional>
#include <string>
#include <vector>

#include "gwa/invariants.hpp"

namespace gwa::cli {

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 2,
  kHypothesis = 3,
  kStabilization = 4,
  kDisagreement = 5,
};

struct JobConfig {
  std::string command;  // hh, coh, twisted, invariants, group, verify, selftest
  std::string a = "h";
  std::string h0 = "1";
  int twist_order = 2;  // w = zeta_m^power
  int twist_power = 1;
  int r = 2;
  std::string classes;  // group class block
  std::string kind = "all";  // verify: homology, cohomology, twisted-homology, twisted-cohomology, all
  bool oracle = false;       // hh, coh, twisted: also run the oracle
  int p_max = 4;
  std::optional<int> d0;
  std::optional<int> step;
  std::optional<int> window;
  std::optional<int> d_max;
  unsigned seed = 1;
  int samples = 50;
  friend bool operator==(const JobConfig&, const JobConfig&) = default;
};

struct DegreeStabilization {
  int degree = 0;
  int value = 0;
  int stabilized_at_d = 0;
  std::vector<std::pair<int, int>> observations;
  friend bool operator==(const DegreeStabilization&, const DegreeStabilization&) = default;
};

struct DimEntry {
  std::string kind;    // homology, cohomology, twisted-homology, twisted-cohomology, group
  std::string source;  // formula or oracle
  std::vector<int> dims;
  std::optional<bool> agreement;
  std::vector<DegreeStabilization> stabilization;
  friend bool operator==(const DimEntry&, const DimEntry&) = default;
};

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
  friend bool operator==(const Check&, const Check&) = default;
};

struct RunReport {
  int schema_version = kSchemaVersion;
  JobConfig input;
  std::optional<int> n;
  std::optional<int> d;
  std::optional<std::string> twist;  // w as scalar text
  std::vector<DimEntry> results;
  std::optional<bool> duality_flag;
  std::vector<Check> checks;  // invariants, group and selftest facts
  std::optional<std::string> invariant_polynomial;
  int exit_code = kOk;
  std::string error;
  double seconds = 0;
  friend bool operator==(const RunReport&, const RunReport&) = default;
};

/// Runs one job. Errors are caught and reported through exit_code and error.
RunReport run(const JobConfig& config);

std::string to_json(const RunReport& report, int indent = 2);
RunReport report_from_json(const std::string& text);
std::string config_to_json(const JobConfig& config);
JobConfig config_from_json(const std::string& text);
/// Sweep files hold a JSON array of job configurations.
std::vector<JobConfig> sweep_from_json(const std::string& text);

/// Header line plus one row per (entry, degree).
std::string to_csv(const std::vector<RunReport>& reports);
std::string to_table(const RunReport& report);

/// Runs the jobs concurrently; reports keep the input order.
std::vector<RunReport> run_sweep(const std::vector<JobConfig>& jobs);

/// Property checks behind `selftest` on one specification.
std::vector<Check> property_suite(const GwaSpec& spec, unsigned seed, int samples);

}  // namespace gwa::cli
