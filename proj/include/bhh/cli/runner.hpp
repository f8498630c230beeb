#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bhh/cli/config.hpp"

namespace bhh {

struct DimRow {
  int degree = 0;
  std::size_t dim = 0;
  std::string complex;
  std::string component;
  friend bool operator==(const DimRow&, const DimRow&) = default;
};

struct SuiteResult {
  std::string suite;
  Report checks;
  std::size_t certificates = 0;
  double seconds = 0;  // timing; excluded from comparisons
};

/// Everything a run produces. `json` and `csv` exports are deterministic
/// apart from the "run" object (timings and cache status).
struct JobReport {
  std::string command;
  std::string name;
  std::string config_hash;
  std::string field;
  std::size_t max_degree = 0;
  std::vector<SuiteResult> suites;
  std::vector<DimRow> dims;
  nlohmann::json ring = nlohmann::json::object();  // structure constants, when computed
  std::string cache = "off";                       // off | miss | hit

  bool ok() const;
};

/// The smash product B = A * E of a job and the objects derived from it.
struct Job {
  JobConfig config;
  std::shared_ptr<const DrinfeldDouble> dd;
  SmashProduct sp;
};
/// Builds B; module-algebra failures are ConfigErrors.
Job make_job(JobConfig config);

/// The verification suites (all applicable ones unless config.suites is set).
JobReport run_verify(const Job& job);

struct ComputeRequest {
  std::vector<std::string> complexes;  // empty: braided, relative, classical
  int lo = 0;
  int hi = -1;  // -1: max_degree - 1
};
/// Cohomology dimension tables; complexes are built through degree hi + 1,
/// which must not exceed max_degree.
JobReport run_compute(const Job& job, const ComputeRequest& req);

/// Runs `fresh` unless `dir/<key>.json` holds a report, which is returned
/// instead; fresh reports are stored atomically. No caching when dir is empty.
JobReport cached_run(const std::string& dir, const std::string& key, const std::function<JobReport()>& fresh);

nlohmann::json report_to_json(const JobReport& r);
/// Throws ConfigError on malformed input.
JobReport report_from_json(const nlohmann::json& j);
/// "json" or "csv" (header degree,dim,complex,component); throws ConfigError otherwise.
std::string export_report(const JobReport& r, const std::string& format);
/// Parses the dimension rows of a CSV export.
std::vector<DimRow> import_csv(const std::string& text);

/// Writes `data` to `path` through a temporary file and a rename.
void atomic_write(const std::string& path, const std::string& data);

/// The `bhh` command line; returns the process exit code.
int cli_main(int argc, char** argv);

}  // namespace bhh
