#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "akr/analysis.hpp"
#include "akr/placements.hpp"

namespace akr {

enum class RunMode { Single, FilledVsPerimeter, GroupedVsDistributed };

std::string_view to_string(RunMode mode);
std::optional<RunMode> run_mode_from_string(std::string_view name);

struct SweepAxes {
  std::vector<int> n_values;
  std::vector<int> k_values;
};

struct ExperimentConfig {
  int n = 16;
  PlacementSpec placement;
  std::optional<long long> horizon;  // defaults to default_horizon(n)
  std::string output_dir = "out";
  std::optional<SweepAxes> sweep;
  RunMode mode = RunMode::Single;
  int jobs = 0;  // worker threads; 0 = hardware concurrency
};

// Sections: [grid] n, horizon; [placement] kind, k, anchor, locations;
// [sweep] n, k, mode; [output] dir. Errors carry file:line context.
ExperimentConfig parse_config_file(const std::string& path);

void validate(const ExperimentConfig& config);

// Fingerprint over the result-affecting fields (not output_dir or jobs).
std::uint64_t config_hash(const ExperimentConfig& config);

std::string metrics_csv(const RunResult& result);
std::string stopping_text(const StoppingReport& report);

struct RunManifest {
  std::string version;
  std::string config_hash_hex;
  std::string timestamp;  // ISO 8601 UTC
  int jobs = 0;

  struct Entry {
    std::string name;
    std::string params;
    std::vector<std::string> files;   // relative to the output directory
    std::string skipped_reason;       // non-empty: combination was skipped
  };
  std::vector<Entry> entries;

  std::string to_text() const;
};

// Expands the config (one run, one comparison, or a sweep grid), executes all
// runs on a bounded worker pool, writes per-run CSVs and reports plus
// manifest.txt into the output directory, and returns the manifest.
// Metric files are byte-identical across re-executions of the same config.
RunManifest execute(const ExperimentConfig& config);

}  // namespace akr
