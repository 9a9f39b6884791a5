// Config-driven execution: expands a config into jobs, runs them on a bounded
// worker pool, and persists CSV metrics, report files and the manifest.
// Sweeps parallelize across runs only; every run is internally sequential, so
// outputs are byte-identical regardless of worker count or scheduling.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <thread>

#include "akr/errors.hpp"
#include "akr/hash.hpp"
#include "akr/runner.hpp"
#include "akr/version.hpp"

namespace akr {

std::string to_hex(std::uint64_t value) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(value));
  return buf;
}

std::string metrics_csv(const RunResult& result) {
  std::string out = "t,overlap,p_marked,norm_error\n";
  char buf[160];
  for (const StepMetrics& m : result.metrics) {
    std::snprintf(buf, sizeof(buf), "%lld,%.17g,%.17g,%.17g\n", m.t, m.overlap, m.p_marked,
                  m.norm_error);
    out += buf;
  }
  return out;
}

std::string stopping_text(const StoppingReport& report) {
  char buf[320];
  std::snprintf(buf, sizeof(buf),
                "horizon %lld\n"
                "t_overlap_zero %lld\n"
                "overlap_at_zero %.17g\n"
                "t_peak %lld\n"
                "p_peak %.17g\n"
                "classical_cost %.17g\n",
                report.horizon, report.t_overlap_zero, report.overlap_at_zero, report.t_peak,
                report.p_peak, report.classical_cost());
  return buf;
}

std::string RunManifest::to_text() const {
  std::string out;
  out += "akrwalk manifest 1\n";
  out += "version " + version + "\n";
  out += "config_hash " + config_hash_hex + "\n";
  out += "timestamp " + timestamp + "\n";
  out += "jobs " + std::to_string(jobs) + "\n";
  for (const Entry& e : entries) {
    out += "entry name=" + e.name + " params=\"" + e.params + "\"";
    if (!e.skipped_reason.empty()) {
      out += " skipped=\"" + e.skipped_reason + "\"";
    } else {
      out += " files=";
      for (std::size_t i = 0; i < e.files.size(); ++i) {
        if (i != 0) out += ',';
        out += e.files[i];
      }
    }
    out += "\n";
  }
  return out;
}

namespace {

namespace fs = std::filesystem;

struct Job {
  std::string name;
  std::string params;
  int n = 0;
  RunMode mode = RunMode::Single;
  PlacementSpec placement;
  long long horizon = 0;
  std::string skip_reason;
  std::vector<std::string> files;  // filled in by the worker
};

std::string anchor_tag(const Coord& anchor) {
  auto part = [](int v) {
    return (v < 0 ? "m" + std::to_string(-v) : std::to_string(v));
  };
  return "x" + part(anchor.x) + "_y" + part(anchor.y);
}

std::string job_name(int n, RunMode mode, const PlacementSpec& p) {
  switch (mode) {
    case RunMode::FilledVsPerimeter:
      return "cmp_fp_n" + std::to_string(n) + "_k" + std::to_string(p.k) + "_" +
             anchor_tag(p.anchor);
    case RunMode::GroupedVsDistributed:
      return "cmp_gd_n" + std::to_string(n) + "_k" + std::to_string(p.k) + "_" +
             anchor_tag(p.anchor);
    case RunMode::Single:
      break;
  }
  std::string name = "n" + std::to_string(n) + "_" + std::string(to_string(p.kind));
  if (p.kind == PlacementKind::Custom) {
    name += "_" + std::to_string(p.custom_locations.size()) + "locs";
    std::string canon;
    for (const Coord& c : p.custom_locations) canon += to_string(c) + ";";
    name += "_" + to_hex(fnv1a64(canon)).substr(8);
  } else {
    if (p.kind != PlacementKind::Single) name += "_k" + std::to_string(p.k);
    name += "_" + anchor_tag(p.anchor);
  }
  return name;
}

std::string job_params(const Job& job) {
  return "mode=" + std::string(to_string(job.mode)) + " n=" + std::to_string(job.n) +
         " placement=" + to_string(job.placement) + " horizon=" + std::to_string(job.horizon);
}

// A job is skipped (with the constraint text) when its combination violates a
// placement invariant; other jobs still run.
void try_validate(Job& job) {
  try {
    const GridGeometry g(job.n);
    switch (job.mode) {
      case RunMode::Single:
        generate(job.placement, g);
        break;
      case RunMode::FilledVsPerimeter: {
        PlacementSpec block = job.placement;
        block.kind = PlacementKind::Block;
        PlacementSpec perim = job.placement;
        perim.kind = PlacementKind::Perimeter;
        generate(block, g);
        generate(perim, g);
        break;
      }
      case RunMode::GroupedVsDistributed: {
        PlacementSpec block = job.placement;
        block.kind = PlacementKind::Block;
        PlacementSpec dist = job.placement;
        dist.kind = PlacementKind::Distributed;
        generate(block, g);
        generate(dist, g);
        break;
      }
    }
  } catch (const ConfigError& e) {
    job.skip_reason = e.what();
  }
}

std::vector<Job> expand(const ExperimentConfig& config) {
  std::vector<int> n_values{config.n};
  std::vector<int> k_values{config.placement.k};
  if (config.sweep) {
    if (!config.sweep->n_values.empty()) n_values = config.sweep->n_values;
    if (!config.sweep->k_values.empty()) k_values = config.sweep->k_values;
  }
  // Duplicate axis entries would collide on file names.
  auto dedupe = [](std::vector<int>& v) {
    std::vector<int> out;
    for (int x : v) {
      bool seen = false;
      for (int y : out) seen = seen || (x == y);
      if (!seen) out.push_back(x);
    }
    v = std::move(out);
  };
  dedupe(n_values);
  dedupe(k_values);

  std::vector<Job> jobs;
  for (int n : n_values) {
    for (int k : k_values) {
      Job job;
      job.n = n;
      job.mode = config.mode;
      job.placement = config.placement;
      job.placement.k = k;
      job.horizon = config.horizon ? *config.horizon : default_horizon(GridGeometry(n));
      job.name = job_name(n, config.mode, job.placement);
      try_validate(job);
      job.params = job_params(job);
      jobs.push_back(std::move(job));
    }
  }

  if (!config.sweep && !jobs.empty() && !jobs.front().skip_reason.empty()) {
    // A single explicit run with an invalid placement is an error, not a skip.
    throw ConfigError(jobs.front().skip_reason);
  }
  return jobs;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  out << content;
  if (!out) throw IoError("write failed: " + path.string());
}

void run_job(Job& job, const fs::path& dir) {
  const GridGeometry g(job.n);
  switch (job.mode) {
    case RunMode::Single: {
      const RunResult result = run_walk(g, generate(job.placement, g), job.horizon);
      write_file(dir / (job.name + ".csv"), metrics_csv(result));
      write_file(dir / (job.name + ".stopping.txt"), stopping_text(result.stopping));
      job.files = {job.name + ".csv", job.name + ".stopping.txt"};
      break;
    }
    case RunMode::FilledVsPerimeter: {
      const FilledPerimeterComparison cmp =
          compare_filled_vs_perimeter(g, job.placement.k, job.placement.anchor, job.horizon);
      write_file(dir / (job.name + "_filled.csv"), metrics_csv(cmp.filled));
      write_file(dir / (job.name + "_perimeter.csv"), metrics_csv(cmp.perimeter));
      write_file(dir / (job.name + "_filled.stopping.txt"),
                 stopping_text(cmp.filled.stopping));
      write_file(dir / (job.name + "_perimeter.stopping.txt"),
                 stopping_text(cmp.perimeter.stopping));
      char range[160];
      std::snprintf(range, sizeof(range), "in_overlap_range [%.17g, %.17g]\n",
                    cmp.in_overlap_min, cmp.in_overlap_max);
      write_file(dir / (job.name + ".claims.txt"), cmp.report.to_text() + range);
      job.files = {job.name + "_filled.csv", job.name + "_perimeter.csv",
                   job.name + "_filled.stopping.txt", job.name + "_perimeter.stopping.txt",
                   job.name + ".claims.txt"};
      break;
    }
    case RunMode::GroupedVsDistributed: {
      const GapReport gap =
          compare_grouped_vs_distributed(g, job.placement.k, job.placement.anchor, job.horizon);
      write_file(dir / (job.name + "_grouped.csv"), metrics_csv(gap.grouped_run));
      write_file(dir / (job.name + "_distributed.csv"), metrics_csv(gap.distributed_run));
      write_file(dir / (job.name + ".gap.txt"), gap.to_text());
      job.files = {job.name + "_grouped.csv", job.name + "_distributed.csv",
                   job.name + ".gap.txt"};
      break;
    }
  }
}

std::string iso_timestamp_utc() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  char buf[40];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

}  // namespace

RunManifest execute(const ExperimentConfig& config) {
  validate(config);
  kernels::active_table();  // surface a bad AKRWALK_KERNEL before any work
  std::vector<Job> jobs = expand(config);

  const fs::path dir(config.output_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());

  const unsigned hw = std::thread::hardware_concurrency();
  const int workers = config.jobs > 0 ? config.jobs : (hw > 0 ? static_cast<int>(hw) : 1);
  const int pool_size =
      static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(workers), jobs.size()));

  std::atomic<std::size_t> next{0};
  std::vector<std::string> errors(jobs.size());
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= jobs.size()) break;
      if (!jobs[i].skip_reason.empty()) continue;
      try {
        run_job(jobs[i], dir);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };

  if (pool_size <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(pool_size));
    for (int w = 0; w < pool_size; ++w) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (!errors[i].empty()) {
      throw IoError("job " + jobs[i].name + " failed: " + errors[i]);
    }
  }

  RunManifest manifest;
  manifest.version = kVersion;
  manifest.config_hash_hex = to_hex(config_hash(config));
  manifest.timestamp = iso_timestamp_utc();
  manifest.jobs = pool_size;
  for (const Job& job : jobs) {
    manifest.entries.push_back({job.name, job.params, job.files, job.skip_reason});
  }
  write_file(dir / "manifest.txt", manifest.to_text());
  return manifest;
}

}  // namespace akr
