// akrwalk: simulate and verify the AKR coined-walk search on the periodic
// n x n grid.
//
// Exit codes: 0 success, 1 usage/config error, 2 verification failure,
// 3 I/O error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "akr/analysis.hpp"
#include "akr/errors.hpp"
#include "akr/kernels.hpp"
#include "akr/runner.hpp"
#include "akr/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;
constexpr int kExitIo = 3;

struct CommonFlags {
  std::string config_path;
  int n = 0;
  std::string placement;
  int k = 0;
  int x = 0;
  int y = 0;
  std::string locations;
  long long horizon = 0;
  std::string out_dir;
  int jobs = 0;
  std::string mode;
  std::string sweep_n;
  std::string sweep_k;
};

void add_placement_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--placement", f.placement,
                  "Placement kind: single|distributed|block|perimeter|custom");
  cmd->add_option("--k", f.k, "Marked-count parameter (perfect square for lattice kinds)");
  cmd->add_option("--x", f.x, "Anchor x coordinate");
  cmd->add_option("--y", f.y, "Anchor y coordinate");
  cmd->add_option("--locations", f.locations, "Custom cells, e.g. \"1,2; 3,4\"");
}

std::vector<akr::Coord> parse_locations(const std::string& text) {
  std::vector<akr::Coord> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    int cx = 0, cy = 0;
    if (std::sscanf(part.c_str(), " %d , %d", &cx, &cy) != 2) {
      throw akr::ConfigError("cannot parse location '" + part + "' (expected x,y)");
    }
    out.push_back({cx, cy});
  }
  if (out.empty()) throw akr::ConfigError("no locations given");
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      out.push_back(std::stoi(part));
    } catch (const std::exception&) {
      throw akr::ConfigError("cannot parse integer list entry '" + part + "'");
    }
  }
  if (out.empty()) throw akr::ConfigError("empty integer list");
  return out;
}

// Count of a flag the subcommand may or may not define.
int flag_count(const CLI::App* cmd, const std::string& name) {
  const CLI::Option* opt = cmd->get_option_no_throw(name);
  return opt == nullptr ? 0 : static_cast<int>(opt->count());
}

// Start from the config file (when given) and let explicit flags override.
akr::ExperimentConfig build_config(const CLI::App* cmd, const CommonFlags& f) {
  akr::ExperimentConfig cfg;
  if (flag_count(cmd, "--config") > 0) cfg = akr::parse_config_file(f.config_path);

  if (flag_count(cmd, "--n") > 0) cfg.n = f.n;
  if (flag_count(cmd, "--placement") > 0) {
    const auto kind = akr::placement_kind_from_string(f.placement);
    if (!kind) throw akr::ConfigError("unknown placement kind '" + f.placement + "'");
    cfg.placement.kind = *kind;
  }
  if (flag_count(cmd, "--k") > 0) cfg.placement.k = f.k;
  if (flag_count(cmd, "--x") > 0) cfg.placement.anchor.x = f.x;
  if (flag_count(cmd, "--y") > 0) cfg.placement.anchor.y = f.y;
  if (flag_count(cmd, "--locations") > 0) {
    if (cfg.placement.kind != akr::PlacementKind::Custom) {
      throw akr::ConfigError("--locations requires --placement custom");
    }
    cfg.placement.custom_locations = parse_locations(f.locations);
  }
  if (flag_count(cmd, "--horizon") > 0) cfg.horizon = f.horizon;
  if (flag_count(cmd, "--out") > 0) cfg.output_dir = f.out_dir;
  if (flag_count(cmd, "--jobs") > 0) cfg.jobs = f.jobs;
  if (flag_count(cmd, "--mode") > 0) {
    const auto mode = akr::run_mode_from_string(f.mode);
    if (!mode) throw akr::ConfigError("unknown mode '" + f.mode + "'");
    cfg.mode = *mode;
  }
  if (flag_count(cmd, "--sweep-n") > 0 || flag_count(cmd, "--sweep-k") > 0) {
    akr::SweepAxes axes = cfg.sweep ? *cfg.sweep : akr::SweepAxes{};
    if (flag_count(cmd, "--sweep-n") > 0) axes.n_values = parse_int_list(f.sweep_n);
    if (flag_count(cmd, "--sweep-k") > 0) axes.k_values = parse_int_list(f.sweep_k);
    cfg.sweep = std::move(axes);
  }
  akr::validate(cfg);
  return cfg;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw akr::IoError("cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print_manifest_outputs(const akr::RunManifest& manifest, const std::string& dir) {
  for (const auto& e : manifest.entries) {
    if (!e.skipped_reason.empty()) {
      std::cout << "skipped " << e.name << ": " << e.skipped_reason << "\n";
      continue;
    }
    for (const std::string& file : e.files) std::cout << "wrote " << dir << "/" << file << "\n";
  }
  std::cout << "wrote " << dir << "/manifest.txt\n";
}

int cmd_run(const CLI::App* cmd, const CommonFlags& flags) {
  akr::ExperimentConfig cfg = build_config(cmd, flags);
  cfg.mode = akr::RunMode::Single;
  cfg.sweep.reset();
  const akr::RunManifest manifest = akr::execute(cfg);
  print_manifest_outputs(manifest, cfg.output_dir);
  for (const auto& e : manifest.entries) {
    for (const std::string& file : e.files) {
      if (file.ends_with(".stopping.txt")) {
        std::cout << "\n" << e.name << "\n"
                  << slurp(std::filesystem::path(cfg.output_dir) / file);
      }
    }
  }
  return kExitOk;
}

int cmd_sweep(const CLI::App* cmd, const CommonFlags& flags) {
  akr::ExperimentConfig cfg = build_config(cmd, flags);
  if (!cfg.sweep) {
    throw akr::ConfigError("sweep requires axes: pass --sweep-n/--sweep-k or a [sweep] section");
  }
  const akr::RunManifest manifest = akr::execute(cfg);
  print_manifest_outputs(manifest, cfg.output_dir);
  return kExitOk;
}

int cmd_compare(const CLI::App* cmd, const CommonFlags& flags) {
  akr::ExperimentConfig cfg = build_config(cmd, flags);
  if (cfg.mode == akr::RunMode::Single) {
    throw akr::ConfigError("compare requires --mode filled-perimeter or grouped-distributed");
  }
  cfg.sweep.reset();
  const akr::RunManifest manifest = akr::execute(cfg);
  print_manifest_outputs(manifest, cfg.output_dir);

  bool all_pass = true;
  for (const auto& e : manifest.entries) {
    for (const std::string& file : e.files) {
      if (file.ends_with(".claims.txt") || file.ends_with(".gap.txt")) {
        const std::string text = slurp(std::filesystem::path(cfg.output_dir) / file);
        std::cout << "\n" << text;
        if (text.find("status=FAIL") != std::string::npos) all_pass = false;
      }
    }
  }
  return all_pass ? kExitOk : kExitVerifyFailed;
}

int cmd_verify(const CLI::App* cmd, const CommonFlags& flags) {
  const akr::ExperimentConfig cfg = build_config(cmd, flags);
  const akr::GridGeometry g(cfg.n);
  const akr::MarkedSet marked = akr::generate(cfg.placement, g);
  const long long horizon = cfg.horizon ? *cfg.horizon : akr::default_horizon(g);

  akr::ClaimReport report = akr::verify_norm_preservation(g, marked, horizon);
  report.append(akr::verify_adjacent_pair_invariant(g, marked, horizon));

  if (cfg.placement.kind == akr::PlacementKind::Block ||
      cfg.placement.kind == akr::PlacementKind::Perimeter) {
    const auto cmp_result = akr::compare_filled_vs_perimeter(g, cfg.placement.k,
                                                             cfg.placement.anchor, horizon);
    report.append(cmp_result.report);
  }
  if (cfg.placement.kind == akr::PlacementKind::Distributed) {
    report.append(akr::verify_distributed_periodicity(g, cfg.placement.k,
                                                      cfg.placement.anchor, horizon)
                      .report);
  }

  std::cout << "verify n=" << cfg.n << " placement=" << akr::to_string(cfg.placement)
            << " horizon=" << horizon << " kernel=" << akr::kernels::active_table().name
            << "\n";
  std::cout << report.to_text();

  if (flag_count(cmd, "--out") > 0) {
    std::filesystem::create_directories(cfg.output_dir);
    const std::filesystem::path path =
        std::filesystem::path(cfg.output_dir) / "verify.claims.txt";
    std::ofstream out(path, std::ios::binary);
    if (!out) throw akr::IoError("cannot write " + path.string());
    out << report.to_text();
    std::cout << "wrote " << path.string() << "\n";
  }
  return report.all_pass() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"AKR coined quantum walk search on the periodic n x n grid"};
  app.set_version_flag("--version", akr::kVersion);
  app.require_subcommand(1);

  CommonFlags run_f, sweep_f, verify_f, compare_f;

  CLI::App* run_cmd = app.add_subcommand("run", "Simulate one configuration, write CSV metrics");
  run_cmd->add_option("--config", run_f.config_path, "Config file (flags override it)");
  run_cmd->add_option("--n", run_f.n, "Grid side length");
  add_placement_flags(run_cmd, run_f);
  run_cmd->add_option("--horizon", run_f.horizon, "Steps (default 2*ceil(sqrt(N ln N)))");
  run_cmd->add_option("--out", run_f.out_dir, "Output directory (default out)");

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Run a grid of configurations");
  sweep_cmd->add_option("--config", sweep_f.config_path, "Config file (flags override it)");
  sweep_cmd->add_option("--n", sweep_f.n, "Grid side length");
  add_placement_flags(sweep_cmd, sweep_f);
  sweep_cmd->add_option("--sweep-n", sweep_f.sweep_n, "Comma-separated n values");
  sweep_cmd->add_option("--sweep-k", sweep_f.sweep_k, "Comma-separated k values");
  sweep_cmd->add_option("--mode", sweep_f.mode,
                        "single|filled-perimeter|grouped-distributed");
  sweep_cmd->add_option("--horizon", sweep_f.horizon, "Steps per run");
  sweep_cmd->add_option("--out", sweep_f.out_dir, "Output directory (default out)");
  sweep_cmd->add_option("--jobs", sweep_f.jobs, "Worker threads (default hardware)");

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Check the exact invariants for a configuration");
  verify_cmd->add_option("--config", verify_f.config_path, "Config file (flags override it)");
  verify_cmd->add_option("--n", verify_f.n, "Grid side length");
  add_placement_flags(verify_cmd, verify_f);
  verify_cmd->add_option("--horizon", verify_f.horizon, "Steps to verify over");
  verify_cmd->add_option("--out", verify_f.out_dir, "Also write the claims file here");

  CLI::App* compare_cmd =
      app.add_subcommand("compare", "Paired run: filled vs perimeter, grouped vs distributed");
  compare_cmd->add_option("--config", compare_f.config_path, "Config file (flags override it)");
  compare_cmd->add_option("--mode", compare_f.mode,
                          "filled-perimeter|grouped-distributed");
  compare_cmd->add_option("--n", compare_f.n, "Grid side length");
  add_placement_flags(compare_cmd, compare_f);
  compare_cmd->add_option("--horizon", compare_f.horizon, "Steps per run");
  compare_cmd->add_option("--out", compare_f.out_dir, "Output directory (default out)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (run_cmd->parsed()) return cmd_run(run_cmd, run_f);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep_cmd, sweep_f);
    if (verify_cmd->parsed()) return cmd_verify(verify_cmd, verify_f);
    if (compare_cmd->parsed()) return cmd_compare(compare_cmd, compare_f);
  } catch (const akr::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const akr::IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
