// Experiment config file: INI-style sections [grid], [placement], [sweep],
// [output]. Parse errors carry file:line context.

#include <fstream>
#include <string>
#include <vector>

#include "akr/errors.hpp"
#include "akr/hash.hpp"
#include "akr/runner.hpp"

namespace akr {

std::string_view to_string(RunMode mode) {
  switch (mode) {
    case RunMode::Single: return "single";
    case RunMode::FilledVsPerimeter: return "filled-vs-perimeter";
    case RunMode::GroupedVsDistributed: return "grouped-vs-distributed";
  }
  return "?";
}

std::optional<RunMode> run_mode_from_string(std::string_view name) {
  if (name == "single") return RunMode::Single;
  if (name == "filled-vs-perimeter" || name == "filled-perimeter") {
    return RunMode::FilledVsPerimeter;
  }
  if (name == "grouped-vs-distributed" || name == "grouped-distributed") {
    return RunMode::GroupedVsDistributed;
  }
  return std::nullopt;
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(trim(s.substr(start)));
      break;
    }
    parts.push_back(trim(s.substr(start, pos - start)));
    start = pos + 1;
  }
  return parts;
}

struct ParseContext {
  std::string path;
  int line = 0;
  [[noreturn]] void fail(const std::string& message) const {
    throw ConfigError(path + ":" + std::to_string(line) + ": " + message);
  }
};

int parse_int(const ParseContext& ctx, const std::string& value) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(value, &used);
    if (used != value.size()) ctx.fail("'" + value + "' is not an integer");
    return v;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    ctx.fail("'" + value + "' is not an integer");
  }
}

long long parse_ll(const ParseContext& ctx, const std::string& value) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(value, &used);
    if (used != value.size()) ctx.fail("'" + value + "' is not an integer");
    return v;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    ctx.fail("'" + value + "' is not an integer");
  }
}

std::vector<int> parse_int_list(const ParseContext& ctx, const std::string& value) {
  std::vector<int> out;
  for (const std::string& part : split(value, ',')) {
    if (part.empty()) ctx.fail("empty entry in list '" + value + "'");
    out.push_back(parse_int(ctx, part));
  }
  return out;
}

Coord parse_coord(const ParseContext& ctx, const std::string& value) {
  const std::vector<std::string> parts = split(value, ',');
  if (parts.size() != 2) ctx.fail("'" + value + "' is not an x,y pair");
  return {parse_int(ctx, parts[0]), parse_int(ctx, parts[1])};
}

std::vector<Coord> parse_coord_list(const ParseContext& ctx, const std::string& value) {
  std::vector<Coord> out;
  for (const std::string& part : split(value, ';')) {
    if (part.empty()) continue;
    out.push_back(parse_coord(ctx, part));
  }
  if (out.empty()) ctx.fail("no locations in '" + value + "'");
  return out;
}

}  // namespace

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path);

  ExperimentConfig cfg;
  SweepAxes sweep;
  bool sweep_section_seen = false;

  enum class Section { None, Grid, Placement, Sweep, Output };
  Section section = Section::None;
  ParseContext ctx{path, 0};

  std::string raw;
  while (std::getline(in, raw)) {
    ++ctx.line;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;

    if (line.front() == '[') {
      if (line.back() != ']') ctx.fail("unterminated section header");
      const std::string name = trim(line.substr(1, line.size() - 2));
      if (name == "grid") section = Section::Grid;
      else if (name == "placement") section = Section::Placement;
      else if (name == "sweep") { section = Section::Sweep; sweep_section_seen = true; }
      else if (name == "output") section = Section::Output;
      else ctx.fail("unknown section [" + name + "]; expected grid, placement, sweep or output");
      continue;
    }

    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) ctx.fail("expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (value.empty()) ctx.fail("empty value for '" + key + "'");

    switch (section) {
      case Section::None:
        ctx.fail("'" + key + "' appears before any section header");
      case Section::Grid:
        if (key == "n") cfg.n = parse_int(ctx, value);
        else if (key == "horizon") cfg.horizon = parse_ll(ctx, value);
        else ctx.fail("unknown [grid] key '" + key + "' (expected n or horizon)");
        break;
      case Section::Placement:
        if (key == "kind") {
          const auto kind = placement_kind_from_string(value);
          if (!kind) ctx.fail("unknown placement kind '" + value + "'");
          cfg.placement.kind = *kind;
        } else if (key == "k") {
          cfg.placement.k = parse_int(ctx, value);
        } else if (key == "anchor") {
          cfg.placement.anchor = parse_coord(ctx, value);
        } else if (key == "locations") {
          cfg.placement.custom_locations = parse_coord_list(ctx, value);
        } else {
          ctx.fail("unknown [placement] key '" + key + "' (expected kind, k, anchor or locations)");
        }
        break;
      case Section::Sweep:
        if (key == "n") sweep.n_values = parse_int_list(ctx, value);
        else if (key == "k") sweep.k_values = parse_int_list(ctx, value);
        else if (key == "mode") {
          const auto mode = run_mode_from_string(value);
          if (!mode) ctx.fail("unknown mode '" + value + "'");
          cfg.mode = *mode;
        } else {
          ctx.fail("unknown [sweep] key '" + key + "' (expected n, k or mode)");
        }
        break;
      case Section::Output:
        if (key == "dir") cfg.output_dir = value;
        else ctx.fail("unknown [output] key '" + key + "' (expected dir)");
        break;
    }
  }

  if (sweep_section_seen) cfg.sweep = std::move(sweep);
  validate(cfg);
  return cfg;
}

void validate(const ExperimentConfig& config) {
  GridGeometry probe(config.n);  // range check
  if (config.horizon && *config.horizon < 1) {
    throw ConfigError("horizon must be at least 1, got " + std::to_string(*config.horizon));
  }
  if (config.jobs < 0) throw ConfigError("jobs must be non-negative");
  if (config.placement.kind == PlacementKind::Custom &&
      config.placement.custom_locations.empty() && !config.sweep) {
    throw ConfigError("custom placement requires a locations list");
  }
  if (config.sweep) {
    for (int n : config.sweep->n_values) GridGeometry check(n);
    for (int k : config.sweep->k_values) {
      if (k < 1) throw ConfigError("sweep k values must be positive, got " + std::to_string(k));
    }
  }
  if (config.output_dir.empty()) throw ConfigError("output directory must not be empty");
}

std::uint64_t config_hash(const ExperimentConfig& config) {
  std::string canon;
  canon += "n=" + std::to_string(config.n);
  canon += ";mode=" + std::string(to_string(config.mode));
  canon += ";placement=" + to_string(config.placement);
  canon += ";horizon=" + (config.horizon ? std::to_string(*config.horizon) : "default");
  if (config.sweep) {
    canon += ";sweep_n=";
    for (int n : config.sweep->n_values) canon += std::to_string(n) + ",";
    canon += ";sweep_k=";
    for (int k : config.sweep->k_values) canon += std::to_string(k) + ",";
  }
  return fnv1a64(canon);
}

}  // namespace akr
