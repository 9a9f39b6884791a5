#include "akr/analysis.hpp"

#include <cmath>
#include <limits>

#include "akr/errors.hpp"
#include "akr/walk.hpp"

namespace akr {
namespace {

void check_same_geometry(const GridGeometry& a, const GridGeometry& b) {
  if (!(a == b)) {
    throw ConfigError("grid side mismatch: " + std::to_string(a.side()) + " vs " +
                      std::to_string(b.side()));
  }
}

}  // namespace

double StoppingReport::classical_cost() const {
  if (p_peak <= 0.0) return std::numeric_limits<double>::infinity();
  return static_cast<double>(t_peak) / p_peak;
}

double overlap_with_initial(const WalkState& s) {
  const double* a = s.data();
  double sum = 0.0;
  for (std::size_t i = 0, m = s.size(); i < m; ++i) sum += a[i];
  return sum / std::sqrt(static_cast<double>(s.size()));
}

double marked_probability(const WalkState& s, const MarkedSet& marked) {
  check_same_geometry(s.geometry(), marked.geometry());
  const double* a = s.data();
  double p = 0.0;
  for (std::uint32_t c : marked.cell_indices()) {
    const double* g = a + 4 * std::size_t(c);
    p += (g[0] * g[0] + g[1] * g[1]) + (g[2] * g[2] + g[3] * g[3]);
  }
  return p;
}

long long default_horizon(const GridGeometry& g) {
  const double n_loc = static_cast<double>(g.locations());
  return static_cast<long long>(std::ceil(2.0 * std::sqrt(n_loc * std::log(n_loc))));
}

StoppingReport detect_stopping(const std::vector<StepMetrics>& metrics) {
  StoppingReport report;
  report.horizon = metrics.empty() ? 0 : metrics.back().t;
  double best = -1.0;
  for (std::size_t i = 0; i < metrics.size(); ++i) {
    const StepMetrics& m = metrics[i];
    if (report.t_overlap_zero < 0) {
      if (std::abs(m.overlap) < kOverlapZeroThreshold) {
        report.t_overlap_zero = m.t;
        report.overlap_at_zero = m.overlap;
      } else if (i > 0 && std::signbit(m.overlap) != std::signbit(metrics[i - 1].overlap)) {
        // The crossing happens between the two steps; record the endpoint
        // closer to zero, the better step to measure at.
        const StepMetrics& pick =
            std::abs(metrics[i - 1].overlap) <= std::abs(m.overlap) ? metrics[i - 1] : m;
        report.t_overlap_zero = pick.t;
        report.overlap_at_zero = pick.overlap;
      }
    }
    if (m.p_marked > best) {
      best = m.p_marked;
      report.t_peak = m.t;
      report.p_peak = m.p_marked;
    }
  }
  return report;
}

RunResult run_walk(const GridGeometry& g, const MarkedSet& marked, long long horizon,
                   const kernels::KernelTable* table) {
  if (horizon < 1) throw ConfigError("horizon must be at least 1");
  check_same_geometry(g, marked.geometry());

  RunResult result;
  result.metrics.reserve(static_cast<std::size_t>(horizon) + 1);
  WalkState s = uniform_state(g);
  Walker walker(g, marked, table);
  for (long long t = 0;; ++t) {
    result.metrics.push_back({t, overlap_with_initial(s), marked_probability(s, marked),
                              s.norm_error()});
    if (t == horizon) break;
    walker.step(s);
  }
  result.stopping = detect_stopping(result.metrics);
  return result;
}

std::size_t interior_state_count(int k) {
  const int r = perfect_square_root(k);
  if (r < 2) throw ConfigError("c(k) requires a perfect square k with sqrt(k) >= 2");
  return 4 * static_cast<std::size_t>(k - 3 * r + 2);
}

StatePartition partition_basis(const GridGeometry& g, const PlacementSpec& block_spec) {
  if (block_spec.kind != PlacementKind::Block && block_spec.kind != PlacementKind::Perimeter) {
    throw ConfigError("state partition requires a block or perimeter placement");
  }
  const int r = perfect_square_root(block_spec.k);
  if (r < 2) {
    throw ConfigError("state partition requires a perfect square k with sqrt(k) >= 2");
  }

  enum : std::uint8_t { kOutside = 0, kRing = 1, kInterior = 2 };
  std::vector<std::uint8_t> cell_class(g.locations(), kOutside);
  PlacementSpec block = block_spec;
  block.kind = PlacementKind::Block;
  const MarkedSet block_set = generate(block, g);
  for (const Coord& c : block_set.locations()) {
    cell_class[g.cell_index(c)] = kRing;
  }
  for (const Coord& c : interior_cells(block, g)) {
    cell_class[g.cell_index(c)] = kInterior;
  }

  StatePartition part;
  const int n = g.side();
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) {
      const Coord c{x, y};
      const std::uint8_t cls = cell_class[g.cell_index(c)];
      for (Direction d : kDirections) {
        const std::uint32_t idx = static_cast<std::uint32_t>(g.basis_index(c, d));
        if (cls == kInterior) {
          part.in.push_back(idx);
        } else if (cls == kRing) {
          const std::uint8_t nb = cell_class[g.cell_index(g.neighbor(c, d))];
          if (nb == kInterior) {
            part.in.push_back(idx);
          } else if (nb == kRing) {
            part.per.push_back(idx);
          } else {
            part.out.push_back(idx);
          }
        } else {
          part.out.push_back(idx);
        }
      }
    }
  }
  return part;
}

std::vector<MutualPair> adjacent_marked_pairs(const MarkedSet& marked) {
  const GridGeometry& g = marked.geometry();
  std::vector<MutualPair> pairs;
  for (const Coord& c : marked.locations()) {
    const Coord right = g.neighbor(c, Direction::Right);
    if (marked.contains(right)) {
      pairs.push_back({c, right, g.basis_index(c, Direction::Right),
                       g.basis_index(right, Direction::Left)});
    }
    const Coord down = g.neighbor(c, Direction::Down);
    if (marked.contains(down)) {
      pairs.push_back({c, down, g.basis_index(c, Direction::Down),
                       g.basis_index(down, Direction::Up)});
    }
  }
  return pairs;
}

MutualPair mutual_pair(const MarkedSet& marked, Coord a, Coord b) {
  const GridGeometry& g = marked.geometry();
  a = g.wrap(a);
  b = g.wrap(b);
  if (!marked.contains(a) || !marked.contains(b)) {
    throw ConfigError("mutual pair: both locations must be marked (" + to_string(a) + ", " +
                      to_string(b) + ")");
  }
  for (Direction d : kDirections) {
    if (g.neighbor(a, d) == b) {
      return {a, b, g.basis_index(a, d), g.basis_index(b, opposite(d))};
    }
  }
  throw ConfigError("mutual pair: locations " + to_string(a) + " and " + to_string(b) +
                    " are not adjacent");
}

}  // namespace akr
