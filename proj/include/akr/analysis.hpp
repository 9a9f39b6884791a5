#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "akr/kernels.hpp"
#include "akr/marked_set.hpp"
#include "akr/placements.hpp"
#include "akr/state.hpp"

namespace akr {

struct StepMetrics {
  long long t = 0;
  double overlap = 0;     // inner product with the uniform initial state
  double p_marked = 0;    // probability of measuring a marked location
  double norm_error = 0;  // |squared norm - 1|
};

// First sign change of the overlap is detected with this threshold fallback.
inline constexpr double kOverlapZeroThreshold = 0.01;

struct StoppingReport {
  long long horizon = 0;
  long long t_overlap_zero = -1;  // -1: not reached within the horizon
  double overlap_at_zero = 0;
  long long t_peak = 0;  // earliest maximizer of p_marked
  double p_peak = 0;
  double classical_cost() const;  // t_peak / p_peak, inf when p_peak == 0
};

struct RunResult {
  std::vector<StepMetrics> metrics;  // t = 0..horizon
  StoppingReport stopping;
};

double overlap_with_initial(const WalkState& s);
double marked_probability(const WalkState& s, const MarkedSet& marked);

// ceil(2 * sqrt(N * ln N)), the default simulation horizon.
long long default_horizon(const GridGeometry& g);

StoppingReport detect_stopping(const std::vector<StepMetrics>& metrics);

RunResult run_walk(const GridGeometry& g, const MarkedSet& marked, long long horizon,
                   const kernels::KernelTable* table = nullptr);

// ---------------------------------------------------------------------------
// Claim reports: one record per verified property.
// ---------------------------------------------------------------------------

struct ClaimResult {
  std::string id;
  std::string statement;
  std::string status;  // PASS | FAIL | SKIP
  long long worst_t = -1;
  double observed = 0;
  double bound = 0;
  std::string note;
  bool failed() const { return status == "FAIL"; }
};

struct ClaimReport {
  std::vector<ClaimResult> claims;
  bool all_pass() const;
  std::string to_text() const;
  void append(ClaimReport other);
};

// ---------------------------------------------------------------------------
// Adjacent marked pairs and their sign invariant.
// ---------------------------------------------------------------------------

struct MutualPair {
  Coord a, b;                    // adjacent marked locations
  std::size_t state_a, state_b;  // the two basis states pointing at each other
};

// Every torus-adjacent pair of marked locations, with both pairs listed when
// n == 2 makes two cells adjacent in both directions.
std::vector<MutualPair> adjacent_marked_pairs(const MarkedSet& marked);

// The mutually pointing basis states of one adjacent marked pair; throws when
// the locations are not both marked or not adjacent.
MutualPair mutual_pair(const MarkedSet& marked, Coord a, Coord b);

// Checks that both amplitudes of every mutually pointing pair equal
// (-1)^t / sqrt(4N) at every step up to the horizon.
ClaimReport verify_adjacent_pair_invariant(const GridGeometry& g, const MarkedSet& marked,
                                           long long horizon);

// Norm drift |sum amp^2 - 1| stays below 1e-10 over the whole run.
ClaimReport verify_norm_preservation(const GridGeometry& g, const MarkedSet& marked,
                                     long long horizon);

// ---------------------------------------------------------------------------
// State partition for a block-shaped configuration.
// ---------------------------------------------------------------------------

// Disjoint basis-index sets covering all 4N states:
//   in   interior-cell states plus ring states pointing at the interior
//   per  ring states pointing at another ring cell
//   out  everything else
struct StatePartition {
  std::vector<std::uint32_t> out, in, per;
};

// c(k) = 4(k - 3*sqrt(k) + 2), the number of inner-part basis states.
std::size_t interior_state_count(int k);

StatePartition partition_basis(const GridGeometry& g, const PlacementSpec& block_spec);

// ---------------------------------------------------------------------------
// Paired-run comparisons.
// ---------------------------------------------------------------------------

struct FilledPerimeterComparison {
  ClaimReport report;
  RunResult filled, perimeter;
  // Observed range of the inner-part mutual overlap across all steps.
  double in_overlap_min = 0, in_overlap_max = 0;
};

// Lockstep run of the filled block vs its perimeter ring, checking the part
// equalities, the mutual-overlap lower bound 1 - 2c(k)/(4N), the probability
// gap bound c(k)/(4N), and the one-step peak-difference bound.
FilledPerimeterComparison compare_filled_vs_perimeter(const GridGeometry& g, int k,
                                                      Coord anchor, long long horizon);

struct PeriodicityReport {
  ClaimReport report;
  RunResult full, reduced;
};

// Checks the lattice periodicity of the distributed configuration at every
// step and matches the walk against an independent single-marked run on the
// (n/sqrt(k))-sided grid, rescaled by sqrt(k).
PeriodicityReport verify_distributed_periodicity(const GridGeometry& g, int k, Coord anchor,
                                                 long long horizon);

// The measured "number of steps" is reported under both candidate notions:
// the probability-peak step t_peak and the overlap-zero step t_overlap_zero.
// Quasi-periodic revivals can move the global p_marked maximum onto a late
// recurrence, so the overlap-zero ratio is the robust gap measure.
struct GapReport {
  int n = 0;
  int k = 0;
  long long horizon = 0;
  StoppingReport grouped, distributed;
  double peak_step_ratio = 0;     // t_peak(grouped) / t_peak(distributed)
  double overlap_zero_ratio = 0;  // t_overlap_zero(grouped) / t_overlap_zero(distributed)
  RunResult grouped_run, distributed_run;
  std::string to_text() const;
};

GapReport compare_grouped_vs_distributed(const GridGeometry& g, int k, Coord anchor,
                                         long long horizon);

}  // namespace akr
