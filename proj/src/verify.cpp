// Claim-producing verifiers: adjacent-pair sign invariant, norm drift,
// filled-vs-perimeter lockstep comparison, distributed-lattice periodicity,
// and the grouped-vs-distributed gap report.

#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>

#include "akr/analysis.hpp"
#include "akr/errors.hpp"
#include "akr/walk.hpp"

namespace akr {
namespace {

constexpr double kExactTol = 1e-12;
constexpr double kBoundSlack = 1e-10;
constexpr double kNormTol = 1e-10;

std::string format_g(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct WorstTracker {
  double value = 0;
  long long t = -1;
  void update(double candidate, long long at) {
    if (t < 0 || candidate > value) {
      value = candidate;
      t = at;
    }
  }
};

ClaimResult upper_bound_claim(std::string id, std::string statement, const WorstTracker& w,
                              double bound) {
  ClaimResult c;
  c.id = std::move(id);
  c.statement = std::move(statement);
  c.worst_t = w.t;
  c.observed = w.value;
  c.bound = bound;
  c.status = (w.value <= bound) ? "PASS" : "FAIL";
  return c;
}

ClaimResult skip_claim(std::string id, std::string statement, std::string note) {
  ClaimResult c;
  c.id = std::move(id);
  c.statement = std::move(statement);
  c.status = "SKIP";
  c.note = std::move(note);
  return c;
}

}  // namespace

bool ClaimReport::all_pass() const {
  for (const ClaimResult& c : claims) {
    if (c.failed()) return false;
  }
  return true;
}

void ClaimReport::append(ClaimReport other) {
  for (ClaimResult& c : other.claims) claims.push_back(std::move(c));
}

std::string ClaimReport::to_text() const {
  std::string out;
  for (const ClaimResult& c : claims) {
    out += "claim=" + c.id;
    out += " status=" + c.status;
    out += " worst_t=" + std::to_string(c.worst_t);
    out += " observed=" + format_g(c.observed);
    out += " bound=" + format_g(c.bound);
    out += " statement=\"" + c.statement + "\"";
    if (!c.note.empty()) out += " note=\"" + c.note + "\"";
    out += "\n";
  }
  return out;
}

ClaimReport verify_adjacent_pair_invariant(const GridGeometry& g, const MarkedSet& marked,
                                           long long horizon) {
  const std::string statement =
      "mutually pointing amplitudes of every adjacent marked pair equal (-1)^t/sqrt(4N)";
  ClaimReport report;
  const std::vector<MutualPair> pairs = adjacent_marked_pairs(marked);
  if (pairs.empty()) {
    report.claims.push_back(
        skip_claim("adjacent-pair-sign", statement, "no adjacent marked pairs"));
    return report;
  }

  const double amp = 1.0 / std::sqrt(static_cast<double>(g.basis_size()));
  WalkState s = uniform_state(g);
  Walker walker(g, marked);
  WorstTracker worst;
  for (long long t = 0;; ++t) {
    const double expected = (t % 2 == 0) ? amp : -amp;
    const double* a = s.data();
    for (const MutualPair& p : pairs) {
      const double dev =
          std::max(std::abs(a[p.state_a] - expected), std::abs(a[p.state_b] - expected));
      worst.update(dev, t);
    }
    if (t == horizon) break;
    walker.step(s);
  }

  ClaimResult c = upper_bound_claim("adjacent-pair-sign", statement, worst, kExactTol);
  c.note = "pairs=" + std::to_string(pairs.size());
  report.claims.push_back(std::move(c));
  return report;
}

ClaimReport verify_norm_preservation(const GridGeometry& g, const MarkedSet& marked,
                                     long long horizon) {
  WalkState s = uniform_state(g);
  Walker walker(g, marked);
  WorstTracker worst;
  for (long long t = 0;; ++t) {
    worst.update(s.norm_error(), t);
    if (t == horizon) break;
    walker.step(s);
  }
  ClaimReport report;
  report.claims.push_back(upper_bound_claim(
      "norm-preservation", "|sum of squared amplitudes - 1| stays small at every step", worst,
      kNormTol));
  return report;
}

FilledPerimeterComparison compare_filled_vs_perimeter(const GridGeometry& g, int k,
                                                      Coord anchor, long long horizon) {
  if (horizon < 1) throw ConfigError("horizon must be at least 1");
  const int r = perfect_square_root(k);
  if (r < 2) {
    throw ConfigError("filled-vs-perimeter comparison requires a perfect square k with "
                      "sqrt(k) >= 2, got k=" + std::to_string(k));
  }

  const PlacementSpec block_spec{PlacementKind::Block, k, anchor, {}};
  const PlacementSpec perim_spec{PlacementKind::Perimeter, k, anchor, {}};
  const MarkedSet filled_set = generate(block_spec, g);
  const MarkedSet perim_set = generate(perim_spec, g);
  const StatePartition part = partition_basis(g, block_spec);

  const double ck = static_cast<double>(interior_state_count(k));
  const double n4 = static_cast<double>(g.basis_size());
  const double overlap_bound = 1.0 - 2.0 * ck / n4 - kBoundSlack;
  const double gap_bound = ck / n4 + kBoundSlack;
  const double amp = 1.0 / std::sqrt(n4);

  FilledPerimeterComparison cmp;
  cmp.in_overlap_min = std::numeric_limits<double>::infinity();
  cmp.in_overlap_max = -std::numeric_limits<double>::infinity();

  WalkState sf = uniform_state(g);
  WalkState sp = uniform_state(g);
  Walker wf(g, filled_set);
  Walker wp(g, perim_set);

  WorstTracker per_dev, out_dev, in_sign_dev, prob_gap;
  double min_mutual = std::numeric_limits<double>::infinity();
  long long min_mutual_t = -1;

  for (long long t = 0;; ++t) {
    const double pf = marked_probability(sf, filled_set);
    const double pp = marked_probability(sp, perim_set);
    cmp.filled.metrics.push_back({t, overlap_with_initial(sf), pf, sf.norm_error()});
    cmp.perimeter.metrics.push_back({t, overlap_with_initial(sp), pp, sp.norm_error()});

    const double* af = sf.data();
    const double* ap = sp.data();
    for (std::uint32_t i : part.per) per_dev.update(std::abs(af[i] - ap[i]), t);
    for (std::uint32_t i : part.out) out_dev.update(std::abs(af[i] - ap[i]), t);

    const double expected = (t % 2 == 0) ? amp : -amp;
    double in_dot = 0.0;
    for (std::uint32_t i : part.in) {
      in_sign_dev.update(std::abs(af[i] - expected), t);
      in_dot += af[i] * ap[i];
    }
    if (in_dot < cmp.in_overlap_min) cmp.in_overlap_min = in_dot;
    if (in_dot > cmp.in_overlap_max) cmp.in_overlap_max = in_dot;

    double mutual = 0.0;
    for (std::size_t i = 0, m = sf.size(); i < m; ++i) mutual += af[i] * ap[i];
    if (min_mutual_t < 0 || mutual < min_mutual) {
      min_mutual = mutual;
      min_mutual_t = t;
    }

    prob_gap.update(std::abs(pf - pp), t);

    if (t == horizon) break;
    wf.step(sf);
    wp.step(sp);
  }

  cmp.filled.stopping = detect_stopping(cmp.filled.metrics);
  cmp.perimeter.stopping = detect_stopping(cmp.perimeter.metrics);

  ClaimReport& rep = cmp.report;
  rep.claims.push_back(upper_bound_claim(
      "per-part-equality",
      "ring-pointing perimeter amplitudes agree between the filled and perimeter runs",
      per_dev, kExactTol));
  rep.claims.push_back(upper_bound_claim(
      "out-part-equality",
      "outer-part amplitudes agree between the filled and perimeter runs", out_dev,
      kExactTol));
  if (part.in.empty()) {
    rep.claims.push_back(skip_claim(
        "in-part-sign-filled",
        "inner-part amplitudes of the filled run equal (-1)^t/sqrt(4N)",
        "no inner-part states: c(" + std::to_string(k) + ")=0, the configurations coincide"));
  } else {
    rep.claims.push_back(upper_bound_claim(
        "in-part-sign-filled",
        "inner-part amplitudes of the filled run equal (-1)^t/sqrt(4N)", in_sign_dev,
        kExactTol));
  }

  ClaimResult overlap_claim;
  overlap_claim.id = "mutual-overlap-bound";
  overlap_claim.statement = "<filled(t)|perimeter(t)> >= 1 - 2*c(k)/(4N) at every step";
  overlap_claim.worst_t = min_mutual_t;
  overlap_claim.observed = min_mutual;
  overlap_claim.bound = overlap_bound;
  overlap_claim.status = (min_mutual >= overlap_bound) ? "PASS" : "FAIL";
  rep.claims.push_back(std::move(overlap_claim));

  rep.claims.push_back(upper_bound_claim(
      "probability-gap-bound",
      "|p_marked(filled) - p_marked(perimeter)| <= c(k)/(4N) at every step", prob_gap,
      gap_bound));

  ClaimResult peak_claim;
  peak_claim.id = "peak-step-difference";
  peak_claim.statement = "|t_peak(filled) - t_peak(perimeter)| <= 1";
  peak_claim.observed = static_cast<double>(
      std::abs(cmp.filled.stopping.t_peak - cmp.perimeter.stopping.t_peak));
  peak_claim.bound = 1.0;
  peak_claim.worst_t = cmp.filled.stopping.t_peak;
  peak_claim.status = (peak_claim.observed <= peak_claim.bound) ? "PASS" : "FAIL";
  peak_claim.note = "t_peak filled=" + std::to_string(cmp.filled.stopping.t_peak) +
                    " perimeter=" + std::to_string(cmp.perimeter.stopping.t_peak);
  rep.claims.push_back(std::move(peak_claim));

  return cmp;
}

PeriodicityReport verify_distributed_periodicity(const GridGeometry& g, int k, Coord anchor,
                                                 long long horizon) {
  if (horizon < 1) throw ConfigError("horizon must be at least 1");
  const PlacementSpec spec{PlacementKind::Distributed, k, anchor, {}};
  const MarkedSet marked = generate(spec, g);  // validates sqrt(k) | n
  const int r = perfect_square_root(k);
  const int n = g.side();
  const int m = n / r;  // lattice spacing and reduced grid side

  PeriodicityReport rep;

  WalkState s = uniform_state(g);
  Walker walker(g, marked);

  // Independent single-marked walk on the m x m grid; each lattice region of
  // the full walk should mirror it with amplitudes scaled by 1/sqrt(k).
  std::optional<GridGeometry> reduced_geom;
  std::optional<MarkedSet> reduced_marked;
  std::optional<Walker> reduced_walker;
  std::optional<WalkState> rs;
  if (m >= 2) {
    reduced_geom.emplace(m);
    reduced_marked.emplace(*reduced_geom,
                           std::vector<Coord>{{g.wrap(anchor).x % m, g.wrap(anchor).y % m}});
    reduced_walker.emplace(*reduced_geom, *reduced_marked);
    rs.emplace(uniform_state(*reduced_geom));
  }
  const double scale = static_cast<double>(r);  // sqrt(k)

  WorstTracker periodicity, reduced_match;
  for (long long t = 0;; ++t) {
    rep.full.metrics.push_back(
        {t, overlap_with_initial(s), marked_probability(s, marked), s.norm_error()});
    if (rs) {
      rep.reduced.metrics.push_back({t, overlap_with_initial(*rs),
                                     marked_probability(*rs, *reduced_marked),
                                     rs->norm_error()});
    }

    const double* a = s.data();
    for (int y = 0; y < n; ++y) {
      const int ys = (y + m) % n;
      for (int x = 0; x < n; ++x) {
        const int xs = (x + m) % n;
        for (Direction d : kDirections) {
          const double v = a[g.basis_index({x, y}, d)];
          periodicity.update(std::abs(v - a[g.basis_index({xs, y}, d)]), t);
          periodicity.update(std::abs(v - a[g.basis_index({x, ys}, d)]), t);
          if (rs) {
            const double v_small = rs->at({x % m, y % m}, d);
            reduced_match.update(std::abs(v * scale - v_small), t);
          }
        }
      }
    }

    if (t == horizon) break;
    walker.step(s);
    if (rs) reduced_walker->step(*rs);
  }

  rep.full.stopping = detect_stopping(rep.full.metrics);
  if (rs) rep.reduced.stopping = detect_stopping(rep.reduced.metrics);

  rep.report.claims.push_back(upper_bound_claim(
      "lattice-periodicity",
      "amplitudes are invariant under lattice translations by n/sqrt(k) in x and in y",
      periodicity, kExactTol));
  if (rs) {
    rep.report.claims.push_back(upper_bound_claim(
        "reduced-walk-match",
        "sqrt(k)-scaled amplitudes match the single-marked walk on the reduced grid",
        reduced_match, kExactTol));

    ClaimResult peak;
    peak.id = "reduced-peak-match";
    peak.statement = "t_peak equals the single-marked reduced-grid t_peak";
    peak.observed = static_cast<double>(
        std::abs(rep.full.stopping.t_peak - rep.reduced.stopping.t_peak));
    peak.bound = 0.0;
    peak.worst_t = rep.full.stopping.t_peak;
    peak.status = (rep.full.stopping.t_peak == rep.reduced.stopping.t_peak) ? "PASS" : "FAIL";
    peak.note = "t_peak full=" + std::to_string(rep.full.stopping.t_peak) +
                " reduced=" + std::to_string(rep.reduced.stopping.t_peak);
    rep.report.claims.push_back(std::move(peak));
  } else {
    rep.report.claims.push_back(skip_claim(
        "reduced-walk-match",
        "sqrt(k)-scaled amplitudes match the single-marked walk on the reduced grid",
        "reduced grid side n/sqrt(k)=1 is below the minimum grid size"));
  }
  return rep;
}

std::string GapReport::to_text() const {
  char buf[256];
  std::string out;
  out += "mode grouped-vs-distributed\n";
  out += "n " + std::to_string(n) + "\n";
  out += "k " + std::to_string(k) + "\n";
  out += "horizon " + std::to_string(horizon) + "\n";
  std::snprintf(buf, sizeof(buf),
                "grouped t_peak %lld p_peak %.9g t_overlap_zero %lld classical_cost %.9g\n",
                grouped.t_peak, grouped.p_peak, grouped.t_overlap_zero,
                grouped.classical_cost());
  out += buf;
  std::snprintf(buf, sizeof(buf),
                "distributed t_peak %lld p_peak %.9g t_overlap_zero %lld classical_cost %.9g\n",
                distributed.t_peak, distributed.p_peak, distributed.t_overlap_zero,
                distributed.classical_cost());
  out += buf;
  std::snprintf(buf, sizeof(buf), "peak_step_ratio %.9g\n", peak_step_ratio);
  out += buf;
  std::snprintf(buf, sizeof(buf), "overlap_zero_ratio %.9g\n", overlap_zero_ratio);
  out += buf;
  return out;
}

GapReport compare_grouped_vs_distributed(const GridGeometry& g, int k, Coord anchor,
                                         long long horizon) {
  const PlacementSpec grouped_spec{PlacementKind::Block, k, anchor, {}};
  const PlacementSpec distributed_spec{PlacementKind::Distributed, k, anchor, {}};

  GapReport rep;
  rep.n = g.side();
  rep.k = k;
  rep.horizon = horizon;
  rep.grouped_run = run_walk(g, generate(grouped_spec, g), horizon);
  rep.distributed_run = run_walk(g, generate(distributed_spec, g), horizon);
  rep.grouped = rep.grouped_run.stopping;
  rep.distributed = rep.distributed_run.stopping;
  auto ratio = [](long long num, long long den) {
    return den > 0 ? static_cast<double>(num) / static_cast<double>(den)
                   : std::numeric_limits<double>::infinity();
  };
  rep.peak_step_ratio = ratio(rep.grouped.t_peak, rep.distributed.t_peak);
  rep.overlap_zero_ratio = ratio(rep.grouped.t_overlap_zero, rep.distributed.t_overlap_zero);
  return rep;
}

}  // namespace akr
