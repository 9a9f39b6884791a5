#include <algorithm>
#include <cmath>
#include <set>

#include "doctest.h"

#include "akr/analysis.hpp"
#include "akr/errors.hpp"
#include "akr/oracle.hpp"
#include "akr/walk.hpp"
#include "support.hpp"

using namespace akr;

TEST_CASE("overlap with the initial state") {
  const GridGeometry g(4);
  SUBCASE("uniform state overlaps itself with 1") {
    CHECK(overlap_with_initial(uniform_state(g)) == doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("zero-sum state has zero overlap") {
    WalkState s(g);
    s.at({0, 0}, Direction::Up) = 0.7;
    s.at({2, 2}, Direction::Down) = -0.7;
    CHECK(overlap_with_initial(s) == 0.0);
  }
}

TEST_CASE("marked probability") {
  const GridGeometry g(8);
  SUBCASE("uniform state gives k/N") {
    const MarkedSet m(g, {{0, 0}, {3, 3}, {7, 1}});
    CHECK(marked_probability(uniform_state(g), m) ==
          doctest::Approx(3.0 / 64.0).epsilon(1e-14));
  }
  SUBCASE("empty marked set gives 0") {
    CHECK(marked_probability(uniform_state(g), MarkedSet::none(g)) == 0.0);
  }
  SUBCASE("stays within [0, 1] along a run") {
    support::Rng rng(9);
    const MarkedSet m = support::random_marked(g, rng, 5);
    const RunResult r = run_walk(g, m, 300);
    for (const StepMetrics& s : r.metrics) {
      CHECK(s.p_marked >= 0.0);
      CHECK(s.p_marked <= 1.0 + 1e-12);
      CHECK(s.overlap <= 1.0 + 1e-10);
      CHECK(s.overlap >= -1.0 - 1e-10);
    }
  }
}

TEST_CASE("run with no marked locations is the fixed point") {
  const GridGeometry g(4);
  const RunResult r = run_walk(g, MarkedSet::none(g), 40);
  REQUIRE(r.metrics.size() == 41);
  for (const StepMetrics& m : r.metrics) {
    CHECK(m.overlap == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(m.p_marked == 0.0);
    CHECK(m.norm_error < 1e-14);
  }
  CHECK(r.stopping.t_overlap_zero == -1);
  CHECK(r.stopping.t_peak == 0);
  CHECK(r.stopping.p_peak == 0.0);
  CHECK(std::isinf(r.stopping.classical_cost()));
}

TEST_CASE("run metrics start at overlap 1 and p_marked k/N") {
  const GridGeometry g(16);
  const MarkedSet m(g, {{8, 8}});
  const RunResult r = run_walk(g, m, 5);
  CHECK(r.metrics[0].t == 0);
  CHECK(r.metrics[0].overlap == 1.0);
  CHECK(r.metrics[0].p_marked == 1.0 / 256.0);
  CHECK(r.metrics[0].norm_error == 0.0);
}

TEST_CASE("run trajectory matches the dense oracle trajectory") {
  const GridGeometry g(4);
  const MarkedSet m(g, {{1, 1}});
  const RunResult fast = run_walk(g, m, 20);
  const std::vector<WalkState> dense = evolve_dense(g, m, 20);
  for (std::size_t t = 0; t <= 20; ++t) {
    CHECK(std::abs(fast.metrics[t].overlap - overlap_with_initial(dense[t])) < 1e-12);
    CHECK(std::abs(fast.metrics[t].p_marked - marked_probability(dense[t], m)) < 1e-12);
  }
}

TEST_CASE("run rejects a non-positive horizon") {
  const GridGeometry g(4);
  CHECK_THROWS_AS(run_walk(g, MarkedSet::none(g), 0), ConfigError);
}

TEST_CASE("default horizon follows 2*sqrt(N ln N)") {
  const GridGeometry g(16);
  const double expect = std::ceil(2.0 * std::sqrt(256.0 * std::log(256.0)));
  CHECK(default_horizon(g) == static_cast<long long>(expect));
}

TEST_CASE("stopping detection picks the earliest peak and the overlap zero") {
  std::vector<StepMetrics> ms;
  ms.push_back({0, 1.0, 0.1, 0.0});
  ms.push_back({1, 0.5, 0.4, 0.0});
  ms.push_back({2, 0.009, 0.9, 0.0});
  ms.push_back({3, -0.4, 0.9, 0.0});
  const StoppingReport r = detect_stopping(ms);
  CHECK(r.t_overlap_zero == 2);  // |overlap| below threshold before the sign change
  CHECK(r.overlap_at_zero == 0.009);
  CHECK(r.t_peak == 2);          // earliest maximizer on the tie with t=3
  CHECK(r.p_peak == 0.9);
  CHECK(r.classical_cost() == doctest::Approx(2.0 / 0.9));
}

TEST_CASE("a sign change records the crossing endpoint closer to zero") {
  SUBCASE("previous step is closer") {
    std::vector<StepMetrics> ms{{0, 1.0, 0, 0}, {1, 0.04, 0, 0}, {2, -0.3, 0, 0}};
    const StoppingReport r = detect_stopping(ms);
    CHECK(r.t_overlap_zero == 1);
    CHECK(r.overlap_at_zero == 0.04);
  }
  SUBCASE("crossing step is closer") {
    std::vector<StepMetrics> ms{{0, 1.0, 0, 0}, {1, 0.3, 0, 0}, {2, -0.02, 0, 0}};
    const StoppingReport r = detect_stopping(ms);
    CHECK(r.t_overlap_zero == 2);
    CHECK(r.overlap_at_zero == -0.02);
  }
  SUBCASE("no crossing leaves the report empty") {
    std::vector<StepMetrics> ms{{0, 1.0, 0, 0}, {1, 0.8, 0, 0}};
    CHECK(detect_stopping(ms).t_overlap_zero == -1);
  }
}

TEST_CASE("single-marked 8x8 stopping values, recorded from simulation") {
  const GridGeometry g(8);
  const RunResult r = run_walk(g, MarkedSet(g, {{0, 0}}), default_horizon(g));
  CHECK(r.stopping.t_overlap_zero == 11);
  CHECK(r.stopping.overlap_at_zero == doctest::Approx(0.019531).epsilon(1e-4));
  CHECK(std::abs(r.stopping.overlap_at_zero) < 0.05);
  CHECK(r.stopping.t_peak == 10);
  CHECK(r.stopping.p_peak == doctest::Approx(0.325256).epsilon(1e-5));
}

TEST_CASE("single-marked 16x16 peak probability clears five times the initial") {
  const GridGeometry g(16);
  const RunResult r = run_walk(g, MarkedSet(g, {{7, 4}}), default_horizon(g));
  CHECK(r.stopping.p_peak >= 5.0 / 256.0);
  CHECK(r.stopping.t_overlap_zero >= 0);
  CHECK(r.stopping.t_overlap_zero <= default_horizon(g));
}

TEST_CASE("c(k) counts the inner-part basis states") {
  CHECK(interior_state_count(4) == 0);
  CHECK(interior_state_count(9) == 8);
  CHECK(interior_state_count(25) == 48);
  CHECK_THROWS_AS(interior_state_count(1), ConfigError);
  CHECK_THROWS_AS(interior_state_count(8), ConfigError);
}

TEST_CASE("state partition splits all 4N basis states disjointly") {
  const GridGeometry g(16);
  for (int k : {4, 9, 25}) {
    CAPTURE(k);
    const StatePartition p = partition_basis(g, {PlacementKind::Block, k, {5, 3}, {}});
    CHECK(p.in.size() == interior_state_count(k));

    std::set<std::uint32_t> seen;
    for (std::uint32_t i : p.out) seen.insert(i);
    for (std::uint32_t i : p.in) seen.insert(i);
    for (std::uint32_t i : p.per) seen.insert(i);
    CHECK(seen.size() == p.out.size() + p.in.size() + p.per.size());  // disjoint
    CHECK(seen.size() == g.basis_size());                             // covering
  }
}

TEST_CASE("state partition per-part for a 3x3 square") {
  // The ring of a 3x3 square is an 8-cycle; each ring cell points at its two
  // ring neighbours, so the per part has 16 states and the in part has
  // 4 interior states plus 4 inward ring states.
  const GridGeometry g(8);
  const StatePartition p = partition_basis(g, {PlacementKind::Perimeter, 9, {0, 0}, {}});
  CHECK(p.per.size() == 16);
  CHECK(p.in.size() == 8);
  CHECK(p.out.size() == g.basis_size() - 24);
}

TEST_CASE("state partition rejects unsupported specs") {
  const GridGeometry g(8);
  CHECK_THROWS_AS(partition_basis(g, {PlacementKind::Single, 1, {0, 0}, {}}), ConfigError);
  CHECK_THROWS_AS(partition_basis(g, {PlacementKind::Block, 1, {0, 0}, {}}), ConfigError);
}

TEST_CASE("adjacent marked pairs are enumerated with their pointing states") {
  const GridGeometry g(8);
  SUBCASE("an isolated cell has none") {
    CHECK(adjacent_marked_pairs(MarkedSet(g, {{4, 4}})).empty());
  }
  SUBCASE("a horizontal pair yields one mutual pair") {
    const MarkedSet m(g, {{2, 3}, {3, 3}});
    const auto pairs = adjacent_marked_pairs(m);
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0].state_a == g.basis_index({2, 3}, Direction::Right));
    CHECK(pairs[0].state_b == g.basis_index({3, 3}, Direction::Left));
  }
  SUBCASE("a 2x2 block yields 4 pairs") {
    const MarkedSet m = generate({PlacementKind::Block, 4, {1, 1}, {}}, g);
    CHECK(adjacent_marked_pairs(m).size() == 4);
  }
  SUBCASE("pairs wrap across the torus seam") {
    const MarkedSet m(g, {{7, 0}, {0, 0}});
    const auto pairs = adjacent_marked_pairs(m);
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0].state_a == g.basis_index({7, 0}, Direction::Right));
    CHECK(pairs[0].state_b == g.basis_index({0, 0}, Direction::Left));
  }
}

TEST_CASE("mutual_pair validates its arguments") {
  const GridGeometry g(8);
  const MarkedSet m(g, {{1, 1}, {1, 2}, {5, 5}});
  const MutualPair p = mutual_pair(m, {1, 1}, {1, 2});
  CHECK(p.state_a == g.basis_index({1, 1}, Direction::Down));
  CHECK(p.state_b == g.basis_index({1, 2}, Direction::Up));
  CHECK_THROWS_WITH_AS(mutual_pair(m, {1, 1}, {5, 5}), doctest::Contains("not adjacent"),
                       ConfigError);
  CHECK_THROWS_WITH_AS(mutual_pair(m, {1, 1}, {2, 1}), doctest::Contains("must be marked"),
                       ConfigError);
}
