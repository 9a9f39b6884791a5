#include <cmath>

#include "doctest.h"

#include "akr/errors.hpp"
#include "akr/oracle.hpp"
#include "akr/walk.hpp"
#include "support.hpp"

using namespace akr;

TEST_CASE("step matrix is orthogonal") {
  support::Rng rng(31);
  for (int n : {2, 3}) {
    const GridGeometry g(n);
    for (std::size_t count : {std::size_t(0), std::size_t(1), std::size_t(3)}) {
      const MarkedSet m = count == 0 ? MarkedSet::none(g) : support::random_marked(g, rng, count);
      const DenseOperator u = build_step_matrix(g, m);
      CHECK(u.max_orthogonality_error() < 1e-10);
    }
  }
}

TEST_CASE("step matrix fixes the uniform state when nothing is marked") {
  const GridGeometry g(2);
  const std::vector<WalkState> traj = evolve_dense(g, MarkedSet::none(g), 5);
  const WalkState u = uniform_state(g);
  for (const WalkState& s : traj) {
    CHECK(max_abs_difference(s, u) < 1e-14);
  }
}

TEST_CASE("dense guard rejects large grids") {
  const GridGeometry g(33);  // 4N = 4356
  CHECK_THROWS_WITH_AS(build_step_matrix(g, MarkedSet::none(g)),
                       doctest::Contains("too large"), ConfigError);
}

TEST_CASE("two dense steps match two fast steps on a 4x4 grid") {
  const GridGeometry g(4);
  const MarkedSet m(g, {{1, 1}});
  const std::vector<WalkState> traj = evolve_dense(g, m, 2);
  WalkState fast = uniform_state(g);
  Walker w(g, m);
  w.step(fast);
  CHECK(max_abs_difference(fast, traj[1]) < 1e-12);
  w.step(fast);
  CHECK(max_abs_difference(fast, traj[2]) < 1e-12);
}

TEST_CASE("dense and fast trajectories agree on random marked sets") {
  support::Rng rng(555);
  for (int n : {2, 3, 4}) {
    const GridGeometry g(n);
    for (int trial = 0; trial < 5; ++trial) {
      const MarkedSet m = support::random_marked(g, rng, 1 + rng.below(g.locations()));
      const std::vector<WalkState> dense = evolve_dense(g, m, 25);
      WalkState fast = uniform_state(g);
      Walker w(g, m);
      for (int t = 0; t <= 25; ++t) {
        CAPTURE(n);
        CAPTURE(t);
        REQUIRE(max_abs_difference(fast, dense[std::size_t(t)]) < 1e-12);
        if (t < 25) w.step(fast);
      }
    }
  }
}

TEST_CASE("dense trajectory certifies the adjacent-pair sign independently") {
  // Vertical pair: the mutually pointing amplitudes are (0,0,down) and
  // (0,1,up); the dense path must show (-1)^t/sqrt(4N) on both.
  const GridGeometry g(4);
  const MarkedSet m(g, {{0, 0}, {0, 1}});
  const double amp = 1.0 / std::sqrt(64.0);
  const std::vector<WalkState> traj = evolve_dense(g, m, 25);
  for (std::size_t t = 0; t < traj.size(); ++t) {
    const double expected = (t % 2 == 0) ? amp : -amp;
    CHECK(std::abs(traj[t].at({0, 0}, Direction::Down) - expected) < 1e-12);
    CHECK(std::abs(traj[t].at({0, 1}, Direction::Up) - expected) < 1e-12);
  }
}
