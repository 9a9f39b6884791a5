#include <cmath>
#include <sstream>

#include "doctest.h"

#include "akr/errors.hpp"
#include "akr/state.hpp"
#include "akr/walk.hpp"
#include "support.hpp"

using namespace akr;

TEST_CASE("uniform state has every amplitude 1/sqrt(4N)") {
  SUBCASE("n=2: all 16 amplitudes are 1/4") {
    const WalkState s = uniform_state(GridGeometry(2));
    REQUIRE(s.size() == 16);
    for (double a : s.amplitudes()) CHECK(a == 0.25);
  }
  SUBCASE("n=4: all 64 amplitudes are 1/8") {
    const WalkState s = uniform_state(GridGeometry(4));
    REQUIRE(s.size() == 64);
    for (double a : s.amplitudes()) CHECK(a == 0.125);
  }
  SUBCASE("squared norm is 1 for assorted sides") {
    for (int n : {2, 3, 5, 7, 16}) {
      const WalkState s = uniform_state(GridGeometry(n));
      CHECK(std::abs(s.squared_norm() - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("query negates exactly the marked cells") {
  const GridGeometry g(4);
  const WalkState u = uniform_state(g);

  SUBCASE("empty marked set leaves the state unchanged") {
    CHECK(apply_query(u, MarkedSet::none(g)) == u);
  }

  SUBCASE("single marked cell flips its four amplitudes") {
    const MarkedSet m(g, {{0, 0}});
    const WalkState q = apply_query(u, m);
    const double amp = 1.0 / 8.0;
    for (Direction d : kDirections) {
      CHECK(q.at({0, 0}, d) == -amp);
      CHECK(q.at({1, 0}, d) == amp);
      CHECK(q.at({2, 3}, d) == amp);
    }
    CHECK(q.squared_norm() == u.squared_norm());
  }

  SUBCASE("query twice is the identity, bit-exact") {
    support::Rng rng(7);
    const WalkState s = support::random_state(g, rng);
    const MarkedSet m = support::random_marked(g, rng, 5);
    CHECK(apply_query(apply_query(s, m), m) == s);
  }
}

TEST_CASE("coin applies the diffusion at unmarked cells only") {
  const GridGeometry g(2);

  SUBCASE("basis vector maps to the diffusion column") {
    WalkState s(g);
    s.at({0, 0}, Direction::Up) = 1.0;
    const WalkState c = apply_coin(s, MarkedSet::none(g));
    CHECK(c.at({0, 0}, Direction::Up) == -0.5);
    CHECK(c.at({0, 0}, Direction::Down) == 0.5);
    CHECK(c.at({0, 0}, Direction::Left) == 0.5);
    CHECK(c.at({0, 0}, Direction::Right) == 0.5);
    for (Direction d : kDirections) CHECK(c.at({1, 1}, d) == 0.0);
  }

  SUBCASE("the uniform 4-vector is a fixed point") {
    WalkState s(g);
    for (Direction d : kDirections) s.at({1, 0}, d) = 0.3;
    const WalkState c = apply_coin(s, MarkedSet::none(g));
    for (Direction d : kDirections) CHECK(c.at({1, 0}, d) == 0.3);
  }

  SUBCASE("marked cells pass through unchanged") {
    support::Rng rng(21);
    const WalkState s = support::random_state(g, rng);
    const MarkedSet m(g, {{0, 1}});
    const WalkState c = apply_coin(s, m);
    for (Direction d : kDirections) {
      CHECK(c.at({0, 1}, d) == s.at({0, 1}, d));
    }
    CHECK(c.at({0, 0}, Direction::Up) != s.at({0, 0}, Direction::Up));
  }
}

TEST_CASE("shift moves amplitudes to the neighbour and reverses direction") {
  const GridGeometry g(4);

  SUBCASE("right amplitude lands one cell right as a left amplitude") {
    WalkState s(g);
    s.at({0, 0}, Direction::Right) = 1.0;
    const WalkState t = apply_shift(s);
    CHECK(t.at({1, 0}, Direction::Left) == 1.0);
    CHECK(t.at({0, 0}, Direction::Right) == 0.0);
  }

  SUBCASE("wraps across the right edge") {
    WalkState s(g);
    s.at({3, 1}, Direction::Right) = 1.0;
    const WalkState t = apply_shift(s);
    CHECK(t.at({0, 1}, Direction::Left) == 1.0);
  }

  SUBCASE("up amplitude lands one cell up as a down amplitude") {
    WalkState s(g);
    s.at({2, 0}, Direction::Up) = 1.0;
    const WalkState t = apply_shift(s);
    CHECK(t.at({2, 3}, Direction::Down) == 1.0);
  }

  SUBCASE("shift twice is the identity, bit-exact") {
    support::Rng rng(3);
    for (int n : {2, 3, 5}) {
      const GridGeometry gg(n);
      const WalkState s = support::random_state(gg, rng);
      CHECK(apply_shift(apply_shift(s)) == s);
    }
  }
}

TEST_CASE("step leaves the uniform state fixed when nothing is marked") {
  const GridGeometry g(5);
  const WalkState u = uniform_state(g);
  WalkState s = u;
  Walker w(g, MarkedSet::none(g));
  for (int t = 0; t < 50; ++t) w.step(s);
  CHECK(max_abs_difference(s, u) == 0.0);  // coin and shift are exact here
}

TEST_CASE("step with every location marked returns after two steps") {
  const GridGeometry g(3);
  std::vector<Coord> all;
  for (int y = 0; y < 3; ++y) {
    for (int x = 0; x < 3; ++x) all.push_back({x, y});
  }
  const MarkedSet m(g, all);
  support::Rng rng(11);
  const WalkState s0 = support::random_state(g, rng);
  const WalkState s2 = step(step(s0, m), m);
  CHECK(s2 == s0);
}

TEST_CASE("step preserves the norm per step and over ten thousand steps") {
  support::Rng rng(5);
  const GridGeometry g(8);
  const MarkedSet m = support::random_marked(g, rng, 6);
  WalkState s = uniform_state(g);
  Walker w(g, m);
  for (int t = 0; t < 500; ++t) {
    w.step(s);
    CHECK(s.norm_error() < 1e-12);
  }
  for (int t = 500; t < 10000; ++t) w.step(s);
  CHECK(s.norm_error() < 1e-10);
}

TEST_CASE("geometry mismatch between state and marked set is rejected") {
  const WalkState s = uniform_state(GridGeometry(4));
  const MarkedSet m(GridGeometry(8), {{0, 0}});
  CHECK_THROWS_AS(step(s, m), ConfigError);
}

TEST_CASE("runs are deterministic: identical inputs, identical bits") {
  const GridGeometry g(8);
  const MarkedSet m(g, {{1, 1}, {5, 2}, {3, 7}});
  WalkState a = uniform_state(g);
  WalkState b = uniform_state(g);
  Walker wa(g, m);
  Walker wb(g, m);
  for (int t = 0; t < 100; ++t) {
    wa.step(a);
    wb.step(b);
  }
  CHECK(a == b);
}

TEST_CASE("snapshot writes and reads back bit-identical amplitudes") {
  const GridGeometry g(4);
  support::Rng rng(13);
  const MarkedSet m = support::random_marked(g, rng, 3);
  WalkState s = uniform_state(g);
  Walker w(g, m);
  for (int t = 0; t < 17; ++t) w.step(s);

  std::stringstream buf;
  write_snapshot(buf, s, 17, m.hash());
  const Snapshot snap = read_snapshot(buf);
  CHECK(snap.t == 17);
  CHECK(snap.marked_hash == m.hash());
  CHECK(snap.state == s);
}

TEST_CASE("snapshot reader rejects malformed headers") {
  std::stringstream buf("not-a-snapshot 1\n");
  CHECK_THROWS_AS(read_snapshot(buf), IoError);
  std::stringstream truncated("akrwalk-state 1\nn 4\nt 0\nmarked 0\n1.0\n");
  CHECK_THROWS_AS(read_snapshot(truncated), IoError);
}
