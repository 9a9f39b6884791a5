#include "doctest.h"

#include "akr/errors.hpp"
#include "akr/geometry.hpp"
#include "akr/marked_set.hpp"

using namespace akr;

TEST_CASE("grid geometry validates the side length") {
  CHECK_THROWS_AS(GridGeometry(1), ConfigError);
  CHECK_THROWS_AS(GridGeometry(0), ConfigError);
  CHECK_THROWS_AS(GridGeometry(-4), ConfigError);
  CHECK_THROWS_AS(GridGeometry(20000), ConfigError);
  const GridGeometry g(5);
  CHECK(g.side() == 5);
  CHECK(g.locations() == 25);
  CHECK(g.basis_size() == 100);
}

TEST_CASE("coordinates wrap on the torus") {
  const GridGeometry g(4);
  CHECK(g.wrap(-1) == 3);
  CHECK(g.wrap(4) == 0);
  CHECK(g.wrap(9) == 1);
  CHECK(g.wrap(Coord{-1, 5}) == Coord{3, 1});
}

TEST_CASE("basis index layout is 4*(y*n + x) + direction") {
  const GridGeometry g(4);
  CHECK(g.basis_index({0, 0}, Direction::Up) == 0);
  CHECK(g.basis_index({0, 0}, Direction::Right) == 3);
  CHECK(g.basis_index({1, 0}, Direction::Up) == 4);
  CHECK(g.basis_index({0, 1}, Direction::Up) == 16);
  CHECK(g.basis_index({3, 3}, Direction::Right) == 63);
}

TEST_CASE("direction opposites invert") {
  for (Direction d : kDirections) {
    CHECK(opposite(opposite(d)) == d);
  }
  CHECK(opposite(Direction::Up) == Direction::Down);
  CHECK(opposite(Direction::Left) == Direction::Right);
}

TEST_CASE("neighbor moves one cell with wraparound, up decrements y") {
  const GridGeometry g(4);
  CHECK(g.neighbor({1, 1}, Direction::Up) == Coord{1, 0});
  CHECK(g.neighbor({1, 1}, Direction::Down) == Coord{1, 2});
  CHECK(g.neighbor({1, 1}, Direction::Left) == Coord{0, 1});
  CHECK(g.neighbor({1, 1}, Direction::Right) == Coord{2, 1});
  CHECK(g.neighbor({0, 0}, Direction::Up) == Coord{0, 3});
  CHECK(g.neighbor({3, 2}, Direction::Right) == Coord{0, 2});
}

TEST_CASE("marked set validates, dedupes and sorts") {
  const GridGeometry g(4);
  CHECK_THROWS_AS(MarkedSet(g, {{4, 0}}), ConfigError);
  CHECK_THROWS_AS(MarkedSet(g, {{0, -1}}), ConfigError);

  const MarkedSet m(g, {{2, 1}, {0, 0}, {2, 1}});
  CHECK(m.size() == 2);
  CHECK(m.contains({0, 0}));
  CHECK(m.contains({2, 1}));
  CHECK_FALSE(m.contains({1, 1}));
  CHECK(m.locations()[0] == Coord{0, 0});  // cell-index order
  CHECK(m.cell_indices()[1] == 6);
}

TEST_CASE("marked set hash depends on membership and geometry") {
  const GridGeometry g(4);
  const MarkedSet a(g, {{1, 1}, {2, 2}});
  const MarkedSet b(g, {{2, 2}, {1, 1}});
  const MarkedSet c(g, {{1, 1}});
  CHECK(a.hash() == b.hash());
  CHECK(a.hash() != c.hash());
  CHECK(a.hash() != MarkedSet(GridGeometry(8), {{1, 1}, {2, 2}}).hash());
}
