#include "akr/geometry.hpp"

#include "akr/errors.hpp"

namespace akr {

const char* direction_name(Direction d) {
  switch (d) {
    case Direction::Up: return "up";
    case Direction::Down: return "down";
    case Direction::Left: return "left";
    case Direction::Right: return "right";
  }
  return "?";
}

std::string to_string(const Coord& c) {
  return std::to_string(c.x) + "," + std::to_string(c.y);
}

GridGeometry::GridGeometry(int side) : n_(side) {
  if (side < 2 || side > 16384) {
    throw ConfigError("grid side must be between 2 and 16384, got " + std::to_string(side));
  }
}

Coord GridGeometry::neighbor(Coord c, Direction d) const {
  switch (d) {
    case Direction::Up: return {c.x, wrap(c.y - 1)};
    case Direction::Down: return {c.x, wrap(c.y + 1)};
    case Direction::Left: return {wrap(c.x - 1), c.y};
    case Direction::Right: return {wrap(c.x + 1), c.y};
  }
  return c;
}

}  // namespace akr
