#pragma once

#include <compare>
#include <cstddef>
#include <string>

namespace akr {

// Coin directions in their fixed serialization order: up, down, left, right.
enum class Direction : int { Up = 0, Down = 1, Left = 2, Right = 3 };

inline constexpr Direction kDirections[4] = {Direction::Up, Direction::Down,
                                             Direction::Left, Direction::Right};

constexpr int ordinal(Direction d) { return static_cast<int>(d); }

constexpr Direction opposite(Direction d) {
  switch (d) {
    case Direction::Up: return Direction::Down;
    case Direction::Down: return Direction::Up;
    case Direction::Left: return Direction::Right;
    case Direction::Right: return Direction::Left;
  }
  return d;
}

const char* direction_name(Direction d);

struct Coord {
  int x = 0;
  int y = 0;
  friend constexpr auto operator<=>(const Coord&, const Coord&) = default;
};

std::string to_string(const Coord& c);  // "x,y"

// Square n-by-n grid with periodic boundaries. x indexes columns (the
// left/right axis), y indexes rows (the up/down axis); moving up decrements y.
// Basis states are laid out as 4*(y*n + x) + direction ordinal.
class GridGeometry {
 public:
  explicit GridGeometry(int side);

  int side() const { return n_; }
  std::size_t locations() const { return std::size_t(n_) * std::size_t(n_); }  // N
  std::size_t basis_size() const { return 4 * locations(); }                   // 4N

  int wrap(int c) const {
    int m = c % n_;
    return m < 0 ? m + n_ : m;
  }
  Coord wrap(Coord c) const { return {wrap(c.x), wrap(c.y)}; }
  bool in_range(Coord c) const { return c.x >= 0 && c.x < n_ && c.y >= 0 && c.y < n_; }

  std::size_t cell_index(Coord c) const { return std::size_t(c.y) * n_ + c.x; }
  std::size_t basis_index(Coord c, Direction d) const {
    return 4 * cell_index(c) + ordinal(d);
  }

  // The cell one step away in the given direction, with wraparound.
  Coord neighbor(Coord c, Direction d) const;

  friend bool operator==(const GridGeometry& a, const GridGeometry& b) { return a.n_ == b.n_; }

 private:
  int n_;
};

}  // namespace akr
