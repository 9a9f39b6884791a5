#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "akr/marked_set.hpp"

namespace akr {

enum class PlacementKind { Single, Distributed, Block, Perimeter, Custom };

std::string_view to_string(PlacementKind kind);
std::optional<PlacementKind> placement_kind_from_string(std::string_view name);

// Declarative description of a marked configuration.
//   single      one cell at the anchor
//   distributed k cells on a sqrt(k) x sqrt(k) lattice with spacing n/sqrt(k)
//   block       a sqrt(k) x sqrt(k) square at the anchor (torus-wrapped)
//   perimeter   the boundary ring of that square, 4(sqrt(k)-1) cells
//   custom      an explicit list
// The anchor may be any integer pair; it is wrapped onto the torus.
struct PlacementSpec {
  PlacementKind kind = PlacementKind::Single;
  int k = 1;
  Coord anchor{0, 0};
  std::vector<Coord> custom_locations;
};

std::string to_string(const PlacementSpec& spec);

// sqrt(k) when k is a perfect square, -1 otherwise.
int perfect_square_root(int k);

// Deterministic and pure; throws ConfigError naming the violated constraint.
MarkedSet generate(const PlacementSpec& spec, const GridGeometry& geometry);

// The (sqrt(k)-2)^2 interior cells of a block/perimeter spec's square
// (empty when sqrt(k) <= 2). Other kinds are an error.
std::vector<Coord> interior_cells(const PlacementSpec& spec, const GridGeometry& geometry);

}  // namespace akr
