#include "akr/placements.hpp"

#include <cmath>

#include "akr/errors.hpp"

namespace akr {

std::string_view to_string(PlacementKind kind) {
  switch (kind) {
    case PlacementKind::Single: return "single";
    case PlacementKind::Distributed: return "distributed";
    case PlacementKind::Block: return "block";
    case PlacementKind::Perimeter: return "perimeter";
    case PlacementKind::Custom: return "custom";
  }
  return "?";
}

std::optional<PlacementKind> placement_kind_from_string(std::string_view name) {
  if (name == "single") return PlacementKind::Single;
  if (name == "distributed") return PlacementKind::Distributed;
  if (name == "block") return PlacementKind::Block;
  if (name == "perimeter") return PlacementKind::Perimeter;
  if (name == "custom") return PlacementKind::Custom;
  return std::nullopt;
}

std::string to_string(const PlacementSpec& spec) {
  std::string s{to_string(spec.kind)};
  if (spec.kind != PlacementKind::Single && spec.kind != PlacementKind::Custom) {
    s += " k=" + std::to_string(spec.k);
  }
  if (spec.kind == PlacementKind::Custom) {
    s += " locations=";
    for (std::size_t i = 0; i < spec.custom_locations.size(); ++i) {
      if (i != 0) s += ';';
      s += to_string(spec.custom_locations[i]);
    }
  } else {
    s += " anchor=" + to_string(spec.anchor);
  }
  return s;
}

int perfect_square_root(int k) {
  if (k < 0) return -1;
  const int r = static_cast<int>(std::lround(std::sqrt(static_cast<double>(k))));
  for (int c = r - 1; c <= r + 1; ++c) {
    if (c >= 0 && c * c == k) return c;
  }
  return -1;
}

namespace {

int square_side(const PlacementSpec& spec, const char* what) {
  const int r = perfect_square_root(spec.k);
  if (r <= 0) {
    throw ConfigError(std::string(what) + " placement: k=" + std::to_string(spec.k) +
                      " must be a positive perfect square");
  }
  return r;
}

std::vector<Coord> square_cells(const GridGeometry& g, Coord anchor, int side) {
  std::vector<Coord> cells;
  cells.reserve(std::size_t(side) * side);
  for (int j = 0; j < side; ++j) {
    for (int i = 0; i < side; ++i) {
      cells.push_back(g.wrap({anchor.x + i, anchor.y + j}));
    }
  }
  return cells;
}

}  // namespace

MarkedSet generate(const PlacementSpec& spec, const GridGeometry& g) {
  switch (spec.kind) {
    case PlacementKind::Single:
      return MarkedSet(g, {g.wrap(spec.anchor)});

    case PlacementKind::Distributed: {
      const int r = square_side(spec, "distributed");
      if (g.side() % r != 0) {
        throw ConfigError("distributed placement: sqrt(k)=" + std::to_string(r) +
                          " does not divide n=" + std::to_string(g.side()));
      }
      const int spacing = g.side() / r;
      std::vector<Coord> cells;
      cells.reserve(std::size_t(spec.k));
      for (int b = 0; b < r; ++b) {
        for (int a = 0; a < r; ++a) {
          cells.push_back(g.wrap({spec.anchor.x + a * spacing, spec.anchor.y + b * spacing}));
        }
      }
      return MarkedSet(g, std::move(cells));
    }

    case PlacementKind::Block: {
      const int r = square_side(spec, "block");
      if (r > g.side()) {
        throw ConfigError("block placement: sqrt(k)=" + std::to_string(r) +
                          " exceeds the grid side n=" + std::to_string(g.side()));
      }
      return MarkedSet(g, square_cells(g, spec.anchor, r));
    }

    case PlacementKind::Perimeter: {
      const int r = square_side(spec, "perimeter");
      if (r < 2) {
        throw ConfigError("perimeter placement: sqrt(k) must be at least 2, got " +
                          std::to_string(r));
      }
      if (r > g.side()) {
        throw ConfigError("perimeter placement: sqrt(k)=" + std::to_string(r) +
                          " exceeds the grid side n=" + std::to_string(g.side()));
      }
      std::vector<Coord> cells;
      cells.reserve(std::size_t(4) * (r - 1));
      for (int j = 0; j < r; ++j) {
        for (int i = 0; i < r; ++i) {
          if (i == 0 || i == r - 1 || j == 0 || j == r - 1) {
            cells.push_back(g.wrap({spec.anchor.x + i, spec.anchor.y + j}));
          }
        }
      }
      return MarkedSet(g, std::move(cells));
    }

    case PlacementKind::Custom:
      for (const Coord& c : spec.custom_locations) {
        if (!g.in_range(c)) {
          throw ConfigError("custom placement: location " + to_string(c) +
                            " outside the grid, valid range is 0.." +
                            std::to_string(g.side() - 1));
        }
      }
      return MarkedSet(g, spec.custom_locations);
  }
  throw ConfigError("unknown placement kind");
}

std::vector<Coord> interior_cells(const PlacementSpec& spec, const GridGeometry& g) {
  if (spec.kind != PlacementKind::Block && spec.kind != PlacementKind::Perimeter) {
    throw ConfigError("interior is defined for block and perimeter placements, not " +
                      std::string(to_string(spec.kind)));
  }
  const int r = square_side(spec, "interior");
  if (r > g.side()) {
    throw ConfigError("interior: sqrt(k)=" + std::to_string(r) + " exceeds the grid side n=" +
                      std::to_string(g.side()));
  }
  std::vector<Coord> cells;
  for (int j = 1; j + 1 < r; ++j) {
    for (int i = 1; i + 1 < r; ++i) {
      cells.push_back(g.wrap({spec.anchor.x + i, spec.anchor.y + j}));
    }
  }
  return cells;
}

}  // namespace akr
