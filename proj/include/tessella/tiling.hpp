#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tessella/polygon.hpp"

namespace tessella {

// one decoration per edge: arrow_count 0..2, direction +1 = along the CCW
// edge orientation, -1 = against it (meaningless when count is 0)
struct EdgeDecoration {
  int arrow_count = 0;
  int direction = 0;
};

struct Marking {
  std::vector<std::string> vertex_colors;  // "" means uncolored
  std::vector<EdgeDecoration> edges;
};

template <typename S>
struct MarkedPrototile {
  std::string name;
  Polygon<S> polygon;
  std::optional<Marking> marking;
};

template <typename S>
struct PlacedTile {
  std::string prototile;
  Isometry<S> transform;
};

template <typename S>
struct Tiling {
  std::map<std::string, MarkedPrototile<S>> prototiles;
  std::vector<PlacedTile<S>> tiles;
  Rect window{};

  const MarkedPrototile<S>& proto_of(size_t tile_idx) const {
    return prototiles.at(tiles[tile_idx].prototile);
  }

  Polygon<S> realize(size_t tile_idx) const {
    return proto_of(tile_idx).polygon.transformed(tiles[tile_idx].transform);
  }
};

template <typename S>
struct FundamentalRegion {
  std::map<std::string, MarkedPrototile<S>> prototiles;
  std::vector<PlacedTile<S>> tiles;
  Vec2<S> v1;
  Vec2<S> v2;
};

}  // namespace tessella
