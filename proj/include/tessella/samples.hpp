#pragma once

#include <random>

#include "tessella/classifier.hpp"

namespace tessella {

// Concrete float-backend representatives of each tile type, for tests and
// batch checks.  The result is canonically labeled: vertex 0 carries A.
// Seeds steer the free parameters of the type's family; every returned
// polygon satisfies matches_type(., t) to well below 1e-7.
LabeledPolygon<double> sample_tile(const TileTypeId& t, unsigned seed = 0);

// Like sample_tile, but pentagon types 1 and 2 additionally satisfy the edge
// condition their edge-to-edge subfamily needs (a = d, resp. b = d).  Every
// other type is already edge-to-edge capable family-wide and passes through.
LabeledPolygon<double> sample_tile_e2e(const TileTypeId& t, unsigned seed = 0);

Polygon<double> random_triangle(std::mt19937& rng);
Polygon<double> random_convex_quadrilateral(std::mt19937& rng);

}  // namespace tessella
