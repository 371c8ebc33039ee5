#pragma once

#include <random>

#include "polycurv/polytope.hpp"

namespace polycurv {

/// Deterministic test-shape generators; every shape is a valid full-dimensional
/// polytope for the given rng state.

/// Convex polygon with at most max_vertices vertices, coordinates O(1).
Polytope random_polygon(std::mt19937_64& rng, int max_vertices = 8);

/// Polygon with vertices on a circle of the given radius.
Polytope random_circle_polygon(std::mt19937_64& rng, int vertices = 6, double radius = 1.0);

/// Nondegenerate 3-simplex.
Polytope random_simplex3(std::mt19937_64& rng);

/// Hull of at most max_points random points on the unit sphere.
Polytope random_polytope3(std::mt19937_64& rng, int max_points = 10);

/// Axis-aligned unit cube [0,1]^3.
Polytope unit_cube3();

/// Axis-aligned unit square [0,1]^2.
Polytope unit_square();

/// Uniformly random rotation matrix.
Mat random_rotation(std::mt19937_64& rng, int d);

}  // namespace polycurv
