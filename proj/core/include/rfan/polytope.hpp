// Copyright 2026 The rfan Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "rfan/cone.hpp"
#include "rfan/polynomial.hpp"
#include "rfan/rational.hpp"

namespace rfan {

/// conv(vertices) + cone(rays), V-representation.
struct Polyhedron {
  std::size_t dim = 0;
  std::vector<RatVector> vertices;
  std::vector<RatVector> rays;
};

/// Convex hull of the exponent vectors of f. Only the actual vertices are
/// kept, sorted lexicographically. Throws std::invalid_argument for f = 0.
Polyhedron newton_polytope(const Polynomial& f);

/// Minkowski sum with the non-positive orthant: adds the rays -e_i.
Polyhedron minus_orthant_sum(const Polyhedron& p);

/// True iff v is not in conv(points) + cone(rays).
bool outside_hull(std::span<const RatVector> points, std::span<const RatVector> rays,
                  std::span<const Rational> v);

/// Closure of {w : face_w(P) = F} where face_w maximizes <w,.> and F is the
/// face spanned by the given vertex indices.
Cone normal_cone(const Polyhedron& p, std::span<const std::size_t> face);

/// Normal cones of the vertices that are full-dimensional, in vertex order.
std::vector<Cone> vertex_normal_fan(const Polyhedron& p);

}  // namespace rfan
