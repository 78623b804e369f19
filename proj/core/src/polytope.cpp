// Copyright 2026 The rfan Authors
// SPDX-License-Identifier: Apache-2.0

#include "rfan/polytope.hpp"

#include <algorithm>
#include <stdexcept>

namespace rfan {

bool outside_hull(std::span<const RatVector> points, std::span<const RatVector> rays,
                  std::span<const Rational> v) {
  const std::size_t n = v.size();
  LinearProgram lp;
  lp.nvars = points.size() + rays.size();
  lp.nonnegative.assign(lp.nvars, true);
  for (std::size_t i = 0; i < n; ++i) {
    RatVector row(lp.nvars);
    for (std::size_t k = 0; k < points.size(); ++k) row[k] = points[k][i];
    for (std::size_t k = 0; k < rays.size(); ++k) row[points.size() + k] = rays[k][i];
    lp.add(std::move(row), Sense::Equal, v[i]);
  }
  RatVector ones(lp.nvars);
  for (std::size_t k = 0; k < points.size(); ++k) ones[k] = 1;
  lp.add(std::move(ones), Sense::Equal, Rational(1));
  return solve(lp).status != LpStatus::Optimal;
}

Polyhedron newton_polytope(const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("newton_polytope: zero polynomial");
  std::vector<RatVector> pts;
  for (const auto& t : f.terms()) pts.push_back(t.exponent.as_rational());
  std::sort(pts.begin(), pts.end());
  Polyhedron p;
  p.dim = pts.front().size();
  for (std::size_t k = 0; k < pts.size(); ++k) {
    std::vector<RatVector> others;
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (j != k) others.push_back(pts[j]);
    }
    if (others.empty() || outside_hull(others, {}, pts[k])) p.vertices.push_back(pts[k]);
  }
  return p;
}

Polyhedron minus_orthant_sum(const Polyhedron& p) {
  Polyhedron out = p;
  for (std::size_t i = 0; i < p.dim; ++i) {
    RatVector r(p.dim);
    r[i] = -1;
    out.rays.push_back(std::move(r));
  }
  return out;
}

Cone normal_cone(const Polyhedron& p, std::span<const std::size_t> face) {
  if (face.empty()) throw std::invalid_argument("normal_cone: empty face");
  const RatVector& base = p.vertices.at(face.front());
  auto diff = [&](const RatVector& v) {
    RatVector d(p.dim);
    for (std::size_t i = 0; i < p.dim; ++i) d[i] = v[i] - base[i];
    return primitive(std::span<const Rational>(d));
  };
  std::vector<IntVector> eq;
  for (std::size_t k : face) eq.push_back(diff(p.vertices.at(k)));
  std::vector<IntVector> ineq;
  for (const auto& v : p.vertices) ineq.push_back(diff(v));
  for (const auto& r : p.rays) ineq.push_back(primitive(std::span<const Rational>(r)));
  return Cone(p.dim, std::move(eq), std::move(ineq)).canonical();
}

std::vector<Cone> vertex_normal_fan(const Polyhedron& p) {
  std::vector<Cone> out;
  for (std::size_t k = 0; k < p.vertices.size(); ++k) {
    const std::size_t face[] = {k};
    Cone c = normal_cone(p, face);
    if (c.dimension() == p.dim) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace rfan
