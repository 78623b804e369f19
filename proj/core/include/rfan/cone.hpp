// Copyright 2026 The rfan Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include "rfan/lp.hpp"
#include "rfan/rational.hpp"

namespace rfan {

enum class Membership { Interior, Boundary, Outside };

const char* to_string(Membership m);

/// Polyhedral cone {u : <e,u> = 0 for e in equalities, <a,u> <= 0 for a in
/// inequalities}.
///
/// canonical() returns the same set in a unique form: the equalities are the
/// primitive rows of the reduced echelon basis of the linear hull's
/// orthogonal complement, the inequalities are exactly the facet normals,
/// each reduced modulo the equalities, primitive and sorted. Two cones are
/// equal as sets iff their canonical forms are equal.
class Cone {
 public:
  Cone() = default;
  Cone(std::size_t ambient_dim, std::vector<IntVector> equalities, std::vector<IntVector> inequalities);

  static Cone full_space(std::size_t n);
  /// Non-negative orthant.
  static Cone orthant(std::size_t n);

  std::size_t ambient_dim() const { return n_; }
  const std::vector<IntVector>& equalities() const { return equalities_; }
  const std::vector<IntVector>& inequalities() const { return inequalities_; }
  bool is_canonical() const { return canonical_; }

  Cone canonical() const;
  /// Dimension of the cone (of its linear hull).
  std::size_t dimension() const;

  Cone intersect(const Cone& other) const;
  Cone with_equality(IntVector e) const;
  Cone with_inequality(IntVector a) const;

  friend bool operator==(const Cone& a, const Cone& b);

 private:
  std::size_t n_ = 0;
  std::vector<IntVector> equalities_;
  std::vector<IntVector> inequalities_;
  bool canonical_ = false;
};

/// Irredundant outward facet normals (canonical form inequalities). Throws
/// std::domain_error for the zero-dimensional cone {0}.
std::vector<IntVector> facets(const Cone& c);

/// The face of c where the facet normal `facet` is tight.
Cone facet_cone(const Cone& c, const IntVector& facet);

/// Primitive integer point in the relative interior. If the cone meets the
/// open positive orthant the point is strictly positive.
IntVector relative_interior_point(const Cone& c);

/// Interior means relative interior.
Membership contains(const Cone& c, std::span<const Rational> w);
Membership contains(const Cone& c, std::span<const Integer> w);

/// True iff <a,u> <= 0 for every u in c.
bool implies(const Cone& c, std::span<const Integer> a);

bool meets_open_orthant(const Cone& c);

/// Intersection, obtained by concatenating the constraint systems.
Cone common_refinement(const Cone& a, const Cone& b);

/// Intersects every cone with the non-negative orthant and keeps the
/// full-dimensional results, in canonical form.
std::vector<Cone> refine_with_orthant(std::span<const Cone> cones);

/// True iff target lies in cone(generators) + span(lineality).
bool in_cone_plus_span(std::span<const IntVector> generators, std::span<const IntVector> lineality,
                       std::span<const Integer> target);

}  // namespace rfan
