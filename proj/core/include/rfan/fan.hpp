// Copyright 2026 The rfan Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "rfan/cone.hpp"
#include "rfan/groebner.hpp"

namespace rfan {

/// A maximal cone of a restricted fan. `cone` is already intersected with the
/// non-negative orthant and canonical; `representative` is a strictly
/// positive interior point.
struct GroebnerCone {
  MarkedReducedGB key;
  Cone cone;
  IntVector representative;
};

/// Adjacency across a shared facet. Cone i lies in {<direction,u> <= 0} and
/// cone j in {<direction,u> >= 0}; i < j. facet_point is strictly positive
/// and in the relative interior of the shared facet.
struct FanEdge {
  std::size_t i = 0;
  std::size_t j = 0;
  IntVector direction;
  IntVector facet_point;

  friend bool operator==(const FanEdge&, const FanEdge&) = default;
};

/// Maximal cones sorted by key, edges sorted by (i, j).
struct FanGraph {
  std::size_t dim = 0;
  std::vector<GroebnerCone> cones;
  std::vector<FanEdge> edges;

  std::size_t size() const { return cones.size(); }
  /// Cones whose closure contains w, with their membership.
  std::vector<std::pair<std::size_t, Membership>> locate(std::span<const Integer> w) const;
  /// The cone containing w in its interior, if any.
  std::optional<std::size_t> interior_cone(std::span<const Integer> w) const;
  std::optional<std::size_t> find_edge(std::size_t a, std::size_t b) const;
  bool is_connected() const;
};

class EnumerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EnumerationOptions {
  unsigned threads = 1;
  std::size_t max_cones = 100000;
  BuchbergerOptions groebner;
};

/// Closure of the Groebner cone of G: <u, beta - alpha> <= 0 for every mark
/// alpha and every other exponent beta of the same element. Canonical form.
Cone groebner_cone(const MarkedReducedGB& g);

/// The same cone cut by the non-negative orthant.
Cone restricted_cone(const MarkedReducedGB& g);

/// Reduced basis for the order with rows (facet_point, outward_normal) ahead
/// of the tiebreak. For a facet meeting the open orthant this is the basis of
/// the neighbouring maximal cone.
MarkedReducedGB flip(const Ideal& ideal, const TermOrder& tiebreak, std::span<const Integer> facet_point,
                     std::span<const Integer> outward_normal, const BuchbergerOptions& options = {});

/// What the enumerator needs to know about a fan: the reduced basis for a
/// sequence of leading weight rows, and the (unrestricted) cone of a basis in
/// the ambient space of the fan.
struct FanOracle {
  std::size_t dim = 0;
  std::function<MarkedReducedGB(std::span<const IntVector> rows)> basis_at;
  std::function<Cone(const MarkedReducedGB&)> cone_of;
};

/// Breadth-first search over maximal cones of the orthant-restricted fan,
/// starting from the cone selected by (1,...,1) and the oracle's tiebreak.
/// Throws EnumerationError if max_cones is exceeded or the adjacency data is
/// inconsistent.
FanGraph enumerate_fan(const FanOracle& oracle, const EnumerationOptions& options = {});

FanOracle restricted_fan_oracle(const Ideal& ideal, const TermOrder& tiebreak, const BuchbergerOptions& options = {});

FanGraph enumerate_restricted_fan(const Ideal& ideal, const TermOrder& tiebreak,
                                  const EnumerationOptions& options = {});

/// Fan of the homogenized ideal (new last variable) cut by the hyperplane
/// where that variable's weight is 0, restricted to the orthant of R^n.
FanOracle extended_fan_oracle(const Ideal& homogenized, const TermOrder& tiebreak,
                              const BuchbergerOptions& options = {});

FanGraph extended_fan_slice(const Ideal& ideal, const TermOrder& tiebreak, const EnumerationOptions& options = {});

}  // namespace rfan
