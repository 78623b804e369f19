// Copyright 2026 The rfan Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "rfan/fan.hpp"
#include "rfan/lp.hpp"

namespace rfan {

/// Graph with an integer direction per edge. Edge k goes from ends[k].first
/// to ends[k].second.
struct DirectionGraph {
  std::size_t vertices = 0;
  std::size_t dim = 0;
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  std::vector<IntVector> directions;

  std::size_t edge_count() const { return ends.size(); }
};

DirectionGraph direction_graph(const FanGraph& fan);

/// Value per edge, signed relative to the edge's orientation.
using Flow = RatVector;

/// Inflow equals outflow at every vertex.
bool is_flow(const DirectionGraph& g, std::span<const Rational> f);

struct CycleBasis {
  std::vector<Flow> flows;
  std::vector<std::size_t> tree_edges;
};

/// Fundamental cycles of the spanning forest picked greedily along
/// `edge_order` (all edges in index order when empty). Each flow is +1 on
/// its non-tree edge.
CycleBasis cycle_basis(const DirectionGraph& g, std::span<const std::size_t> edge_order = {});

/// Row (r, t), r-major, is sum_e f^r_e s_e d_e[t] as a functional of s.
RatMatrix build_system(const DirectionGraph& g, std::span<const Flow> flows);

struct Embedding {
  RatVector scalars;                 // s_e >= 1
  std::vector<RatVector> coordinates;  // one point per vertex
};

struct NonRegular {
  RatVector y;                        // y^T A >= 0, y^T A != 0
  std::vector<std::size_t> forced_edges;  // s_e = 0 in every solution of As = 0, s >= 0
};

struct RegularityOutcome {
  CycleBasis basis;
  RatMatrix system;
  std::variant<Embedding, NonRegular> verdict;

  /// True for an embedding, which only shows the necessary condition holds.
  bool passes_necessary_condition() const { return std::holds_alternative<Embedding>(verdict); }
};

RegularityOutcome check_regularity(const DirectionGraph& g, std::span<const std::size_t> edge_order = {});
RegularityOutcome check_regularity(const FanGraph& fan, std::span<const std::size_t> edge_order = {});

/// Every edge satisfies coordinates[j] - coordinates[i] = s_e d_e with s_e >= 1.
bool verify_embedding(const DirectionGraph& g, const Embedding& e);

/// Edges whose scalar vanishes on every solution of A s = 0, s >= 0.
std::vector<std::size_t> forced_zero_edges(const RatMatrix& A, std::size_t edges);

}  // namespace rfan
