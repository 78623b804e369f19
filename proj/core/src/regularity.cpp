// Copyright 2026 The rfan Authors
// SPDX-License-Identifier: Apache-2.0

#include "rfan/regularity.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace rfan {

DirectionGraph direction_graph(const FanGraph& fan) {
  DirectionGraph g;
  g.vertices = fan.cones.size();
  g.dim = fan.dim;
  for (const auto& e : fan.edges) {
    g.ends.emplace_back(e.i, e.j);
    g.directions.push_back(e.direction);
  }
  return g;
}

bool is_flow(const DirectionGraph& g, std::span<const Rational> f) {
  if (f.size() != g.edge_count()) return false;
  RatVector balance(g.vertices);
  for (std::size_t k = 0; k < f.size(); ++k) {
    balance[g.ends[k].first] -= f[k];
    balance[g.ends[k].second] += f[k];
  }
  return std::all_of(balance.begin(), balance.end(), [](const Rational& b) { return b == 0; });
}

namespace {

struct Forest {
  std::vector<std::size_t> parent;       // parent vertex, self for roots
  std::vector<std::size_t> parent_edge;  // edge to the parent
  std::vector<std::size_t> depth;
  std::vector<std::size_t> tree_edges;
  std::vector<std::size_t> order;  // vertices in traversal order, roots first per component
};

Forest spanning_forest(const DirectionGraph& g, std::span<const std::size_t> edge_order) {
  std::vector<std::size_t> order(edge_order.begin(), edge_order.end());
  if (order.empty()) {
    order.resize(g.edge_count());
    std::iota(order.begin(), order.end(), std::size_t{0});
  }
  if (order.size() != g.edge_count()) throw std::invalid_argument("cycle_basis: edge order has wrong length");

  std::vector<std::size_t> uf(g.vertices);
  std::iota(uf.begin(), uf.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  Forest f;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(g.vertices);
  for (std::size_t k : order) {
    auto [a, b] = g.ends.at(k);
    auto ra = find(a);
    auto rb = find(b);
    if (ra == rb) continue;
    uf[ra] = rb;
    f.tree_edges.push_back(k);
    adj[a].emplace_back(b, k);
    adj[b].emplace_back(a, k);
  }
  std::sort(f.tree_edges.begin(), f.tree_edges.end());

  const std::size_t none = g.vertices;
  f.parent.assign(g.vertices, none);
  f.parent_edge.assign(g.vertices, 0);
  f.depth.assign(g.vertices, 0);
  for (std::size_t root = 0; root < g.vertices; ++root) {
    if (f.parent[root] != none) continue;
    f.parent[root] = root;
    std::size_t head = f.order.size();
    f.order.push_back(root);
    while (head < f.order.size()) {
      std::size_t v = f.order[head++];
      for (auto [w, k] : adj[v]) {
        if (f.parent[w] != none) continue;
        f.parent[w] = v;
        f.parent_edge[w] = k;
        f.depth[w] = f.depth[v] + 1;
        f.order.push_back(w);
      }
    }
  }
  return f;
}

}  // namespace

CycleBasis cycle_basis(const DirectionGraph& g, std::span<const std::size_t> edge_order) {
  Forest forest = spanning_forest(g, edge_order);
  CycleBasis basis;
  basis.tree_edges = forest.tree_edges;
  std::vector<bool> in_tree(g.edge_count(), false);
  for (auto k : forest.tree_edges) in_tree[k] = true;

  // Walking tree edge k from vertex `from` adds +1 when that is its orientation.
  auto step = [&](Flow& f, std::size_t k, std::size_t from) { f[k] += g.ends[k].first == from ? 1 : -1; };

  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    if (in_tree[k]) continue;
    Flow f(g.edge_count());
    f[k] = 1;
    // Close the cycle a -> b with the tree path b -> a.
    std::size_t u = g.ends[k].second;
    std::size_t v = g.ends[k].first;
    std::vector<std::pair<std::size_t, std::size_t>> down;  // steps from the meeting point towards v
    while (u != v) {
      if (forest.depth[u] >= forest.depth[v]) {
        step(f, forest.parent_edge[u], u);
        u = forest.parent[u];
      } else {
        down.emplace_back(forest.parent_edge[v], forest.parent[v]);
        v = forest.parent[v];
      }
    }
    for (auto [edge, from] : down) step(f, edge, from);
    basis.flows.push_back(std::move(f));
  }
  return basis;
}

RatMatrix build_system(const DirectionGraph& g, std::span<const Flow> flows) {
  if (g.directions.size() != g.edge_count()) throw std::invalid_argument("build_system: missing edge directions");
  for (const auto& d : g.directions) {
    if (d.size() != g.dim) throw std::invalid_argument("build_system: direction has wrong dimension");
  }
  RatMatrix A;
  for (const auto& f : flows) {
    if (f.size() != g.edge_count()) throw std::invalid_argument("build_system: flow has wrong length");
    for (std::size_t t = 0; t < g.dim; ++t) {
      RatVector row(g.edge_count());
      for (std::size_t k = 0; k < g.edge_count(); ++k) {
        if (f[k] != 0) row[k] = f[k] * g.directions[k][t];
      }
      A.push_back(std::move(row));
    }
  }
  return A;
}

std::vector<std::size_t> forced_zero_edges(const RatMatrix& A, std::size_t edges) {
  RatMatrix rows;
  for (auto r : independent_rows(A)) rows.push_back(A[r]);

  // Repeatedly maximize the sum of the undecided scalars, each capped at 1.
  // Every positive entry of an optimum is an edge that can be nonzero; an
  // optimum of 0 means all undecided edges are forced.
  std::set<std::size_t> undecided;
  for (std::size_t k = 0; k < edges; ++k) undecided.insert(k);
  while (!undecided.empty()) {
    LinearProgram lp;
    lp.nvars = edges;
    lp.nonnegative.assign(edges, true);
    for (const auto& r : rows) lp.add(r, Sense::Equal);
    lp.objective.assign(edges, Rational(0));
    for (auto k : undecided) {
      RatVector cap(edges);
      cap[k] = 1;
      lp.add(std::move(cap), Sense::LessEqual, Rational(1));
      lp.objective[k] = 1;
    }
    lp.maximize = true;
    LpSolution sol = solve(lp);
    if (sol.status != LpStatus::Optimal) throw std::logic_error("forced_zero_edges: bounded LP not optimal");
    if (sol.objective == 0) break;
    for (std::size_t k = 0; k < edges; ++k) {
      if (sol.x[k] > 0) undecided.erase(k);
    }
  }
  return {undecided.begin(), undecided.end()};
}

RegularityOutcome check_regularity(const DirectionGraph& g, std::span<const std::size_t> edge_order) {
  RegularityOutcome out;
  out.basis = cycle_basis(g, edge_order);
  out.system = build_system(g, out.basis.flows);

  StrictFeasibility r = lp_feasible_strict(out.system, g.edge_count());
  if (auto* bad = std::get_if<StrictlyInfeasible>(&r)) {
    NonRegular nr;
    nr.y = std::move(bad->y);
    nr.forced_edges = forced_zero_edges(out.system, g.edge_count());
    out.verdict = std::move(nr);
    return out;
  }

  Embedding emb;
  emb.scalars = std::get<StrictlyFeasible>(r).s;
  Forest forest = spanning_forest(g, edge_order);
  emb.coordinates.assign(g.vertices, RatVector(g.dim));
  for (std::size_t v : forest.order) {
    std::size_t p = forest.parent[v];
    if (p == v) continue;
    std::size_t k = forest.parent_edge[v];
    // x_head - x_tail = s_k d_k
    Rational sign = g.ends[k].second == v ? 1 : -1;
    for (std::size_t t = 0; t < g.dim; ++t) {
      emb.coordinates[v][t] = emb.coordinates[p][t] + sign * emb.scalars[k] * g.directions[k][t];
    }
  }
  out.verdict = std::move(emb);
  return out;
}

RegularityOutcome check_regularity(const FanGraph& fan, std::span<const std::size_t> edge_order) {
  return check_regularity(direction_graph(fan), edge_order);
}

bool verify_embedding(const DirectionGraph& g, const Embedding& e) {
  if (e.scalars.size() != g.edge_count() || e.coordinates.size() != g.vertices) return false;
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    if (e.scalars[k] < 1) return false;
    auto [a, b] = g.ends[k];
    for (std::size_t t = 0; t < g.dim; ++t) {
      if (e.coordinates[b][t] - e.coordinates[a][t] != e.scalars[k] * g.directions[k][t]) return false;
    }
  }
  return true;
}

}  // namespace rfan
