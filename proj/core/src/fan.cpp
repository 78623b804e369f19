// Copyright 2026 The rfan Authors
// SPDX-License-Identifier: Apache-2.0

#include "rfan/fan.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <thread>

namespace rfan {

std::vector<std::pair<std::size_t, Membership>> FanGraph::locate(std::span<const Integer> w) const {
  std::vector<std::pair<std::size_t, Membership>> out;
  for (std::size_t k = 0; k < cones.size(); ++k) {
    Membership m = contains(cones[k].cone, w);
    if (m != Membership::Outside) out.emplace_back(k, m);
  }
  return out;
}

std::optional<std::size_t> FanGraph::interior_cone(std::span<const Integer> w) const {
  for (std::size_t k = 0; k < cones.size(); ++k) {
    if (contains(cones[k].cone, w) == Membership::Interior) return k;
  }
  return std::nullopt;
}

std::optional<std::size_t> FanGraph::find_edge(std::size_t a, std::size_t b) const {
  if (a > b) std::swap(a, b);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (edges[k].i == a && edges[k].j == b) return k;
  }
  return std::nullopt;
}

bool FanGraph::is_connected() const {
  if (cones.empty()) return true;
  std::vector<std::size_t> parent(cones.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = cones.size();
  for (const auto& e : edges) {
    auto a = find(e.i);
    auto b = find(e.j);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

Cone groebner_cone(const MarkedReducedGB& g) {
  const std::size_t n = g.nvars();
  std::vector<IntVector> ineq;
  for (const auto& e : g.elements()) {
    for (const auto& t : e.polynomial.terms()) {
      if (t.exponent == e.mark) continue;
      IntVector d(n);
      for (std::size_t i = 0; i < n; ++i) d[i] = t.exponent[i] - e.mark[i];
      ineq.push_back(std::move(d));
    }
  }
  return Cone(n, {}, std::move(ineq)).canonical();
}

Cone restricted_cone(const MarkedReducedGB& g) {
  return groebner_cone(g).intersect(Cone::orthant(g.nvars())).canonical();
}

MarkedReducedGB flip(const Ideal& ideal, const TermOrder& tiebreak, std::span<const Integer> facet_point,
                     std::span<const Integer> outward_normal, const BuchbergerOptions& options) {
  for (const auto& x : facet_point) {
    if (x <= 0) throw std::invalid_argument("flip: facet point must be strictly positive");
  }
  const RatVector rows[] = {to_rational(facet_point), to_rational(outward_normal)};
  return buchberger(ideal, tiebreak.refined_by(rows), options);
}

namespace {

struct Neighbour {
  IntVector normal;
  IntVector point;
  MarkedReducedGB gb;
};

struct Expansion {
  Cone cone;
  IntVector representative;
  std::vector<Neighbour> neighbours;
};

bool is_orthant_facet(const IntVector& a) {
  std::size_t nonzero = 0;
  for (const auto& x : a) {
    if (x == 0) continue;
    if (x != -1) return false;
    ++nonzero;
  }
  return nonzero == 1;
}

Expansion expand(const FanOracle& oracle, const MarkedReducedGB& gb) {
  const std::size_t n = oracle.dim;
  Expansion out;
  out.cone = oracle.cone_of(gb).intersect(Cone::orthant(n)).canonical();
  if (out.cone.dimension() != n) throw EnumerationError("enumeration reached a cone that is not full-dimensional");
  out.representative = relative_interior_point(out.cone);
  for (const auto& a : out.cone.inequalities()) {
    if (is_orthant_facet(a)) continue;
    IntVector p = relative_interior_point(facet_cone(out.cone, a));
    const IntVector rows[] = {p, a};
    MarkedReducedGB next = oracle.basis_at(rows);
    out.neighbours.push_back({a, std::move(p), std::move(next)});
  }
  return out;
}

}  // namespace

FanGraph enumerate_fan(const FanOracle& oracle, const EnumerationOptions& options) {
  const std::size_t n = oracle.dim;
  const IntVector seed_row(n, Integer(1));
  const IntVector seed_rows[] = {seed_row};
  MarkedReducedGB seed = oracle.basis_at(seed_rows);

  std::map<MarkedReducedGB, std::size_t> index;  // discovery index
  std::vector<MarkedReducedGB> found{seed};
  std::vector<Expansion> expansions(1);
  index.emplace(seed, 0);

  std::vector<std::size_t> frontier{0};
  const unsigned threads = std::max(1u, options.threads);
  while (!frontier.empty()) {
    std::vector<Expansion> results(frontier.size());
    std::vector<std::exception_ptr> errors(frontier.size());
    auto work = [&](std::size_t k) {
      try {
        results[k] = expand(oracle, found[frontier[k]]);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    };
    if (threads == 1 || frontier.size() == 1) {
      for (std::size_t k = 0; k < frontier.size(); ++k) work(k);
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      const unsigned count = std::min<std::size_t>(threads, frontier.size());
      for (unsigned t = 0; t < count; ++t) {
        pool.emplace_back([&] {
          for (std::size_t k; (k = next.fetch_add(1)) < frontier.size();) work(k);
        });
      }
      for (auto& th : pool) th.join();
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }

    std::vector<std::size_t> next_frontier;
    for (std::size_t k = 0; k < frontier.size(); ++k) {
      for (const auto& nb : results[k].neighbours) {
        if (index.contains(nb.gb)) continue;
        if (found.size() >= options.max_cones) {
          throw EnumerationError("enumeration exceeded " + std::to_string(options.max_cones) + " cones");
        }
        index.emplace(nb.gb, found.size());
        next_frontier.push_back(found.size());
        found.push_back(nb.gb);
        expansions.emplace_back();
      }
      expansions[frontier[k]] = std::move(results[k]);
    }
    frontier = std::move(next_frontier);
  }

  // The map iterates in key order, which is the canonical cone order.
  std::vector<std::size_t> rank(found.size());
  FanGraph graph;
  graph.dim = n;
  for (const auto& [key, discovered] : index) {
    rank[discovered] = graph.cones.size();
    graph.cones.push_back({key, expansions[discovered].cone, expansions[discovered].representative});
  }

  std::map<std::pair<std::size_t, std::size_t>, FanEdge> edges;
  std::map<std::pair<std::size_t, std::size_t>, IntVector> seen_from_above;
  for (std::size_t d = 0; d < found.size(); ++d) {
    const std::size_t i = rank[d];
    for (const auto& nb : expansions[d].neighbours) {
      const std::size_t j = rank[index.at(nb.gb)];
      if (i == j) throw EnumerationError("flip returned the same cone");
      if (i < j) {
        auto [it, fresh] = edges.emplace(std::pair{i, j}, FanEdge{i, j, nb.normal, nb.point});
        if (!fresh) throw EnumerationError("two facets of one cone lead to the same neighbour");
      } else {
        seen_from_above.emplace(std::pair{j, i}, negated(nb.normal));
      }
    }
  }
  if (seen_from_above.size() != edges.size()) throw EnumerationError("adjacency is not symmetric");
  for (auto& [ij, e] : edges) {
    auto it = seen_from_above.find(ij);
    if (it == seen_from_above.end() || it->second != e.direction) {
      throw EnumerationError("adjacency is not symmetric");
    }
    graph.edges.push_back(std::move(e));
  }
  if (!graph.is_connected()) throw EnumerationError("adjacency graph is not connected");
  return graph;
}

FanOracle restricted_fan_oracle(const Ideal& ideal, const TermOrder& tiebreak, const BuchbergerOptions& options) {
  FanOracle oracle;
  oracle.dim = ideal.nvars();
  oracle.basis_at = [ideal, tiebreak, options](std::span<const IntVector> rows) {
    std::vector<RatVector> r;
    for (const auto& row : rows) r.push_back(to_rational(row));
    return buchberger(ideal, tiebreak.refined_by(r), options);
  };
  oracle.cone_of = [](const MarkedReducedGB& g) { return groebner_cone(g); };
  return oracle;
}

FanGraph enumerate_restricted_fan(const Ideal& ideal, const TermOrder& tiebreak, const EnumerationOptions& options) {
  return enumerate_fan(restricted_fan_oracle(ideal, tiebreak, options.groebner), options);
}

FanOracle extended_fan_oracle(const Ideal& homogenized, const TermOrder& tiebreak, const BuchbergerOptions& options) {
  const std::size_t n = homogenized.nvars() - 1;
  if (tiebreak.nvars() != n) throw std::invalid_argument("extended_fan_oracle: tiebreak has wrong dimension");
  std::vector<TermOrder::Row> rows;
  for (auto row : tiebreak.rows()) {
    row.push_back(0);
    rows.push_back(std::move(row));
  }
  TermOrder lifted(n + 1, std::move(rows), tiebreak.tiebreak());
  FanOracle oracle;
  oracle.dim = n;
  oracle.basis_at = [homogenized, lifted, options, n](std::span<const IntVector> weight_rows) {
    // The ideal is homogeneous, so the leading degree row only makes the
    // order a term order without changing which basis the weights select.
    std::vector<RatVector> r{RatVector(n + 1, Rational(1))};
    for (const auto& row : weight_rows) {
      RatVector x = to_rational(row);
      x.push_back(0);
      r.push_back(std::move(x));
    }
    return buchberger(homogenized, lifted.refined_by(r), options);
  };
  oracle.cone_of = [n](const MarkedReducedGB& g) {
    Cone full = groebner_cone(g);
    auto drop = [n](const std::vector<IntVector>& vs) {
      std::vector<IntVector> out;
      for (const auto& v : vs) out.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n));
      return out;
    };
    return Cone(n, drop(full.equalities()), drop(full.inequalities())).canonical();
  };
  return oracle;
}

FanGraph extended_fan_slice(const Ideal& ideal, const TermOrder& tiebreak, const EnumerationOptions& options) {
  Ideal h = homogenize(ideal, tiebreak);
  return enumerate_fan(extended_fan_oracle(h, tiebreak, options.groebner), options);
}

}  // namespace rfan
