// Copyright 2026 The rfan Authors
// SPDX-License-Identifier: Apache-2.0

#include "rfan/certificate.hpp"

#include <sstream>
#include <stdexcept>

#include "rfan/io.hpp"

namespace rfan {

namespace {

IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

CertificateData make_data() {
  CertificateData d;
  const std::pair<int, IntVector> reps[] = {
      {5, iv({10, 2, 5, 3})}, {6, iv({14, 4, 11, 5})}, {15, iv({7, 6, 5, 3})}, {16, iv({7, 11, 8, 4})},
      {17, iv({5, 2, 3, 3})}, {18, iv({4, 3, 5, 4})},  {19, iv({5, 1, 2, 2})}, {26, iv({7, 1, 2, 3})},
      {27, iv({17, 1, 4, 9})}, {29, iv({10, 1, 2, 6})}, {30, iv({15, 1, 3, 11})}, {33, iv({3, 1, 2, 3})},
      {44, iv({7, 5, 4, 4})},  {57, iv({7, 1, 2, 7})},  {58, iv({7, 1, 3, 8})},
  };
  for (const auto& [id, w] : reps) {
    d.vertex_ids.push_back(id);
    d.representatives.push_back(w);
  }
  // (i, j), flows f^1..f^4, direction, facet point
  d.edges = {
      {5, 6, iv({-72, 0, -36, -36}), iv({-1, -1, 2, 0}), iv({3, 1, 2, 1})},
      {5, 19, iv({72, 0, 36, 36}), iv({0, 1, -2, 2}), iv({8, 4, 5, 3})},
      {6, 18, iv({-72, 0, -36, -36}), iv({-1, 0, 0, 2}), iv({2, 1, 2, 1})},
      {15, 16, iv({72, 54, 60, 36}), iv({-1, 0, 0, 2}), iv({6, 8, 6, 3})},
      {15, 19, iv({-72, 0, -24, 0}), iv({-1, -2, 3, 1}), iv({5, 3, 3, 2})},
      {15, 26, iv({0, -54, -36, -36}), iv({0, 0, -1, 1}), iv({9, 2, 3, 3})},
      {16, 17, iv({0, 0, 6, -18}), iv({-1, -2, 3, 1}), iv({8, 15, 11, 5})},
      {16, 44, iv({72, 54, 54, 54}), iv({0, 1, -2, 1}), iv({5, 7, 5, 3})},
      {17, 19, iv({0, 0, -12, 0}), iv({1, 0, 0, -2}), iv({4, 1, 2, 2})},
      {17, 33, iv({0, 0, 18, -18}), iv({-1, -1, 1, 1}), iv({6, 1, 3, 4})},
      {18, 33, iv({-72, 0, -36, -36}), iv({1, 1, -3, 1}), iv({4, 1, 3, 4})},
      {19, 26, iv({0, 0, 0, 36}), iv({1, 2, -4, 0}), iv({10, 1, 3, 4})},
      {26, 27, iv({0, -54, -36, 0}), iv({-1, 0, 0, 2}), iv({18, 2, 5, 9})},
      {27, 29, iv({0, -54, -36, 0}), iv({0, 2, -3, 1}), iv({13, 1, 3, 7})},
      {29, 30, iv({0, -18, 0, 0}), iv({-1, -1, 2, 1}), iv({8, 1, 2, 5})},
      {29, 44, iv({0, -36, -36, 0}), iv({0, 1, -1, 0}), iv({9, 3, 3, 5})},
      {30, 44, iv({-72, -18, -18, -54}), iv({1, 2, -3, -1}), iv({6, 5, 4, 4})},
      {30, 57, iv({72, 0, 18, 54}), iv({-1, -1, 1, 1}), iv({13, 1, 3, 11})},
      {33, 58, iv({-72, 0, -18, -54}), iv({0, 2, -3, 1}), iv({6, 1, 3, 7})},
      {57, 58, iv({72, 0, 18, 54}), iv({-1, -2, 4, 0}), iv({10, 1, 3, 11})},
  };
  for (int k = 0; k < 16; ++k) d.farkas_y.emplace_back(k % 5 == 0 ? 1 : 0);
  return d;
}

}  // namespace

std::size_t CertificateData::vertex_index(int label) const {
  for (std::size_t k = 0; k < vertex_ids.size(); ++k) {
    if (vertex_ids[k] == label) return k;
  }
  throw std::out_of_range("unknown certificate vertex " + std::to_string(label));
}

DirectionGraph CertificateData::graph() const {
  DirectionGraph g;
  g.vertices = vertex_ids.size();
  g.dim = 4;
  for (const auto& e : edges) {
    g.ends.emplace_back(vertex_index(e.i), vertex_index(e.j));
    g.directions.push_back(e.direction);
  }
  return g;
}

std::vector<Flow> CertificateData::flows() const {
  std::vector<Flow> out(4, Flow(edges.size()));
  for (std::size_t k = 0; k < edges.size(); ++k) {
    for (std::size_t r = 0; r < 4; ++r) out[r][k] = edges[k].flows[r];
  }
  return out;
}

const CertificateData& certificate_data() {
  static const CertificateData data = make_data();
  return data;
}

Ideal certificate_ideal() { return parse_ideal("ring a,b,c,d; ideal a*c*d + a^2*c - a*b, a*d^2 - c, a*d^4 + a*c;"); }

bool check_flows(const CertificateData& data) {
  DirectionGraph g = data.graph();
  for (const auto& f : data.flows()) {
    if (!is_flow(g, f)) return false;
  }
  return true;
}

std::vector<Rational> local_contributions(const CertificateData& data) {
  std::vector<Rational> out;
  for (const auto& e : data.edges) {
    Integer s = dot(std::span<const Integer>(e.direction), std::span<const Integer>(e.flows));
    out.emplace_back(s);
  }
  return out;
}

bool check_orthogonality(const CertificateData& data) {
  auto c = local_contributions(data);
  for (std::size_t k = 0; k < data.edges.size(); ++k) {
    const bool special = data.edges[k].i == 29 && data.edges[k].j == 30;
    if (c[k] != (special ? 18 : 0)) return false;
  }
  return true;
}

std::vector<EdgeCheck> verify_subgraph(const Ideal& ideal, const CertificateData& data, const TermOrder& tiebreak) {
  std::vector<MarkedReducedGB> bases;
  std::vector<Cone> cones;
  for (const auto& w : data.representatives) {
    bases.push_back(gb_for_weight(ideal, std::span<const Integer>(w), tiebreak));
    cones.push_back(groebner_cone(bases.back()));
  }
  const std::size_t n = ideal.nvars();
  std::vector<EdgeCheck> out;
  for (const auto& e : data.edges) {
    const std::size_t a = data.vertex_index(e.i);
    const std::size_t b = data.vertex_index(e.j);
    const Cone& ci = cones[a];
    const Cone& cj = cones[b];
    EdgeCheck c;
    c.i = e.i;
    c.j = e.j;
    c.distinct_bases = bases[a] != bases[b] && ci.dimension() == n && cj.dimension() == n;
    c.representatives_inside = contains(ci, std::span<const Integer>(data.representatives[a])) ==
                                   Membership::Interior &&
                               contains(cj, std::span<const Integer>(data.representatives[b])) == Membership::Interior;
    c.facet_point_on_both = contains(ci, std::span<const Integer>(e.facet_point)) == Membership::Boundary &&
                            contains(cj, std::span<const Integer>(e.facet_point)) == Membership::Boundary;
    c.separates = implies(ci, e.direction) && implies(cj, negated(e.direction));
    std::vector<const IntVector*> tight;
    for (const auto& f : ci.inequalities()) {
      if (dot(std::span<const Integer>(f), std::span<const Integer>(e.facet_point)) == 0) tight.push_back(&f);
    }
    c.relative_interior = ci.equalities().empty() && tight.size() == 1;
    c.normal_matches = tight.size() == 1 && positively_parallel(*tight.front(), e.direction);
    out.push_back(c);
  }
  return out;
}

RatVector farkas_product(const CertificateData& data) {
  DirectionGraph g = data.graph();
  RatMatrix A = build_system(g, data.flows());
  return left_multiply(data.farkas_y, A, g.edge_count());
}

bool farkas_replay(const CertificateData& data) {
  DirectionGraph g = data.graph();
  RatMatrix A = build_system(g, data.flows());
  return is_farkas_certificate(A, data.farkas_y);
}

bool CertificateReport::passed() const {
  if (!flows_conserved || !orthogonality || !farkas || edges.empty()) return false;
  for (const auto& e : edges) {
    if (!e.ok()) return false;
  }
  return true;
}

CertificateReport run_certificate(const CertificateData& data, const TermOrder& tiebreak) {
  CertificateReport r;
  r.flows_conserved = check_flows(data);
  r.contributions = local_contributions(data);
  r.orthogonality = check_orthogonality(data);
  r.edges = verify_subgraph(certificate_ideal(), data, tiebreak);
  r.product = farkas_product(data);
  r.farkas = farkas_replay(data);
  return r;
}

nlohmann::ordered_json report_json(const CertificateReport& r, const CertificateData& data) {
  nlohmann::ordered_json j;
  j["passed"] = r.passed();
  j["flows_conserved"] = r.flows_conserved;
  j["orthogonality"] = r.orthogonality;
  j["farkas_replay"] = r.farkas;
  std::vector<std::string> prod;
  for (const auto& x : r.product) prod.push_back(to_string(x));
  j["farkas_product"] = prod;
  auto& edges = j["edges"] = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < r.edges.size(); ++k) {
    const auto& c = r.edges[k];
    nlohmann::ordered_json e;
    e["i"] = c.i;
    e["j"] = c.j;
    e["facet_point"] = format_vector(std::span<const Integer>(data.edges[k].facet_point));
    e["direction"] = format_vector(std::span<const Integer>(data.edges[k].direction));
    e["local_contribution"] = to_string(r.contributions[k]);
    e["distinct_bases"] = c.distinct_bases;
    e["representatives_inside"] = c.representatives_inside;
    e["facet_point_on_both"] = c.facet_point_on_both;
    e["separates"] = c.separates;
    e["relative_interior"] = c.relative_interior;
    e["normal_matches"] = c.normal_matches;
    edges.push_back(std::move(e));
  }
  return j;
}

std::string report_text(const CertificateReport& r, const CertificateData& data) {
  auto mark = [](bool b) { return b ? "ok" : "FAIL"; };
  std::ostringstream os;
  os << "flows conserved:        " << mark(r.flows_conserved) << "\n";
  os << "local contributions:    " << mark(r.orthogonality) << "\n";
  os << "farkas vector replays:  " << mark(r.farkas) << "\n";
  os << "edges:\n";
  for (std::size_t k = 0; k < r.edges.size(); ++k) {
    const auto& c = r.edges[k];
    os << "  (" << c.i << "," << c.j << ") at " << format_vector(std::span<const Integer>(data.edges[k].facet_point))
       << "  contribution " << to_string(r.contributions[k]) << "  " << mark(c.ok());
    if (!c.ok()) {
      os << " [";
      if (!c.distinct_bases) os << " bases";
      if (!c.representatives_inside) os << " representatives";
      if (!c.facet_point_on_both) os << " boundary";
      if (!c.separates) os << " separation";
      if (!c.relative_interior) os << " relative-interior";
      if (!c.normal_matches) os << " normal";
      os << " ]";
    }
    os << "\n";
  }
  os << (r.passed() ? "certificate verified" : "certificate FAILED") << "\n";
  return os.str();
}

}  // namespace rfan
