// Copyright 2026 The rfan Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rfan/groebner.hpp"
#include "rfan/regularity.hpp"

namespace rfan {

struct CertificateEdge {
  int i = 0;  // vertex labels, not indices
  int j = 0;
  IntVector flows;      // f^1..f^4 on this edge
  IntVector direction;  // d_(i,j)
  IntVector facet_point;
};

/// Non-regularity certificate for the restricted fan of
/// <acd + a^2c - ab, ad^2 - c, ad^4 + ac>: a 15-vertex, 20-edge subgraph
/// with representative weights, four flows and a Farkas vector.
struct CertificateData {
  std::vector<int> vertex_ids;
  std::vector<IntVector> representatives;
  std::vector<CertificateEdge> edges;
  RatVector farkas_y;

  std::size_t vertex_index(int label) const;
  DirectionGraph graph() const;
  std::vector<Flow> flows() const;
};

const CertificateData& certificate_data();

/// The ideal the certificate is about, in the ring a,b,c,d.
Ideal certificate_ideal();

/// Each of the flows is conserved at every vertex.
bool check_flows(const CertificateData& data);

/// Per edge: sum over r of d_r f^r.
std::vector<Rational> local_contributions(const CertificateData& data);

/// All local contributions vanish except on edge (29,30), where it is 18.
bool check_orthogonality(const CertificateData& data);

struct EdgeCheck {
  int i = 0;
  int j = 0;
  bool distinct_bases = false;     // G_i != G_j and both cones full-dimensional
  bool representatives_inside = false;
  bool facet_point_on_both = false;  // Boundary in C_i and in C_j
  bool separates = false;            // C_i <= 0 <= C_j along the direction
  bool relative_interior = false;    // exactly one facet of C_i is tight at the point
  bool normal_matches = false;       // that facet's normal is a positive multiple of the direction

  bool ok() const {
    return distinct_bases && representatives_inside && facet_point_on_both && separates && relative_interior &&
           normal_matches;
  }
};

std::vector<EdgeCheck> verify_subgraph(const Ideal& ideal, const CertificateData& data, const TermOrder& tiebreak);

/// y^T A' for the system assembled from the certificate's flows.
RatVector farkas_product(const CertificateData& data);
bool farkas_replay(const CertificateData& data);

struct CertificateReport {
  bool flows_conserved = false;
  std::vector<Rational> contributions;
  bool orthogonality = false;
  std::vector<EdgeCheck> edges;
  RatVector product;
  bool farkas = false;

  bool passed() const;
};

CertificateReport run_certificate(const CertificateData& data, const TermOrder& tiebreak);

nlohmann::ordered_json report_json(const CertificateReport& r, const CertificateData& data);
std::string report_text(const CertificateReport& r, const CertificateData& data);

}  // namespace rfan
