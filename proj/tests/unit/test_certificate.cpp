// Copyright 2026 The rfan Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace rfan {
namespace {

using testing::iv;

std::size_t edge_index(const CertificateData& d, int i, int j) {
  for (std::size_t k = 0; k < d.edges.size(); ++k) {
    if (d.edges[k].i == i && d.edges[k].j == j) return k;
  }
  throw std::out_of_range("no such edge");
}

TEST(CertificateData, Shape) {
  const auto& d = certificate_data();
  EXPECT_EQ(d.vertex_ids.size(), 15u);
  EXPECT_EQ(d.edges.size(), 20u);
  EXPECT_EQ(d.farkas_y.size(), 16u);
  for (const auto& w : d.representatives)
    for (const auto& x : w) EXPECT_GT(x, 0);
}

TEST(CheckFlows, PaperFlowsAndPerturbations) {
  auto d = certificate_data();
  EXPECT_TRUE(check_flows(d));

  auto zero = d;
  for (auto& e : zero.edges) e.flows = iv({0, 0, 0, 0});
  EXPECT_TRUE(check_flows(zero));

  auto bad = d;
  const std::size_t k = edge_index(bad, 15, 16);
  bad.edges[k].flows[0] = -bad.edges[k].flows[0];
  EXPECT_FALSE(check_flows(bad));
  auto g = bad.graph();
  // The violation sits exactly at the endpoints of the edited edge.
  RatVector balance(g.vertices);
  auto f = bad.flows()[0];
  for (std::size_t e = 0; e < f.size(); ++e) {
    balance[g.ends[e].first] -= f[e];
    balance[g.ends[e].second] += f[e];
  }
  for (std::size_t v = 0; v < g.vertices; ++v) {
    bool endpoint = v == g.ends[k].first || v == g.ends[k].second;
    EXPECT_EQ(balance[v] != 0, endpoint);
  }
}

TEST(CheckOrthogonality, LocalContributions) {
  const auto& d = certificate_data();
  auto c = local_contributions(d);
  EXPECT_EQ(c[edge_index(d, 5, 6)], 0);
  EXPECT_EQ(c[edge_index(d, 29, 30)], 18);
  int zeros = 0;
  for (const auto& x : c) zeros += x == 0;
  EXPECT_EQ(zeros, 19);
  EXPECT_TRUE(check_orthogonality(d));

  auto zero = d;
  for (auto& e : zero.edges) e.flows = iv({0, 0, 0, 0});
  for (const auto& x : local_contributions(zero)) EXPECT_EQ(x, 0);
}

TEST(FarkasReplay, PaperVector) {
  auto d = certificate_data();
  EXPECT_TRUE(farkas_replay(d));
  auto prod = farkas_product(d);
  for (std::size_t k = 0; k < prod.size(); ++k) {
    EXPECT_EQ(prod[k], k == edge_index(d, 29, 30) ? 18 : 0);
  }
  auto zero = d;
  for (auto& y : zero.farkas_y) y = 0;
  EXPECT_FALSE(farkas_replay(zero));
}

class SubgraphChecks : public ::testing::Test {
 protected:
  Ideal I = certificate_ideal();
  TermOrder lex = TermOrder::lex(4);
};

TEST_F(SubgraphChecks, AllEdgesPass) {
  auto checks = verify_subgraph(I, certificate_data(), lex);
  ASSERT_EQ(checks.size(), 20u);
  for (const auto& c : checks) EXPECT_TRUE(c.ok()) << c.i << "-" << c.j;
}

TEST_F(SubgraphChecks, SwappedDirectionFailsSeparation) {
  auto d = certificate_data();
  const std::size_t k = edge_index(d, 17, 33);
  d.edges[k].direction = negated(d.edges[k].direction);
  auto checks = verify_subgraph(I, d, lex);
  EXPECT_FALSE(checks[k].separates);
  EXPECT_TRUE(checks[k].facet_point_on_both);
  for (std::size_t e = 0; e < checks.size(); ++e) {
    if (e != k) EXPECT_TRUE(checks[e].ok());
  }
}

TEST_F(SubgraphChecks, InteriorPointFailsRelativeInterior) {
  auto d = certificate_data();
  const std::size_t k = edge_index(d, 29, 30);
  d.edges[k].facet_point = iv({10, 1, 2, 6});
  auto checks = verify_subgraph(I, d, lex);
  EXPECT_FALSE(checks[k].relative_interior);
  EXPECT_FALSE(checks[k].facet_point_on_both);
  auto g29 = gb_for_weight(I, std::span<const Integer>(iv({10, 1, 2, 6})), lex);
  EXPECT_EQ(contains(groebner_cone(g29), std::span<const Integer>(iv({10, 1, 2, 6}))), Membership::Interior);
}

TEST_F(SubgraphChecks, RunReportPasses) {
  auto r = run_certificate(certificate_data(), lex);
  EXPECT_TRUE(r.passed());
  auto j = report_json(r, certificate_data());
  EXPECT_TRUE(j.at("passed").get<bool>());
  EXPECT_EQ(j.at("edges").size(), 20u);
  EXPECT_NE(report_text(r, certificate_data()).find("certificate verified"), std::string::npos);
}

// The labelled subgraph is found inside the enumerated fan by locating the
// representatives, and every listed edge is a fan edge with the same facet.
TEST(EndToEnd, SubgraphEmbedsInEnumeratedFan) {
  const auto& d = certificate_data();
  auto fan = enumerate_restricted_fan(certificate_ideal(), TermOrder::lex(4));
  std::vector<std::size_t> where;
  for (const auto& w : d.representatives) {
    auto k = fan.interior_cone(w);
    ASSERT_TRUE(k.has_value());
    where.push_back(*k);
  }
  for (const auto& e : d.edges) {
    std::size_t a = where[d.vertex_index(e.i)];
    std::size_t b = where[d.vertex_index(e.j)];
    auto k = fan.find_edge(a, b);
    ASSERT_TRUE(k.has_value()) << e.i << "-" << e.j;
    const auto& fe = fan.edges[*k];
    // Our orientation follows the canonical order, the listed one follows labels.
    IntVector dir = fe.i == a ? fe.direction : negated(fe.direction);
    EXPECT_TRUE(positively_parallel(dir, e.direction)) << e.i << "-" << e.j;
    EXPECT_EQ(contains(fan.cones[a].cone, std::span<const Integer>(e.facet_point)), Membership::Boundary);
    EXPECT_EQ(contains(fan.cones[b].cone, std::span<const Integer>(e.facet_point)), Membership::Boundary);
  }
}

}  // namespace
}  // namespace rfan
