// Copyright 2026 The rfan Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "test_support.hpp"

namespace rfan {
namespace {

using testing::iv;
using testing::rv;

DirectionGraph path_graph() {
  DirectionGraph g;
  g.vertices = 3;
  g.dim = 2;
  g.ends = {{0, 1}, {1, 2}};
  g.directions = {iv({1, 0}), iv({0, 1})};
  return g;
}

DirectionGraph square() {
  DirectionGraph g;
  g.vertices = 4;
  g.dim = 2;
  g.ends = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  g.directions = {iv({1, 0}), iv({0, 1}), iv({-1, 0}), iv({0, -1})};
  return g;
}

std::vector<std::size_t> shuffled_edges(std::size_t n, unsigned seed) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

TEST(CycleBasis, TreeHasNoCycles) {
  auto g = path_graph();
  auto b = cycle_basis(g);
  EXPECT_TRUE(b.flows.empty());
  EXPECT_EQ(b.tree_edges.size(), 2u);
  EXPECT_TRUE(build_system(g, b.flows).empty());
  auto out = check_regularity(g);
  ASSERT_TRUE(out.passes_necessary_condition());
  EXPECT_TRUE(verify_embedding(g, std::get<Embedding>(out.verdict)));
}

TEST(CycleBasis, SingleCycle) {
  for (std::size_t k = 3; k <= 7; ++k) {
    DirectionGraph g;
    g.vertices = k;
    g.dim = 1;
    for (std::size_t v = 0; v < k; ++v) {
      // Alternate orientations to exercise signs.
      if (v % 2) {
        g.ends.emplace_back((v + 1) % k, v);
      } else {
        g.ends.emplace_back(v, (v + 1) % k);
      }
      g.directions.push_back(iv({1}));
    }
    auto b = cycle_basis(g);
    ASSERT_EQ(b.flows.size(), 1u);
    for (const auto& x : b.flows[0]) EXPECT_TRUE(x == 1 || x == -1);
    EXPECT_TRUE(is_flow(g, b.flows[0]));
  }
}

TEST(CycleBasis, CertificateSubgraphDimension) {
  auto g = certificate_data().graph();
  auto b = cycle_basis(g);
  EXPECT_EQ(b.flows.size(), 20u - 15u + 1u);
  for (const auto& f : b.flows) EXPECT_TRUE(is_flow(g, f));
}

TEST(BuildSystem, Square) {
  auto g = square();
  auto b = cycle_basis(g);
  auto A = build_system(g, b.flows);
  ASSERT_EQ(A.size(), 2u);
  ASSERT_EQ(A[0].size(), 4u);
  RatVector ones(4, Rational(1));
  for (const auto& v : multiply(A, ones)) EXPECT_EQ(v, 0);
  auto out = check_regularity(g);
  ASSERT_TRUE(out.passes_necessary_condition());
  EXPECT_TRUE(verify_embedding(g, std::get<Embedding>(out.verdict)));
}

TEST(BuildSystem, MissingDirectionIsAnError) {
  auto g = square();
  g.directions.pop_back();
  EXPECT_THROW(build_system(g, cycle_basis(g).flows), std::invalid_argument);
}

TEST(Regularity, SkewedSquareIsNotRegular) {
  // Directions that cannot close up: all point "forward" in x.
  auto g = square();
  g.directions[2] = iv({1, 0});
  auto out = check_regularity(g);
  ASSERT_FALSE(out.passes_necessary_condition());
  const auto& nr = std::get<NonRegular>(out.verdict);
  EXPECT_TRUE(is_farkas_certificate(out.system, nr.y));
  EXPECT_FALSE(nr.forced_edges.empty());
}

TEST(VerifyEmbedding, TranslationAndPerturbation) {
  auto g = square();
  auto emb = std::get<Embedding>(check_regularity(g).verdict);
  auto moved = emb;
  for (auto& p : moved.coordinates) {
    p[0] += 5;
    p[1] -= Rational(2, 3);
  }
  EXPECT_TRUE(verify_embedding(g, moved));
  auto broken = emb;
  broken.coordinates[2][0] += 1;
  EXPECT_FALSE(verify_embedding(g, broken));
  // Only the edges at vertex 2 fail.
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    auto [a, b] = g.ends[k];
    bool holds = true;
    for (std::size_t t = 0; t < 2; ++t) {
      holds = holds && broken.coordinates[b][t] - broken.coordinates[a][t] == broken.scalars[k] * g.directions[k][t];
    }
    EXPECT_EQ(holds, a != 2 && b != 2);
  }
}

struct RegularCase {
  const char* text;
  std::size_t cones;  // 0: not checked
};

class RegularFans : public ::testing::TestWithParam<RegularCase> {};

TEST_P(RegularFans, EmbeddingForEveryTree) {
  auto I = testing::ideal(GetParam().text);
  auto fan = enumerate_restricted_fan(I, TermOrder::lex(I.nvars()));
  if (GetParam().cones != 0) EXPECT_EQ(fan.cones.size(), GetParam().cones);
  auto g = direction_graph(fan);
  for (unsigned seed : {0u, 1u, 2u, 3u}) {
    auto order = seed == 0 ? std::vector<std::size_t>{} : shuffled_edges(g.edge_count(), seed);
    auto out = check_regularity(g, order);
    ASSERT_TRUE(out.passes_necessary_condition()) << GetParam().text;
    EXPECT_TRUE(verify_embedding(g, std::get<Embedding>(out.verdict)));
  }
  // Positive rescaling of directions keeps the verdict.
  for (std::size_t k = 0; k < g.edge_count(); ++k)
    for (auto& x : g.directions[k]) x *= Integer(k % 3 + 1);
  EXPECT_TRUE(check_regularity(g).passes_necessary_condition());
}

INSTANTIATE_TEST_SUITE_P(
    Ideals, RegularFans,
    ::testing::Values(RegularCase{"ring x1,x2; ideal x1 + x2 + 1;", 2}, RegularCase{"ring x1,x2; ideal x1^2 - x2, x2^2 - x1;", 3},
                      RegularCase{"ring x1,x2,x3; ideal x1^2 - x2*x3;", 2},
                      RegularCase{"ring x,y,z; ideal x^2 - y*z, x*y - z^2;", 0},
                      RegularCase{"ring x,y,z; ideal x^3 - y*z^2 + x*y*z, y^2 - x*z;", 0}));

// Oracle: the vertex v = -(sum of standard monomial exponents) of each cone of
// a zero-dimensional ideal; embedded vertex differences must be positive
// multiples of the differences of these vectors.
TEST(Regularity, ZeroDimensionalMatchesStandardMonomialVertices) {
  for (const char* text : {"ring x1,x2; ideal x1^2 - x2, x2^2 - x1;", "ring x1,x2; ideal x1^2 - 1, x2^2 - 1;",
                           "ring x,y; ideal x^2 + y^2 - 5, x*y - 2;"}) {
    auto I = testing::ideal(text);
    auto fan = enumerate_restricted_fan(I, TermOrder::lex(2));
    std::vector<RatVector> v;
    for (const auto& c : fan.cones) {
      RatVector sum(2);
      for (const auto& m : testing::standard_monomials(c.key.marks(), 2, 8)) {
        sum[0] -= m[0];
        sum[1] -= m[1];
      }
      v.push_back(sum);
    }
    auto out = check_regularity(fan);
    ASSERT_TRUE(out.passes_necessary_condition()) << text;
    const auto& emb = std::get<Embedding>(out.verdict);
    for (const auto& e : fan.edges) {
      RatVector dv{v[e.j][0] - v[e.i][0], v[e.j][1] - v[e.i][1]};
      RatVector dx{emb.coordinates[e.j][0] - emb.coordinates[e.i][0], emb.coordinates[e.j][1] - emb.coordinates[e.i][1]};
      EXPECT_EQ(primitive(std::span<const Rational>(dv)), primitive(std::span<const Rational>(dx))) << text;
      EXPECT_EQ(primitive(std::span<const Rational>(dv)), e.direction) << text;
    }
  }
}

TEST(Regularity, RandomHomogeneousIdealsPass) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> coef(-3, 3);
  const Ring r{{"x", "y", "z"}};
  int tested = 0;
  for (int trial = 0; trial < 12; ++trial) {
    // Two random quadrics.
    std::vector<Polynomial> gens;
    for (int k = 0; k < 2; ++k) {
      std::vector<Term> ts;
      for (auto e : {ExponentVector{2, 0, 0}, ExponentVector{0, 2, 0}, ExponentVector{0, 0, 2}, ExponentVector{1, 1, 0},
                     ExponentVector{1, 0, 1}, ExponentVector{0, 1, 1}}) {
        ts.push_back({Rational(coef(rng)), e});
      }
      Polynomial p(3, std::move(ts));
      if (!p.is_zero()) gens.push_back(p);
    }
    if (gens.empty()) continue;
    Ideal I(r, gens);
    auto fan = enumerate_restricted_fan(I, TermOrder::lex(3));
    auto out = check_regularity(fan);
    EXPECT_TRUE(out.passes_necessary_condition());
    if (out.passes_necessary_condition()) {
      EXPECT_TRUE(verify_embedding(direction_graph(fan), std::get<Embedding>(out.verdict)));
    }
    ++tested;
  }
  EXPECT_GE(tested, 10);
}

class NonRegular81 : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { fan_ = new FanGraph(enumerate_restricted_fan(certificate_ideal(), TermOrder::lex(4))); }
  static void TearDownTestSuite() { delete fan_; }
  static FanGraph* fan_;
};

FanGraph* NonRegular81::fan_ = nullptr;

TEST_F(NonRegular81, CertificateAndForcedEdge) {
  auto out = check_regularity(*fan_);
  ASSERT_FALSE(out.passes_necessary_condition());
  const auto& nr = std::get<NonRegular>(out.verdict);
  EXPECT_TRUE(is_farkas_certificate(out.system, nr.y));
  EXPECT_EQ(out.basis.flows.size(), 163u - 81u + 1u);

  auto i = fan_->interior_cone(iv({10, 1, 2, 6}));
  auto j = fan_->interior_cone(iv({15, 1, 3, 11}));
  ASSERT_TRUE(i && j);
  auto e = fan_->find_edge(*i, *j);
  ASSERT_TRUE(e.has_value());
  EXPECT_NE(std::find(nr.forced_edges.begin(), nr.forced_edges.end(), *e), nr.forced_edges.end());

  // Every edge in the support of y^T A is forced.
  auto yA = left_multiply(nr.y, out.system, fan_->edges.size());
  for (std::size_t k = 0; k < yA.size(); ++k) {
    if (yA[k] > 0) EXPECT_NE(std::find(nr.forced_edges.begin(), nr.forced_edges.end(), k), nr.forced_edges.end());
  }
}

TEST_F(NonRegular81, VerdictIndependentOfSpanningTree) {
  auto g = direction_graph(*fan_);
  auto base = std::get<NonRegular>(check_regularity(g).verdict).forced_edges;
  for (unsigned seed : {5u, 6u, 7u}) {
    auto out = check_regularity(g, shuffled_edges(g.edge_count(), seed));
    ASSERT_FALSE(out.passes_necessary_condition());
    const auto& nr = std::get<NonRegular>(out.verdict);
    EXPECT_TRUE(is_farkas_certificate(out.system, nr.y));
    EXPECT_EQ(nr.forced_edges, base);
  }
}

}  // namespace
}  // namespace rfan
