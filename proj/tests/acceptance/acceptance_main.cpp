// Copyright 2026 The rfan Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "test_support.hpp"

namespace {

using namespace rfan;
using rfan::testing::iv;
using rfan::testing::rv;

struct Check {
  std::ostringstream notes;
  bool ok = true;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes << " [failed: " << what << "]";
    }
  }
};

struct Criterion {
  int id;
  const char* name;
  std::function<void(Check&)> run;
};

const Ideal& nonregular_ideal() {
  static const Ideal I = certificate_ideal();
  return I;
}

const FanGraph& nonregular_fan() {
  static const FanGraph fan = enumerate_restricted_fan(nonregular_ideal(), TermOrder::lex(4));
  return fan;
}

void enumeration_counts(Check& c) {
  auto t0 = std::chrono::steady_clock::now();
  const auto& fan = nonregular_fan();
  std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
  c.notes << " cones=" << fan.cones.size() << " edges=" << fan.edges.size() << " time=" << dt.count() << "s";
  c.expect(fan.cones.size() == 81, "81 cones");
  c.expect(fan.edges.size() == 163, "163 edges");
  c.expect(dt.count() < 300, "under five minutes");
}

void nonregular_verdict(Check& c) {
  const auto& fan = nonregular_fan();
  auto out = check_regularity(fan);
  const auto* nr = std::get_if<NonRegular>(&out.verdict);
  c.expect(nr != nullptr, "non-regular verdict");
  if (!nr) return;
  c.expect(is_farkas_certificate(out.system, nr->y), "certificate replays");
  auto i = fan.interior_cone(iv({10, 1, 2, 6}));
  auto j = fan.interior_cone(iv({15, 1, 3, 11}));
  c.expect(i && j, "both weights inside cones");
  if (!i || !j) return;
  auto e = fan.find_edge(*i, *j);
  c.expect(e.has_value(), "the two cones are adjacent");
  if (!e) return;
  bool forced = std::find(nr->forced_edges.begin(), nr->forced_edges.end(), *e) != nr->forced_edges.end();
  c.expect(forced, "their edge is forced to zero");
  c.notes << " forced_edges=" << nr->forced_edges.size();
}

void certificate_replay(Check& c) {
  const auto& d = certificate_data();
  auto r = run_certificate(d, TermOrder::lex(4));
  c.expect(r.flows_conserved, "flows conserved");
  c.expect(r.orthogonality, "19 zero contributions and 18 on (29,30)");
  c.expect(r.farkas, "farkas vector replays");
  std::size_t boundary = 0, relint = 0, separates = 0;
  for (const auto& e : r.edges) {
    boundary += e.facet_point_on_both;
    relint += e.relative_interior && e.normal_matches;
    separates += e.separates && e.distinct_bases;
  }
  c.expect(boundary == 20, "all facet vectors on both boundaries");
  c.expect(relint == 20, "all facet vectors relative-interior");
  c.expect(separates == 20, "all directions separate");
  c.notes << " edges_ok=" << std::count_if(r.edges.begin(), r.edges.end(), [](const EdgeCheck& e) { return e.ok(); });
}

// in_w(I) for an arbitrary weight through the homogenized ideal:
// in_w(I) = in_(w,0)(hI) with e = 1, and (w,0) ~ (w,0) + t(1,...,1) > 0.
std::string initial_ideal_key(const Ideal& I, const Ideal& h, const RatVector& w) {
  RatVector lifted = w;
  lifted.push_back(0);
  Rational shift = 1;
  for (const auto& x : lifted) shift = std::max(shift, Rational(1 - x));
  RatVector positive = lifted;
  for (auto& x : positive) x += shift;
  auto gb = gb_for_weight(h, std::span<const Rational>(positive), TermOrder::lex(h.nvars()));
  std::vector<Polynomial> forms;
  for (const auto& e : gb.elements()) forms.push_back(rfan::testing::dehomogenize(initial_form(lifted, e.polynomial)));
  return buchberger(Ideal(I.ring(), forms), TermOrder::lex(I.nvars())).key();
}

void five_initial_ideals(Check& c) {
  const Ideal I = parse_ideal("ring x1,x2; ideal x1 - 1, x2 - 1;");
  const Ideal h = homogenize(I, TermOrder::lex(2));
  const Ring& r = I.ring();
  auto key_of = [&](std::initializer_list<const char*> gens) {
    std::vector<Polynomial> ps;
    for (auto g : gens) ps.push_back(parse_polynomial(g, r));
    return buchberger(Ideal(r, ps), TermOrder::lex(2)).key();
  };
  const std::set<std::string> expected{key_of({"1"}), key_of({"x1", "x2"}), key_of({"x1", "x2 - 1"}),
                                       key_of({"x1 - 1", "x2"}), key_of({"x1 - 1", "x2 - 1"})};
  std::set<std::string> seen;
  for (int a = -10; a <= 10; ++a) {
    for (int b = -10; b <= 10; ++b) seen.insert(initial_ideal_key(I, h, rv({a, b})));
  }
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 9);
  for (int k = 0; k < 300; ++k) {
    RatVector w{Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
    for (auto& x : w) x.canonicalize();
    seen.insert(initial_ideal_key(I, h, w));
  }
  c.notes << " classes=" << seen.size();
  c.expect(seen == expected, "exactly the five initial ideals");

  auto one = key_of({"1"});
  auto u = initial_ideal_key(I, h, rv({-1, 3}));
  auto v = initial_ideal_key(I, h, rv({3, -1}));
  auto mid = initial_ideal_key(I, h, rv({1, 1}));
  c.expect(u == one && v == one, "u and v give <1>");
  c.expect(mid == key_of({"x1", "x2"}), "midpoint gives <x1,x2>");

  auto fan = enumerate_restricted_fan(I, TermOrder::lex(2));
  c.expect(fan.cones.size() == 1 && fan.cones[0].cone == Cone::orthant(2), "restricted fan is the orthant");
}

void principal_oracle(Check& c) {
  const Ideal I = parse_ideal("ring x1,x2; ideal x1 + x2 + 1;");
  auto fan = enumerate_restricted_fan(I, TermOrder::lex(2));
  auto refined = refine_with_orthant(vertex_normal_fan(newton_polytope(I.generators()[0])));
  auto minkowski = vertex_normal_fan(minus_orthant_sum(newton_polytope(I.generators()[0])));
  c.notes << " cones=" << fan.cones.size() << " edges=" << fan.edges.size();
  c.expect(fan.cones.size() == refined.size(), "same number of cones");
  for (const auto& g : fan.cones) {
    bool hit = std::any_of(refined.begin(), refined.end(), [&](const Cone& x) {
      return x.equalities() == g.cone.equalities() && x.inequalities() == g.cone.inequalities();
    });
    c.expect(hit, "cone equals a refined normal cone");
  }
  c.expect(refined.size() == minkowski.size() &&
               std::equal(refined.begin(), refined.end(), minkowski.begin()),
           "orthant refinement equals Minkowski sum normal fan");
  auto out = check_regularity(fan);
  c.expect(out.passes_necessary_condition(), "embedding");
  if (out.passes_necessary_condition()) {
    c.expect(verify_embedding(direction_graph(fan), std::get<Embedding>(out.verdict)), "embedding replays");
  }
}

void zero_dimensional(Check& c) {
  for (const char* text : {"ring x1,x2; ideal x1^2 - 1, x2^2 - 1;", "ring x1,x2; ideal x1^2 - x2, x2^2 - x1;"}) {
    const Ideal I = parse_ideal(text);
    auto fan = enumerate_restricted_fan(I, TermOrder::lex(2));
    std::vector<RatVector> v;
    for (const auto& g : fan.cones) {
      RatVector sum(2);
      for (const auto& m : rfan::testing::standard_monomials(g.key.marks(), 2, 8)) {
        sum[0] -= m[0];
        sum[1] -= m[1];
      }
      v.push_back(sum);
    }
    auto out = check_regularity(fan);
    c.expect(out.passes_necessary_condition(), std::string("embedding for ") + text);
    if (!out.passes_necessary_condition()) continue;
    const auto& emb = std::get<Embedding>(out.verdict);
    c.expect(verify_embedding(direction_graph(fan), emb), "embedding replays");
    for (const auto& e : fan.edges) {
      RatVector dv{v[e.j][0] - v[e.i][0], v[e.j][1] - v[e.i][1]};
      RatVector dx{emb.coordinates[e.j][0] - emb.coordinates[e.i][0], emb.coordinates[e.j][1] - emb.coordinates[e.i][1]};
      c.expect(!is_zero(std::span<const Rational>(dv)) &&
                   primitive(std::span<const Rational>(dv)) == primitive(std::span<const Rational>(dx)),
               "vertex differences are positive multiples");
    }
    c.notes << " cones=" << fan.cones.size();
  }
}

void homogeneous(Check& c) {
  std::vector<std::string> texts{"ring x1,x2,x3; ideal x1^2 - x2*x3;", "ring x,y,z; ideal x^2 - y*z, x*y - z^2;"};
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> coef(1, 3), sign(0, 1);
  auto term = [&](const char* monomial) {
    std::ostringstream t;
    t << (sign(rng) ? " - " : " + ") << coef(rng) << "*" << monomial;
    return t.str();
  };
  for (int k = 0; k < 4; ++k) {
    std::ostringstream os;
    os << "ring x,y,z; ideal x^2" << term("y*z") << term("x*y") << term("z^2") << ", x*z" << term("y^2")
       << term("z^2") << ";";
    texts.push_back(os.str());
  }
  for (const auto& text : texts) {
    const Ideal I = parse_ideal(text);
    auto fan = enumerate_restricted_fan(I, TermOrder::lex(I.nvars()));
    auto out = check_regularity(fan);
    c.expect(out.passes_necessary_condition(), "embedding for " + text);
    if (out.passes_necessary_condition()) {
      c.expect(verify_embedding(direction_graph(fan), std::get<Embedding>(out.verdict)), "embedding replays");
    }
  }
  c.notes << " ideals=" << texts.size();
}

void extended_discrepancy(Check& c) {
  const Ideal& I = nonregular_ideal();
  const TermOrder lex = TermOrder::lex(4);
  const auto& fan = nonregular_fan();

  auto c57 = fan.interior_cone(iv({7, 1, 2, 7}));
  auto c58 = fan.interior_cone(iv({7, 1, 3, 8}));
  c.expect(c57 && c58, "restricted cones located");
  if (c57 && c58) {
    auto e = fan.find_edge(*c57, *c58);
    c.expect(e.has_value(), "57 and 58 adjacent in the restricted fan");
    c.expect(contains(fan.cones[*c57].cone, std::span<const Integer>(iv({10, 1, 3, 11}))) == Membership::Boundary,
             "(10,1,3,11) on the boundary of the restricted cone");
  }

  Ideal h = homogenize(I, lex);
  FanOracle oracle = extended_fan_oracle(h, lex);
  FanGraph slice = enumerate_fan(oracle);
  // The cone attached to the weight (7,1,2,7) refined by the tiebreak.
  const IntVector rows[] = {iv({7, 1, 2, 7})};
  auto key = oracle.basis_at(rows);
  auto it = std::find_if(slice.cones.begin(), slice.cones.end(), [&](const GroebnerCone& g) { return g.key == key; });
  c.expect(it != slice.cones.end(), "extended cone found");
  if (it != slice.cones.end()) {
    c.expect(contains(it->cone, std::span<const Integer>(iv({7, 1, 2, 7}))) != Membership::Outside,
             "that cone contains (7,1,2,7)");
    c.expect(contains(it->cone, std::span<const Integer>(iv({10, 1, 3, 11}))) == Membership::Outside,
             "(10,1,3,11) not on its boundary");
  }
  c.notes << " extended_cones=" << slice.cones.size() << " cones_through_(7,1,2,7)="
          << slice.locate(iv({7, 1, 2, 7})).size();

  const Ring& r = h.ring();
  std::vector<Polynomial> listed;
  for (const char* s : {"c*d^2 + a*c*e", "-c^2*e + c^2*d + a*b*d", "c^2*e + c^3 - b*c*e - b*c*d - a*b*d + a*b*c",
                        "-c*e^2 + a*d^2", "-c^2*e + a*c*d - a*b*e", "c^2*e - b*c*e + a*c^2 - a*b*d", "c^2*e + a^2*c",
                        "b*c*e + a^2*b"}) {
    listed.push_back(parse_polynomial(s, r));
  }
  c.expect(same_ideal(h, Ideal(r, listed), TermOrder::lex(5)), "homogenized ideal equals the listed one");
}

void property_suites(Check& c) {
  std::mt19937 rng(31);
  const Ring ring{{"x", "y", "z"}};
  int bases = 0;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) {
      auto f = rfan::testing::random_polynomial(rng, 3, 3, 2);
      if (!f.is_zero()) gens.push_back(f);
    }
    if (gens.empty()) continue;
    Ideal I(ring, gens);
    TermOrder o = TermOrder(3, Tiebreak::RevlexGraded).refined_by(rv({2, 1, 1}));
    auto gb = buchberger(I, o);
    std::reverse(gens.begin(), gens.end());
    c.expect(buchberger(Ideal(ring, gens), o) == gb, "uniqueness");
    c.expect(buchberger(Ideal(ring, gb.polynomials()), o) == gb, "idempotence");
    c.expect(gb.is_reduced() && is_groebner_basis(gb.elements(), o), "reduced Groebner basis");
    ++bases;
  }

  const auto& fan = nonregular_fan();
  for (const auto& g : fan.cones) {
    c.expect(contains(g.cone, std::span<const Integer>(g.representative)) == Membership::Interior,
             "representative interior");
    c.expect(gb_for_weight(nonregular_ideal(), std::span<const Integer>(g.representative), TermOrder::lex(4)) == g.key,
             "representative reproduces key");
  }

  auto graph = direction_graph(fan);
  std::set<std::vector<std::size_t>> forced_sets;
  for (unsigned seed : {1u, 2u, 3u}) {
    std::vector<std::size_t> order(graph.edge_count());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::mt19937 shuffle_rng(seed);
    std::shuffle(order.begin(), order.end(), shuffle_rng);
    auto out = check_regularity(graph, order);
    const auto* nr = std::get_if<NonRegular>(&out.verdict);
    c.expect(nr != nullptr, "verdict independent of spanning tree");
    if (nr) {
      c.expect(is_farkas_certificate(out.system, nr->y), "certificate replays");
      forced_sets.insert(nr->forced_edges);
    }
  }
  c.expect(forced_sets.size() == 1, "forced edges independent of spanning tree");

  const Ideal tri = parse_ideal("ring x1,x2; ideal x1^2 - x2, x2^2 - x1;");
  auto tri_fan = enumerate_restricted_fan(tri, TermOrder::lex(2));
  auto out = check_regularity(tri_fan);
  c.expect(out.passes_necessary_condition() &&
               verify_embedding(direction_graph(tri_fan), std::get<Embedding>(out.verdict)),
           "embedding replays");
  c.notes << " random_bases=" << bases;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "81 maximal cones and 163 edges", enumeration_counts},
      {2, "non-regular verdict, forced edge between (10,1,2,6) and (15,1,3,11)", nonregular_verdict},
      {3, "embedded certificate replays", certificate_replay},
      {4, "five initial ideals of <x1-1, x2-1>", five_initial_ideals},
      {5, "principal ideal equals refined Newton normal fan, embedding", principal_oracle},
      {6, "zero-dimensional ideals embed along standard-monomial vertices", zero_dimensional},
      {7, "homogeneous ideals embed", homogeneous},
      {8, "extended slice differs at (10,1,3,11); homogenization matches", extended_discrepancy},
      {9, "property suites", property_suites},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check c;
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.notes << " [exception: " << e.what() << "]";
    }
    std::cout << (c.ok ? "PASS" : "FAIL") << "  criterion " << cr.id << ": " << cr.name << c.notes.str() << std::endl;
    failed += !c.ok;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
