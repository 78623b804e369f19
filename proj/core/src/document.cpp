// Copyright 2026 The rfan Authors
// SPDX-License-Identifier: Apache-2.0

#include "rfan/document.hpp"

#include "rfan/io.hpp"

namespace rfan {

namespace {

constexpr const char* kFanFormat = "rfan-fan/1";
constexpr const char* kRegularityFormat = "rfan-regularity/1";

const char* to_string(FanKind k) { return k == FanKind::Restricted ? "restricted" : "extended"; }

FanKind parse_kind(const std::string& s) {
  if (s == "restricted") return FanKind::Restricted;
  if (s == "extended") return FanKind::Extended;
  throw DocumentError("unknown fan kind '" + s + "'");
}

Json ring_json(const Ring& r) { return Json(r.variables); }

Ring ring_from_json(const Json& j) {
  Ring r;
  r.variables = j.get<std::vector<std::string>>();
  return r;
}

Json basis_json(const MarkedReducedGB& g, const Ring& ring) {
  Json out = Json::array();
  for (const auto& e : g.elements()) {
    Json m = Json::array();
    for (std::size_t i = 0; i < e.mark.size(); ++i) m.push_back(e.mark[i]);
    out.push_back(Json{{"mark", std::move(m)}, {"polynomial", format_polynomial(e.polynomial, ring)}});
  }
  return out;
}

MarkedReducedGB basis_from_json(const Json& j, const Ring& ring) {
  std::vector<MarkedPolynomial> elements;
  for (const auto& e : j) {
    auto m = e.at("mark").get<std::vector<int>>();
    if (m.size() != ring.size()) throw DocumentError("mark has wrong length");
    ExponentVector x(ring.size());
    for (std::size_t i = 0; i < m.size(); ++i) x.set(i, m[i]);
    elements.push_back({std::move(x), parse_polynomial(e.at("polynomial").get<std::string>(), ring)});
  }
  return MarkedReducedGB(std::move(elements));
}

}  // namespace

Json vector_json(std::span<const Integer> v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json vector_json(std::span<const Rational> v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

IntVector integer_vector_from_json(const Json& j) {
  IntVector out;
  for (const auto& x : j) out.push_back(parse_integer(x.get<std::string>()));
  return out;
}

RatVector rational_vector_from_json(const Json& j) {
  RatVector out;
  for (const auto& x : j) out.push_back(parse_rational(x.get<std::string>()));
  return out;
}

Json to_json(const FanDocument& doc) {
  Json j;
  j["format"] = kFanFormat;
  j["kind"] = to_string(doc.kind);
  j["ring"] = ring_json(doc.ideal.ring());
  Json gens = Json::array();
  for (const auto& g : doc.ideal.generators()) gens.push_back(format_polynomial(g, doc.ideal.ring()));
  j["ideal"] = std::move(gens);
  j["tiebreak"] = std::string(to_string(doc.tiebreak));
  j["basis_ring"] = ring_json(doc.basis_ring);
  j["dimension"] = doc.fan.dim;
  j["counts"] = Json{{"cones", doc.fan.cones.size()}, {"edges", doc.fan.edges.size()}};
  Json cones = Json::array();
  for (std::size_t k = 0; k < doc.fan.cones.size(); ++k) {
    const auto& c = doc.fan.cones[k];
    Json facets = Json::array();
    for (const auto& a : c.cone.inequalities()) facets.push_back(vector_json(a));
    Json cj;
    cj["id"] = k + 1;
    cj["representative"] = vector_json(c.representative);
    cj["facets"] = std::move(facets);
    if (!c.cone.equalities().empty()) {
      Json eqs = Json::array();
      for (const auto& e : c.cone.equalities()) eqs.push_back(vector_json(e));
      cj["equalities"] = std::move(eqs);
    }
    cj["basis"] = basis_json(c.key, doc.basis_ring);
    cones.push_back(std::move(cj));
  }
  j["cones"] = std::move(cones);
  Json edges = Json::array();
  for (const auto& e : doc.fan.edges) {
    edges.push_back(Json{{"i", e.i + 1},
                         {"j", e.j + 1},
                         {"direction", vector_json(e.direction)},
                         {"facet_point", vector_json(e.facet_point)}});
  }
  j["edges"] = std::move(edges);
  if (doc.seconds) j["seconds"] = *doc.seconds;
  return j;
}

FanDocument fan_document_from_json(const Json& j) {
  try {
    if (j.at("format").get<std::string>() != kFanFormat) throw DocumentError("not a fan document");
    Ring ring = ring_from_json(j.at("ring"));
    std::vector<Polynomial> gens;
    for (const auto& g : j.at("ideal")) gens.push_back(parse_polynomial(g.get<std::string>(), ring));
    FanDocument doc{Ideal(ring, std::move(gens)), parse_tiebreak(j.at("tiebreak").get<std::string>()),
                    parse_kind(j.at("kind").get<std::string>()), ring_from_json(j.at("basis_ring")), {}, {}};
    doc.fan.dim = j.at("dimension").get<std::size_t>();
    for (const auto& cj : j.at("cones")) {
      std::vector<IntVector> facets;
      for (const auto& a : cj.at("facets")) facets.push_back(integer_vector_from_json(a));
      std::vector<IntVector> eqs;
      if (cj.contains("equalities")) {
        for (const auto& e : cj.at("equalities")) eqs.push_back(integer_vector_from_json(e));
      }
      if (cj.at("id").get<std::size_t>() != doc.fan.cones.size() + 1) throw DocumentError("cone ids out of order");
      doc.fan.cones.push_back({basis_from_json(cj.at("basis"), doc.basis_ring),
                               Cone(doc.fan.dim, std::move(eqs), std::move(facets)).canonical(),
                               integer_vector_from_json(cj.at("representative"))});
    }
    for (const auto& ej : j.at("edges")) {
      auto i = ej.at("i").get<std::size_t>();
      auto jj = ej.at("j").get<std::size_t>();
      if (i == 0 || jj == 0 || i > doc.fan.cones.size() || jj > doc.fan.cones.size() || i >= jj) {
        throw DocumentError("edge endpoints out of range");
      }
      doc.fan.edges.push_back({i - 1, jj - 1, integer_vector_from_json(ej.at("direction")),
                               integer_vector_from_json(ej.at("facet_point"))});
    }
    const auto& counts = j.at("counts");
    if (counts.at("cones").get<std::size_t>() != doc.fan.cones.size() ||
        counts.at("edges").get<std::size_t>() != doc.fan.edges.size()) {
      throw DocumentError("counts do not match contents");
    }
    if (j.contains("seconds")) doc.seconds = j.at("seconds").get<double>();
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw DocumentError(std::string("malformed fan document: ") + e.what());
  }
}

std::string serialize(const FanDocument& doc) { return to_json(doc).dump(2) + "\n"; }

FanDocument parse_fan_document(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DocumentError(std::string("invalid JSON: ") + e.what());
  }
  return fan_document_from_json(j);
}

Json to_json(const RegularityOutcome& outcome, const FanGraph& fan) {
  Json j;
  j["format"] = kRegularityFormat;
  j["cones"] = fan.cones.size();
  j["edges"] = fan.edges.size();
  j["cycle_space_dimension"] = outcome.basis.flows.size();
  j["system_rows"] = outcome.system.size();
  if (const auto* emb = std::get_if<Embedding>(&outcome.verdict)) {
    j["verdict"] = "passes necessary condition";
    Json scalars = Json::array();
    for (std::size_t k = 0; k < fan.edges.size(); ++k) {
      scalars.push_back(Json{{"i", fan.edges[k].i + 1}, {"j", fan.edges[k].j + 1}, {"s", to_string(emb->scalars[k])}});
    }
    j["scalars"] = std::move(scalars);
    Json coords = Json::array();
    for (std::size_t v = 0; v < emb->coordinates.size(); ++v) {
      coords.push_back(Json{{"id", v + 1}, {"point", vector_json(emb->coordinates[v])}});
    }
    j["coordinates"] = std::move(coords);
  } else {
    const auto& nr = std::get<NonRegular>(outcome.verdict);
    j["verdict"] = "non-regular";
    Json y = Json::array();
    for (std::size_t row = 0; row < nr.y.size(); ++row) {
      if (nr.y[row] == 0) continue;
      y.push_back(Json{{"flow", row / fan.dim + 1}, {"coordinate", row % fan.dim + 1}, {"value", to_string(nr.y[row])}});
    }
    j["certificate"] = std::move(y);
    RatVector yA = left_multiply(nr.y, outcome.system, fan.edges.size());
    Json support = Json::array();
    for (std::size_t k = 0; k < yA.size(); ++k) {
      if (yA[k] == 0) continue;
      support.push_back(Json{{"i", fan.edges[k].i + 1}, {"j", fan.edges[k].j + 1}, {"value", to_string(yA[k])}});
    }
    j["certificate_support"] = std::move(support);
    Json forced = Json::array();
    for (auto k : nr.forced_edges) {
      const auto& e = fan.edges[k];
      forced.push_back(Json{{"i", e.i + 1},
                            {"j", e.j + 1},
                            {"direction", vector_json(e.direction)},
                            {"facet_point", vector_json(e.facet_point)},
                            {"representative_i", vector_json(fan.cones[e.i].representative)},
                            {"representative_j", vector_json(fan.cones[e.j].representative)}});
    }
    j["forced_zero_edges"] = std::move(forced);
  }
  return j;
}

}  // namespace rfan
