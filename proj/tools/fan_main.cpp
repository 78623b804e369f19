// Copyright 2026 The rfan Authors
// SPDX-License-Identifier: Apache-2.0

// fan: restricted Groebner fans, their regularity, and the embedded
// non-regularity certificate.
//
// Exit status: 0 success, 1 usage/parse error or failed verification,
// 2 a non-regularity certificate was emitted.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rfan/rfan.hpp"

namespace {

using namespace rfan;

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Usage("cannot write " + path);
  out << text;
}

Tiebreak pick_tiebreak(const std::string& flag, const IdealFile& file) {
  if (!flag.empty()) return parse_tiebreak(flag);
  return file.tiebreak.value_or(Tiebreak::Lex);
}

FanDocument enumerate_document(const std::string& path, const std::string& tiebreak_flag, FanKind kind,
                               unsigned threads, bool timing) {
  IdealFile file = parse_ideal_file(read_file(path));
  Ideal ideal = file.ideal();
  Tiebreak tb = pick_tiebreak(tiebreak_flag, file);
  TermOrder order(ideal.nvars(), tb);
  EnumerationOptions opts;
  opts.threads = threads;

  auto start = std::chrono::steady_clock::now();
  FanGraph fan;
  Ring basis_ring = ideal.ring();
  if (kind == FanKind::Restricted) {
    fan = enumerate_restricted_fan(ideal, order, opts);
  } else {
    Ideal h = homogenize(ideal, order);
    basis_ring = h.ring();
    fan = enumerate_fan(extended_fan_oracle(h, order, opts.groebner), opts);
  }
  std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

  FanDocument doc{ideal, tb, kind, basis_ring, std::move(fan), std::nullopt};
  if (timing) doc.seconds = elapsed.count();
  std::cerr << doc.fan.cones.size() << " cones, " << doc.fan.edges.size() << " edges\n";
  return doc;
}

int cmd_regularity(const std::string& path, const std::string& output) {
  FanDocument doc = parse_fan_document(read_file(path));
  RegularityOutcome outcome = check_regularity(doc.fan);
  write_output(output, to_json(outcome, doc.fan).dump(2) + "\n");
  if (const auto* nr = std::get_if<NonRegular>(&outcome.verdict)) {
    std::cerr << "non-regular: " << nr->forced_edges.size() << " edges forced to zero\n";
    return 2;
  }
  std::cerr << "passes necessary condition\n";
  return 0;
}

int cmd_verify(const std::string& format, const std::string& tiebreak) {
  const CertificateData& data = certificate_data();
  TermOrder order(4, tiebreak.empty() ? Tiebreak::Lex : parse_tiebreak(tiebreak));
  CertificateReport report = run_certificate(data, order);
  if (format == "json") {
    std::cout << report_json(report, data).dump(2) << "\n";
  } else {
    std::cout << report_text(report, data);
  }
  return report.passed() ? 0 : 1;
}

int cmd_classify(const std::string& path, const std::string& weight_text, const std::string& fan_path,
                 const std::string& tiebreak_flag) {
  IdealFile file = parse_ideal_file(read_file(path));
  Ideal ideal = file.ideal();
  RatVector w = parse_vector(weight_text);
  if (w.size() != ideal.nvars()) throw Usage("weight has " + std::to_string(w.size()) + " entries, ring has " +
                                             std::to_string(ideal.nvars()) + " variables");
  IntVector wi = primitive(std::span<const Rational>(w));
  TermOrder order(ideal.nvars(), pick_tiebreak(tiebreak_flag, file));
  MarkedReducedGB gb = gb_for_weight(ideal, std::span<const Rational>(w), order);
  Cone cone = restricted_cone(gb);

  Json j;
  j["weight"] = vector_json(w);
  Json basis = Json::array();
  for (const auto& e : gb.elements()) {
    Json m = Json::array();
    for (std::size_t i = 0; i < e.mark.size(); ++i) m.push_back(e.mark[i]);
    basis.push_back(Json{{"mark", std::move(m)}, {"polynomial", format_polynomial(e.polynomial, ideal.ring())}});
  }
  j["basis"] = std::move(basis);
  Json facets = Json::array();
  for (const auto& a : cone.inequalities()) facets.push_back(vector_json(a));
  j["facets"] = std::move(facets);
  j["membership"] = to_string(contains(cone, std::span<const Integer>(wi)));
  if (!fan_path.empty()) {
    FanDocument doc = parse_fan_document(read_file(fan_path));
    Json hits = Json::array();
    for (auto [k, m] : doc.fan.locate(wi)) hits.push_back(Json{{"id", k + 1}, {"membership", to_string(m)}});
    j["fan_cones"] = std::move(hits);
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Restricted Groebner fans and their regularity"};
  app.require_subcommand(1);
  unsigned threads = 1;
  app.add_option("--threads", threads, "Worker threads for fan enumeration")->check(CLI::Range(1u, 256u));

  std::string input, output, tiebreak, report = "text", weight, fan_path;
  bool timing = false;

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate the restricted Groebner fan of an ideal file");
  enumerate->add_option("file", input, "Ideal file")->required();
  enumerate->add_option("--tiebreak", tiebreak, "lex or revlex");
  enumerate->add_option("-o,--output", output, "Output fan document");
  enumerate->add_flag("--timing", timing, "Record wall time in the document");

  auto* extended = app.add_subcommand("extended", "Slice of the homogenized ideal's fan");
  extended->add_option("file", input, "Ideal file")->required();
  extended->add_option("--tiebreak", tiebreak, "lex or revlex");
  extended->add_option("-o,--output", output, "Output fan document");
  extended->add_flag("--timing", timing, "Record wall time in the document");

  auto* regularity = app.add_subcommand("regularity", "Decide the cycle-flow condition for a fan document");
  regularity->add_option("fan", input, "Fan document")->required();
  regularity->add_option("-o,--output", output, "Output outcome document");

  auto* verify = app.add_subcommand("verify-cert", "Replay the embedded non-regularity certificate");
  verify->alias("verify-paper-cert");
  verify->add_option("--report", report, "json or text")->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--tiebreak", tiebreak, "lex or revlex");

  auto* classify = app.add_subcommand("classify", "Reduced basis and cone of a weight vector");
  classify->add_option("file", input, "Ideal file")->required();
  classify->add_option("--weight", weight, "Comma separated positive weight")->required();
  classify->add_option("--fan", fan_path, "Fan document to locate the weight in");
  classify->add_option("--tiebreak", tiebreak, "lex or revlex");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*enumerate || *extended) {
      FanKind kind = *enumerate ? FanKind::Restricted : FanKind::Extended;
      write_output(output, serialize(enumerate_document(input, tiebreak, kind, threads, timing)));
      return 0;
    }
    if (*regularity) return cmd_regularity(input, output);
    if (*verify) return cmd_verify(report, tiebreak);
    if (*classify) return cmd_classify(input, weight, fan_path, tiebreak);
  } catch (const ParseError& e) {
    std::cerr << "parse error at " << e.position() << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
