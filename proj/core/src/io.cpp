// Copyright 2026 The rfan Authors
// SPDX-License-Identifier: Apache-2.0

#include "rfan/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace rfan {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " (at offset " + std::to_string(position) + ")"), position_(position) {}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Lexer {
 public:
  explicit Lexer(std::string_view text, std::size_t base = 0) : text_(text), base_(base) {}

  void skip() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  bool eof() {
    skip();
    return pos_ >= text_.size();
  }

  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string identifier() {
    if (!ident_start(peek())) fail("expected identifier");
    std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string digits() {
    if (!digit(peek())) fail("expected number");
    std::size_t start = pos_;
    while (pos_ < text_.size() && digit(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, base_ + pos_); }

  std::size_t position() const { return base_ + pos_; }

 private:
  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

Rational parse_number(Lexer& lex) {
  Integer num(lex.digits(), 10);
  if (lex.accept('/')) {
    Integer den(lex.digits(), 10);
    if (den == 0) lex.fail("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  return Rational(num);
}

Term parse_term(Lexer& lex, const Ring& ring) {
  Term t{Rational(1), ExponentVector(ring.size())};
  bool first = true;
  while (true) {
    char c = lex.peek();
    if (digit(c)) {
      t.coefficient *= parse_number(lex);
      // Implicit product between a number and a variable.
      if (ident_start(lex.peek())) continue;
    } else if (ident_start(c)) {
      auto pos = lex.position();
      std::string name = lex.identifier();
      auto idx = ring.index_of(name);
      if (!idx) throw ParseError("unknown variable '" + name + "'", pos);
      long power = 1;
      if (lex.accept('^')) {
        auto d = lex.digits();
        if (d.size() > 9) lex.fail("exponent too large");
        power = std::stol(d);
      }
      t.exponent.set(*idx, static_cast<ExponentVector::value_type>(t.exponent[*idx] + power));
    } else {
      lex.fail(first ? "expected term" : "expected factor after '*'");
    }
    first = false;
    if (!lex.accept('*')) break;
  }
  return t;
}

Polynomial parse_polynomial(Lexer& lex, const Ring& ring) {
  std::vector<Term> terms;
  bool negative = false;
  if (lex.accept('-')) {
    negative = true;
  } else {
    lex.accept('+');
  }
  while (true) {
    Term t = parse_term(lex, ring);
    if (negative) t.coefficient = -t.coefficient;
    terms.push_back(std::move(t));
    if (lex.accept('+')) {
      negative = false;
    } else if (lex.accept('-')) {
      negative = true;
    } else {
      break;
    }
  }
  return Polynomial(ring.size(), std::move(terms));
}

std::string format_monomial(const ExponentVector& e, const Ring& ring) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.variables[i];
    if (e[i] > 1) out += '^' + std::to_string(e[i]);
  }
  return out;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Ring& ring) {
  Lexer lex(text);
  Polynomial p = parse_polynomial(lex, ring);
  if (!lex.eof()) lex.fail("unexpected trailing input");
  return p;
}

std::string format_polynomial(const Polynomial& p, const Ring& ring) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.coefficient;
    if (first) {
      if (c < 0) {
        out += '-';
        c = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    first = false;
    std::string mono = format_monomial(t.exponent, ring);
    if (mono.empty()) {
      out += to_string(c);
    } else if (c == 1) {
      out += mono;
    } else {
      out += to_string(c) + "*" + mono;
    }
  }
  return out;
}

IdealFile parse_ideal_file(std::string_view text) {
  Lexer lex(text);
  IdealFile file;
  bool have_ring = false;
  bool have_ideal = false;
  while (!lex.eof()) {
    auto pos = lex.position();
    std::string keyword = lex.identifier();
    if (keyword == "ring") {
      if (have_ring) throw ParseError("duplicate ring declaration", pos);
      do {
        auto vpos = lex.position();
        std::string name = lex.identifier();
        if (file.ring.index_of(name)) throw ParseError("duplicate variable '" + name + "'", vpos);
        file.ring.variables.push_back(std::move(name));
      } while (lex.accept(','));
      lex.expect(';');
      have_ring = true;
    } else if (keyword == "ideal") {
      if (!have_ring) throw ParseError("ideal declared before ring", pos);
      if (have_ideal) throw ParseError("duplicate ideal declaration", pos);
      do {
        auto gpos = lex.position();
        Polynomial g = parse_polynomial(lex, file.ring);
        if (g.is_zero()) throw ParseError("zero generator", gpos);
        file.generators.push_back(std::move(g));
      } while (lex.accept(','));
      lex.expect(';');
      have_ideal = true;
    } else if (keyword == "tiebreak") {
      auto tpos = lex.position();
      std::string name = lex.identifier();
      try {
        file.tiebreak = parse_tiebreak(name);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), tpos);
      }
      lex.expect(';');
    } else {
      throw ParseError("unknown statement '" + keyword + "'", pos);
    }
  }
  if (!have_ring) throw ParseError("missing ring declaration", lex.position());
  if (!have_ideal) throw ParseError("missing ideal declaration", lex.position());
  return file;
}

Ideal parse_ideal(std::string_view text) { return parse_ideal_file(text).ideal(); }

std::string format_ideal_file(const Ideal& ideal, std::optional<Tiebreak> tiebreak) {
  std::string out = "ring ";
  for (std::size_t i = 0; i < ideal.ring().size(); ++i) {
    out += (i ? "," : "") + ideal.ring().variables[i];
  }
  out += ";\nideal ";
  for (std::size_t i = 0; i < ideal.generators().size(); ++i) {
    if (i) out += ",\n      ";
    out += format_polynomial(ideal.generators()[i], ideal.ring());
  }
  out += ";\n";
  if (tiebreak) out += "tiebreak " + std::string(to_string(*tiebreak)) + ";\n";
  return out;
}

std::string format_vector(std::span<const Integer> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v[i]);
  return out + ")";
}

std::string format_vector(std::span<const Rational> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v[i]);
  return out + ")";
}

RatVector parse_vector(std::string_view text) {
  RatVector out;
  if (!text.empty() && text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.front()))) piece.remove_prefix(1);
    while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.back()))) piece.remove_suffix(1);
    out.push_back(parse_rational(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace rfan
