// Copyright 2026 The rfan Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rfan/groebner.hpp"
#include "rfan/polynomial.hpp"
#include "rfan/term_order.hpp"

namespace rfan {

/// Syntax error with the byte offset where it was detected.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses text such as `3/2*a^2*c - a*b + 1` over the given ring. The `*`
/// between a coefficient and the following variable may be omitted.
Polynomial parse_polynomial(std::string_view text, const Ring& ring);

/// Canonical text form; parse_polynomial(format_polynomial(p)) == p.
std::string format_polynomial(const Polynomial& p, const Ring& ring);

/// Contents of an ideal file:
///
///   # comment
///   ring a,b,c,d;
///   ideal a*c*d + a^2*c - a*b, a*d^2 - c, a*d^4 + a*c;
///   tiebreak lex;          (optional)
struct IdealFile {
  Ring ring;
  std::vector<Polynomial> generators;
  std::optional<Tiebreak> tiebreak;

  Ideal ideal() const { return Ideal(ring, generators); }
};

IdealFile parse_ideal_file(std::string_view text);
Ideal parse_ideal(std::string_view text);
std::string format_ideal_file(const Ideal& ideal, std::optional<Tiebreak> tiebreak = std::nullopt);

std::string format_vector(std::span<const Integer> v);
std::string format_vector(std::span<const Rational> v);
/// Comma separated rationals, e.g. "10,1,2,6" or "1/2,3".
RatVector parse_vector(std::string_view text);

std::string read_file(const std::string& path);

}  // namespace rfan
