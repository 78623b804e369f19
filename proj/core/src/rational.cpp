// Copyright 2026 The rfan Authors
// SPDX-License-Identifier: Apache-2.0

#include "rfan/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace rfan {

namespace {

bool valid_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  if (!valid_integer_literal(text)) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  if (text.front() == '+') text.remove_prefix(1);
  return Integer(std::string(text), 10);
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw std::invalid_argument("sign in denominator: '" + std::string(text) + "'");
  }
  Integer den = parse_integer(den_text);
  if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }
std::string to_string(const Integer& z) { return z.get_str(10); }

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(std::span<const Integer> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVector primitive(std::span<const Rational> v) {
  Integer den = 1;
  for (const auto& q : v) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  }
  IntVector out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(Integer(q * den));
  return primitive(std::span<const Integer>(out));
}

IntVector primitive(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& z : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
  IntVector out(v.begin(), v.end());
  if (g > 1) {
    for (auto& z : out) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), g.get_mpz_t());
  }
  return out;
}

RatVector to_rational(std::span<const Integer> v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& z : v) out.emplace_back(z);
  return out;
}

bool is_zero(std::span<const Integer> v) {
  for (const auto& z : v) {
    if (z != 0) return false;
  }
  return true;
}

bool is_zero(std::span<const Rational> v) {
  for (const auto& q : v) {
    if (q != 0) return false;
  }
  return true;
}

bool positively_parallel(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size() || is_zero(a) || is_zero(b)) return false;
  return primitive(a) == primitive(b);
}

IntVector negated(std::span<const Integer> v) {
  IntVector out;
  out.reserve(v.size());
  for (const auto& z : v) out.push_back(-z);
  return out;
}

}  // namespace rfan
