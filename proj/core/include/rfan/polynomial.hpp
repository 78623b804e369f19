// Copyright 2026 The rfan Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rfan/rational.hpp"

namespace rfan {

/// Exponent vector of a monomial x^a. Entries are non-negative.
class ExponentVector {
 public:
  using value_type = std::int32_t;

  ExponentVector() = default;
  explicit ExponentVector(std::size_t n) : e_(n, 0) {}
  ExponentVector(std::initializer_list<value_type> entries);
  explicit ExponentVector(std::span<const value_type> entries);

  static ExponentVector unit(std::size_t n, std::size_t i);

  std::size_t size() const { return e_.size(); }
  value_type operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, value_type v);
  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }

  std::int64_t degree() const;
  bool is_zero() const;
  bool divides(const ExponentVector& other) const;
  bool coprime(const ExponentVector& other) const;

  ExponentVector lcm(const ExponentVector& other) const;
  ExponentVector operator+(const ExponentVector& other) const;
  /// Requires other to divide *this.
  ExponentVector operator-(const ExponentVector& other) const;

  /// Difference as a signed integer vector (this - other).
  IntVector difference(const ExponentVector& other) const;
  RatVector as_rational() const;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  /// Plain lexicographic comparison of the entry sequences.
  friend std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b);

 private:
  boost::container::small_vector<value_type, 8> e_;
};

/// Graded lexicographic comparison; the canonical storage order for polynomials.
std::strong_ordering graded_lex(const ExponentVector& a, const ExponentVector& b);

struct Term {
  Rational coefficient;
  ExponentVector exponent;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial over Q. Terms are kept in descending graded-lex order
/// with no zero coefficients, so equal polynomials have equal representations.
class Polynomial {
 public:
  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}
  /// Collects like terms, drops zeros and sorts.
  Polynomial(std::size_t nvars, std::vector<Term> terms);

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial monomial(const ExponentVector& e, const Rational& c = 1);
  static Polynomial variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_homogeneous() const;
  std::int64_t total_degree() const;

  /// Coefficient of x^e, zero if absent.
  Rational coefficient(const ExponentVector& e) const;
  bool contains(const ExponentVector& e) const;
  std::vector<ExponentVector> support() const;

  /// Divides by the coefficient of x^e, which must be present.
  Polynomial monic_at(const ExponentVector& e) const;
  Polynomial mul_term(const Rational& c, const ExponentVector& e) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(const Rational& c) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  static Polynomial from_sorted(std::size_t nvars, std::vector<Term> terms);
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

/// Total order on polynomials used for canonical sorting of bases.
std::strong_ordering canonical_compare(const Polynomial& a, const Polynomial& b);

/// Ordered list of variable names.
struct Ring {
  std::vector<std::string> variables;

  static Ring generic(std::size_t n);
  std::size_t size() const { return variables.size(); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  Ring extended(std::string name) const;

  friend bool operator==(const Ring&, const Ring&) = default;
};

}  // namespace rfan
