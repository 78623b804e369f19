// Copyright 2026 The rfan Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "rfan/polynomial.hpp"

namespace rfan {

/// Order applied after all weight rows tie.
enum class Tiebreak { Lex, RevlexGraded };

std::string_view to_string(Tiebreak tb);
/// Accepts "lex" and "revlex" / "grevlex" / "revlex-graded".
Tiebreak parse_tiebreak(std::string_view name);

/// Matrix monomial order: integer weight rows compared in sequence, then a
/// named tiebreak. Rational rows are scaled to primitive integer rows, which
/// leaves the order unchanged.
class TermOrder {
 public:
  using Row = std::vector<std::int64_t>;

  explicit TermOrder(std::size_t nvars, Tiebreak tiebreak = Tiebreak::Lex);
  TermOrder(std::size_t nvars, std::vector<Row> rows, Tiebreak tiebreak = Tiebreak::Lex);

  static TermOrder lex(std::size_t nvars) { return TermOrder(nvars, Tiebreak::Lex); }
  static TermOrder weighted(std::span<const Rational> weight, Tiebreak tiebreak = Tiebreak::Lex);

  /// New order whose leading rows are `rows` (in order), followed by this order.
  TermOrder refined_by(std::span<const RatVector> rows) const;
  TermOrder refined_by(std::span<const Rational> row) const;
  TermOrder refined_by(std::span<const Integer> row) const;

  std::size_t nvars() const { return nvars_; }
  const std::vector<Row>& rows() const { return rows_; }
  Tiebreak tiebreak() const { return tiebreak_; }

  std::strong_ordering compare(const ExponentVector& a, const ExponentVector& b) const;

  friend bool operator==(const TermOrder&, const TermOrder&) = default;

 private:
  std::size_t nvars_;
  std::vector<Row> rows_;
  Tiebreak tiebreak_;
};

/// Converts a rational row to a primitive int64 row; throws std::overflow_error
/// when an entry does not fit.
TermOrder::Row integer_row(std::span<const Rational> row);

/// Throws std::invalid_argument on dimension mismatch.
std::strong_ordering compare_monomials(const TermOrder& order, const ExponentVector& a,
                                       const ExponentVector& b);

/// Maximal term of f under the order. Throws on the zero polynomial.
Term initial_term(const TermOrder& order, const Polynomial& f);

/// Sum of the terms of f whose exponents maximize <., w>. Throws on zero f.
Polynomial initial_form(std::span<const Rational> w, const Polynomial& f);
Polynomial initial_form(std::span<const Integer> w, const Polynomial& f);

/// True iff 1 < x_i for every variable, i.e. for each column the first row
/// with a nonzero entry there is positive (the tiebreaks satisfy this when no
/// row decides). This is exactly the term-order condition for matrix orders.
bool check_term_order(const TermOrder& order, std::size_t n);

}  // namespace rfan
