// Copyright 2026 The rfan Authors
// SPDX-License-Identifier: Apache-2.0

#include "rfan/term_order.hpp"

#include <stdexcept>
#include <string>

namespace rfan {

std::string_view to_string(Tiebreak tb) {
  switch (tb) {
    case Tiebreak::Lex:
      return "lex";
    case Tiebreak::RevlexGraded:
      return "revlex";
  }
  return "lex";
}

Tiebreak parse_tiebreak(std::string_view name) {
  if (name == "lex") return Tiebreak::Lex;
  if (name == "revlex" || name == "grevlex" || name == "revlex-graded") return Tiebreak::RevlexGraded;
  throw std::invalid_argument("unknown tiebreak '" + std::string(name) + "'");
}

TermOrder::TermOrder(std::size_t nvars, Tiebreak tiebreak) : nvars_(nvars), tiebreak_(tiebreak) {}

TermOrder::TermOrder(std::size_t nvars, std::vector<Row> rows, Tiebreak tiebreak)
    : nvars_(nvars), rows_(std::move(rows)), tiebreak_(tiebreak) {
  for (const auto& r : rows_) {
    if (r.size() != nvars_) throw std::invalid_argument("order row has wrong length");
  }
}

TermOrder::Row integer_row(std::span<const Rational> row) {
  IntVector p = primitive(row);
  TermOrder::Row out;
  out.reserve(p.size());
  for (const auto& z : p) {
    if (!z.fits_slong_p()) throw std::overflow_error("weight row entry exceeds 64 bits");
    out.push_back(z.get_si());
  }
  return out;
}

TermOrder TermOrder::weighted(std::span<const Rational> weight, Tiebreak tiebreak) {
  return TermOrder(weight.size(), {integer_row(weight)}, tiebreak);
}

TermOrder TermOrder::refined_by(std::span<const RatVector> rows) const {
  std::vector<Row> out;
  out.reserve(rows.size() + rows_.size());
  for (const auto& r : rows) {
    if (r.size() != nvars_) throw std::invalid_argument("order row has wrong length");
    out.push_back(integer_row(r));
  }
  out.insert(out.end(), rows_.begin(), rows_.end());
  return TermOrder(nvars_, std::move(out), tiebreak_);
}

TermOrder TermOrder::refined_by(std::span<const Rational> row) const {
  RatVector r(row.begin(), row.end());
  return refined_by(std::span<const RatVector>(&r, 1));
}

TermOrder TermOrder::refined_by(std::span<const Integer> row) const {
  RatVector r = to_rational(row);
  return refined_by(std::span<const RatVector>(&r, 1));
}

std::strong_ordering TermOrder::compare(const ExponentVector& a, const ExponentVector& b) const {
  for (const auto& r : rows_) {
    __int128 s = 0;
    for (std::size_t i = 0; i < nvars_; ++i) {
      s += static_cast<__int128>(r[i]) * (static_cast<std::int64_t>(a[i]) - b[i]);
    }
    if (s > 0) return std::strong_ordering::greater;
    if (s < 0) return std::strong_ordering::less;
  }
  if (tiebreak_ == Tiebreak::Lex) return a <=> b;
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t i = nvars_; i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare_monomials(const TermOrder& order, const ExponentVector& a,
                                       const ExponentVector& b) {
  if (a.size() != order.nvars() || b.size() != order.nvars()) {
    throw std::invalid_argument("compare_monomials: dimension mismatch");
  }
  return order.compare(a, b);
}

Term initial_term(const TermOrder& order, const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("initial_term of zero polynomial");
  if (f.nvars() != order.nvars()) throw std::invalid_argument("initial_term: dimension mismatch");
  const Term* best = &f.terms().front();
  for (const auto& t : f.terms()) {
    if (order.compare(t.exponent, best->exponent) > 0) best = &t;
  }
  return *best;
}

Polynomial initial_form(std::span<const Rational> w, const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("initial_form of zero polynomial");
  if (w.size() != f.nvars()) throw std::invalid_argument("initial_form: dimension mismatch");
  std::vector<Rational> values;
  values.reserve(f.size());
  for (const auto& t : f.terms()) values.push_back(dot(w, t.exponent.as_rational()));
  Rational best = values.front();
  for (const auto& v : values) {
    if (v > best) best = v;
  }
  std::vector<Term> kept;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == best) kept.push_back(f.terms()[i]);
  }
  return Polynomial(f.nvars(), std::move(kept));
}

Polynomial initial_form(std::span<const Integer> w, const Polynomial& f) {
  RatVector r = to_rational(w);
  return initial_form(std::span<const Rational>(r), f);
}

bool check_term_order(const TermOrder& order, std::size_t n) {
  if (order.nvars() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& r : order.rows()) {
      if (r[i] > 0) break;
      if (r[i] < 0) return false;
    }
  }
  return true;
}

}  // namespace rfan
