// Copyright 2026 The rfan Authors
// SPDX-License-Identifier: Apache-2.0

#include "rfan/polynomial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rfan {

ExponentVector::ExponentVector(std::initializer_list<value_type> entries)
    : ExponentVector(std::span<const value_type>(entries.begin(), entries.size())) {}

ExponentVector::ExponentVector(std::span<const value_type> entries)
    : e_(entries.begin(), entries.end()) {
  for (auto v : e_) {
    if (v < 0) throw std::invalid_argument("negative exponent");
  }
}

ExponentVector ExponentVector::unit(std::size_t n, std::size_t i) {
  ExponentVector e(n);
  e.e_.at(i) = 1;
  return e;
}

void ExponentVector::set(std::size_t i, value_type v) {
  if (v < 0) throw std::invalid_argument("negative exponent");
  e_.at(i) = v;
}

std::int64_t ExponentVector::degree() const {
  std::int64_t d = 0;
  for (auto v : e_) d += v;
  return d;
}

bool ExponentVector::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](value_type v) { return v == 0; });
}

bool ExponentVector::divides(const ExponentVector& other) const {
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] > other.e_[i]) return false;
  }
  return true;
}

bool ExponentVector::coprime(const ExponentVector& other) const {
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] != 0 && other.e_[i] != 0) return false;
  }
  return true;
}

ExponentVector ExponentVector::lcm(const ExponentVector& other) const {
  ExponentVector r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = std::max(e_[i], other.e_[i]);
  return r;
}

ExponentVector ExponentVector::operator+(const ExponentVector& other) const {
  ExponentVector r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += other.e_[i];
  return r;
}

ExponentVector ExponentVector::operator-(const ExponentVector& other) const {
  ExponentVector r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) {
    r.e_[i] -= other.e_[i];
    if (r.e_[i] < 0) throw std::invalid_argument("exponent subtraction: not divisible");
  }
  return r;
}

IntVector ExponentVector::difference(const ExponentVector& other) const {
  IntVector d(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) d[i] = static_cast<long>(e_[i]) - other.e_[i];
  return d;
}

RatVector ExponentVector::as_rational() const {
  RatVector r;
  r.reserve(e_.size());
  for (auto v : e_) r.emplace_back(static_cast<long>(v));
  return r;
}

std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b) {
  return std::lexicographical_compare_three_way(a.e_.begin(), a.e_.end(), b.e_.begin(), b.e_.end());
}

std::strong_ordering graded_lex(const ExponentVector& a, const ExponentVector& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return a <=> b;
}

Polynomial::Polynomial(std::size_t nvars, std::vector<Term> terms) : nvars_(nvars) {
  for (const auto& t : terms) {
    if (t.exponent.size() != nvars) throw std::invalid_argument("term has wrong number of variables");
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return graded_lex(x.exponent, y.exponent) > 0; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().exponent == t.exponent) {
      terms_.back().coefficient += t.coefficient;
      if (terms_.back().coefficient == 0) terms_.pop_back();
    } else if (t.coefficient != 0) {
      terms_.push_back(std::move(t));
    }
  }
}

Polynomial Polynomial::from_sorted(std::size_t nvars, std::vector<Term> terms) {
  Polynomial p(nvars);
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  return monomial(ExponentVector(nvars), c);
}

Polynomial Polynomial::monomial(const ExponentVector& e, const Rational& c) {
  Polynomial p(e.size());
  if (c != 0) p.terms_.push_back({c, e});
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
  return monomial(ExponentVector::unit(nvars, i));
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().exponent.is_zero());
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  auto d = terms_.front().exponent.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const Term& t) { return t.exponent.degree() == d; });
}

std::int64_t Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  return terms_.front().exponent.degree();
}

Rational Polynomial::coefficient(const ExponentVector& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e, [](const Term& t, const ExponentVector& x) {
    return graded_lex(t.exponent, x) > 0;
  });
  if (it != terms_.end() && it->exponent == e) return it->coefficient;
  return 0;
}

bool Polynomial::contains(const ExponentVector& e) const { return coefficient(e) != 0; }

std::vector<ExponentVector> Polynomial::support() const {
  std::vector<ExponentVector> s;
  s.reserve(terms_.size());
  for (const auto& t : terms_) s.push_back(t.exponent);
  return s;
}

Polynomial Polynomial::monic_at(const ExponentVector& e) const {
  Rational c = coefficient(e);
  if (c == 0) throw std::invalid_argument("monic_at: exponent not in support");
  return *this * Rational(1 / c);
}

Polynomial Polynomial::mul_term(const Rational& c, const ExponentVector& e) const {
  if (c == 0) return Polynomial(nvars_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  // Multiplying by a monomial preserves graded-lex order.
  for (const auto& t : terms_) out.push_back({t.coefficient * c, t.exponent + e});
  return from_sorted(nvars_, std::move(out));
}

Polynomial Polynomial::operator-() const { return *this * Rational(-1); }

Polynomial Polynomial::operator+(const Polynomial& other) const {
  if (nvars_ != other.nvars_) throw std::invalid_argument("polynomial ring mismatch");
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto i = terms_.begin();
  auto j = other.terms_.begin();
  while (i != terms_.end() || j != other.terms_.end()) {
    if (j == other.terms_.end()) {
      out.push_back(*i++);
      continue;
    }
    if (i == terms_.end()) {
      out.push_back(*j++);
      continue;
    }
    auto c = graded_lex(i->exponent, j->exponent);
    if (c > 0) {
      out.push_back(*i++);
    } else if (c < 0) {
      out.push_back(*j++);
    } else {
      Rational s = i->coefficient + j->coefficient;
      if (s != 0) out.push_back({s, i->exponent});
      ++i;
      ++j;
    }
  }
  return from_sorted(nvars_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (nvars_ != other.nvars_) throw std::invalid_argument("polynomial ring mismatch");
  Polynomial acc(nvars_);
  for (const auto& t : other.terms_) acc = acc + mul_term(t.coefficient, t.exponent);
  return acc;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (c == 0) return Polynomial(nvars_);
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coefficient *= c;
  return from_sorted(nvars_, std::move(out));
}

std::strong_ordering canonical_compare(const Polynomial& a, const Polynomial& b) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
    if (auto c = graded_lex(x[i].exponent, y[i].exponent); c != 0) return c;
    if (x[i].coefficient != y[i].coefficient) {
      return x[i].coefficient < y[i].coefficient ? std::strong_ordering::less
                                                 : std::strong_ordering::greater;
    }
  }
  return x.size() <=> y.size();
}

Ring Ring::generic(std::size_t n) {
  Ring r;
  for (std::size_t i = 0; i < n; ++i) r.variables.push_back("x" + std::to_string(i + 1));
  return r;
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (variables[i] == name) return i;
  }
  return std::nullopt;
}

Ring Ring::extended(std::string name) const {
  Ring r = *this;
  while (r.index_of(name)) name += "_";
  r.variables.push_back(std::move(name));
  return r;
}

}  // namespace rfan
