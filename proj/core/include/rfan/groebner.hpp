// Copyright 2026 The rfan Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rfan/polynomial.hpp"
#include "rfan/term_order.hpp"

namespace rfan {

/// Ideal given by a non-empty list of nonzero generators in a named ring.
class Ideal {
 public:
  Ideal(Ring ring, std::vector<Polynomial> generators);

  const Ring& ring() const { return ring_; }
  std::size_t nvars() const { return ring_.size(); }
  const std::vector<Polynomial>& generators() const { return generators_; }

 private:
  Ring ring_;
  std::vector<Polynomial> generators_;
};

/// A polynomial together with its distinguished (initial) exponent.
struct MarkedPolynomial {
  ExponentVector mark;
  Polynomial polynomial;

  friend bool operator==(const MarkedPolynomial&, const MarkedPolynomial&) = default;
};

/// Reduced Groebner basis with marked initial exponents. Elements are sorted
/// by mark, so two bases of the same ideal and initial ideal compare equal.
/// key() is a canonical serialization used for ordering and deduplication.
class MarkedReducedGB {
 public:
  MarkedReducedGB() = default;
  /// Sorts the elements; each must be monic at its mark.
  explicit MarkedReducedGB(std::vector<MarkedPolynomial> elements);

  const std::vector<MarkedPolynomial>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  std::size_t nvars() const;
  std::vector<Polynomial> polynomials() const;
  std::vector<ExponentVector> marks() const;
  const std::string& key() const { return key_; }

  /// Monic at marks, marks pairwise non-dividing, no mark divides any other
  /// monomial of the basis.
  bool is_reduced() const;

  friend bool operator==(const MarkedReducedGB& a, const MarkedReducedGB& b) { return a.key_ == b.key_; }
  friend std::strong_ordering operator<=>(const MarkedReducedGB& a, const MarkedReducedGB& b) {
    return a.key_ <=> b.key_;
  }

 private:
  std::vector<MarkedPolynomial> elements_;
  std::string key_;
};

/// Raised when a Groebner basis computation exceeds its work limits, which is
/// what happens for orders that are not term orders.
class NonTermination : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BuchbergerOptions {
  std::size_t max_pairs = 200000;
  std::size_t max_reduction_steps = 5000000;
};

/// Full reduction of f by marked polynomials (each monic at its mark). The
/// term chosen for reduction is the largest under `order`; marks should be
/// the order's initial exponents.
Polynomial normal_form(const Polynomial& f, std::span<const MarkedPolynomial> basis, const TermOrder& order,
                       const BuchbergerOptions& options = {});

/// Reduction that uses only the marks. Terminates whenever the marking is
/// induced by some term order; otherwise the step limit raises NonTermination.
Polynomial normal_form(const Polynomial& f, std::span<const MarkedPolynomial> basis,
                       const BuchbergerOptions& options = {});

Polynomial s_polynomial(const MarkedPolynomial& f, const MarkedPolynomial& g);

MarkedReducedGB buchberger(const Ideal& ideal, const TermOrder& order, const BuchbergerOptions& options = {});
MarkedReducedGB buchberger(std::span<const Polynomial> generators, const TermOrder& order,
                           const BuchbergerOptions& options = {});

/// Reduced basis for the order (w, tiebreak). w must be strictly positive.
MarkedReducedGB gb_for_weight(const Ideal& ideal, std::span<const Rational> w, const TermOrder& tiebreak,
                              const BuchbergerOptions& options = {});
MarkedReducedGB gb_for_weight(const Ideal& ideal, std::span<const Integer> w, const TermOrder& tiebreak,
                              const BuchbergerOptions& options = {});

/// The monomial ideal generated by the marks.
Ideal initial_ideal(const MarkedReducedGB& gb, const Ring& ring);

/// Generators {in_w(g)} of in_w(I), g ranging over gb_for_weight(I, w, tiebreak).
std::vector<Polynomial> initial_forms_ideal(const Ideal& ideal, std::span<const Rational> w,
                                            const TermOrder& tiebreak);

/// Homogenization with a new last variable (named `variable`, default "e"):
/// a degree-compatible reduced basis is computed and each element homogenized.
Ideal homogenize(const Ideal& ideal, const TermOrder& order, std::string variable = "e");

/// Every S-polynomial of the basis reduces to zero.
bool is_groebner_basis(std::span<const MarkedPolynomial> basis, const TermOrder& order);

bool ideal_contains(const MarkedReducedGB& gb, const TermOrder& order, const Polynomial& f);

/// Mutual containment: each generator of either ideal reduces to zero modulo
/// a Groebner basis of the other.
bool same_ideal(const Ideal& a, const Ideal& b, const TermOrder& order);

}  // namespace rfan
