// Copyright 2026 The rfan Authors
// SPDX-License-Identifier: Apache-2.0

#include "rfan/cone.hpp"

#include <algorithm>
#include <stdexcept>

namespace rfan {

const char* to_string(Membership m) {
  switch (m) {
    case Membership::Interior:
      return "interior";
    case Membership::Boundary:
      return "boundary";
    case Membership::Outside:
      return "outside";
  }
  return "outside";
}

namespace {

struct EchelonBasis {
  std::vector<IntVector> rows;  // primitive multiples of the reduced echelon rows
  std::vector<std::size_t> pivots;
};

EchelonBasis echelon(std::span<const IntVector> input, std::size_t n) {
  std::vector<RatVector> rows;
  for (const auto& r : input) rows.push_back(to_rational(r));
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t sel = rank;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    Rational inv = 1 / rows[rank][col];
    for (auto& v : rows[rank]) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      Rational f = rows[i][col];
      for (std::size_t j = 0; j < n; ++j) rows[i][j] -= f * rows[rank][j];
    }
    pivots.push_back(col);
    ++rank;
  }
  EchelonBasis out;
  for (std::size_t i = 0; i < rank; ++i) out.rows.push_back(primitive(std::span<const Rational>(rows[i])));
  out.pivots = std::move(pivots);
  return out;
}

// Representative of a + span(basis) with zeros in the pivot columns.
IntVector reduce_modulo(std::span<const Integer> a, const EchelonBasis& basis) {
  RatVector v = to_rational(a);
  for (std::size_t k = 0; k < basis.rows.size(); ++k) {
    const std::size_t p = basis.pivots[k];
    if (v[p] == 0) continue;
    Rational f = v[p] / basis.rows[k][p];
    for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * basis.rows[k][j];
  }
  return primitive(std::span<const Rational>(v));
}

void check_dims(std::size_t n, std::span<const IntVector> rows) {
  for (const auto& r : rows) {
    if (r.size() != n) throw std::invalid_argument("cone constraint has wrong dimension");
  }
}

}  // namespace

bool in_cone_plus_span(std::span<const IntVector> generators, std::span<const IntVector> lineality,
                       std::span<const Integer> target) {
  const std::size_t n = target.size();
  LinearProgram lp;
  lp.nvars = generators.size() + lineality.size();
  lp.nonnegative.assign(lp.nvars, false);
  for (std::size_t k = 0; k < generators.size(); ++k) lp.nonnegative[k] = true;
  for (std::size_t i = 0; i < n; ++i) {
    RatVector row(lp.nvars);
    for (std::size_t k = 0; k < generators.size(); ++k) row[k] = generators[k][i];
    for (std::size_t k = 0; k < lineality.size(); ++k) row[generators.size() + k] = lineality[k][i];
    lp.add(std::move(row), Sense::Equal, Rational(target[i]));
  }
  return solve(lp).status == LpStatus::Optimal;
}

Cone::Cone(std::size_t ambient_dim, std::vector<IntVector> equalities, std::vector<IntVector> inequalities)
    : n_(ambient_dim), equalities_(std::move(equalities)), inequalities_(std::move(inequalities)) {
  check_dims(n_, equalities_);
  check_dims(n_, inequalities_);
}

Cone Cone::full_space(std::size_t n) {
  Cone c(n, {}, {});
  c.canonical_ = true;
  return c;
}

Cone Cone::orthant(std::size_t n) {
  std::vector<IntVector> ineq;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector a(n);
    a[i] = -1;
    ineq.push_back(std::move(a));
  }
  return Cone(n, {}, std::move(ineq)).canonical();
}

Cone Cone::canonical() const {
  if (canonical_) return *this;

  std::vector<IntVector> ineq;
  for (const auto& a : inequalities_) {
    if (is_zero(a)) continue;
    ineq.push_back(primitive(std::span<const Integer>(a)));
  }
  std::sort(ineq.begin(), ineq.end());
  ineq.erase(std::unique(ineq.begin(), ineq.end()), ineq.end());

  // a is an implicit equality iff -a lies in cone(ineq) + span(equalities).
  std::vector<IntVector> eq;
  for (const auto& e : equalities_) {
    if (!is_zero(e)) eq.push_back(e);
  }
  std::vector<IntVector> loose;
  std::vector<IntVector> tight;
  for (const auto& a : ineq) {
    if (in_cone_plus_span(ineq, eq, negated(a))) {
      tight.push_back(a);
    } else {
      loose.push_back(a);
    }
  }
  eq.insert(eq.end(), tight.begin(), tight.end());
  EchelonBasis basis = echelon(eq, n_);

  std::vector<IntVector> reduced;
  for (const auto& a : loose) reduced.push_back(reduce_modulo(a, basis));
  std::sort(reduced.begin(), reduced.end());
  reduced.erase(std::unique(reduced.begin(), reduced.end()), reduced.end());

  // Drop inequalities implied by the remaining ones.
  std::vector<bool> alive(reduced.size(), true);
  for (std::size_t k = 0; k < reduced.size(); ++k) {
    std::vector<IntVector> others;
    for (std::size_t j = 0; j < reduced.size(); ++j) {
      if (j != k && alive[j]) others.push_back(reduced[j]);
    }
    if (in_cone_plus_span(others, basis.rows, reduced[k])) alive[k] = false;
  }
  std::vector<IntVector> facet_list;
  for (std::size_t k = 0; k < reduced.size(); ++k) {
    if (alive[k]) facet_list.push_back(reduced[k]);
  }

  Cone out(n_, std::move(basis.rows), std::move(facet_list));
  out.canonical_ = true;
  return out;
}

std::size_t Cone::dimension() const {
  Cone c = canonical();
  return n_ - c.equalities_.size();
}

Cone Cone::intersect(const Cone& other) const {
  if (other.n_ != n_) throw std::invalid_argument("cone intersection: dimension mismatch");
  auto eq = equalities_;
  eq.insert(eq.end(), other.equalities_.begin(), other.equalities_.end());
  auto ineq = inequalities_;
  ineq.insert(ineq.end(), other.inequalities_.begin(), other.inequalities_.end());
  return Cone(n_, std::move(eq), std::move(ineq));
}

Cone Cone::with_equality(IntVector e) const {
  auto eq = equalities_;
  eq.push_back(std::move(e));
  return Cone(n_, std::move(eq), inequalities_);
}

Cone Cone::with_inequality(IntVector a) const {
  auto ineq = inequalities_;
  ineq.push_back(std::move(a));
  return Cone(n_, equalities_, std::move(ineq));
}

bool operator==(const Cone& a, const Cone& b) {
  if (a.n_ != b.n_) return false;
  Cone ca = a.canonical();
  Cone cb = b.canonical();
  return ca.equalities_ == cb.equalities_ && ca.inequalities_ == cb.inequalities_;
}

std::vector<IntVector> facets(const Cone& c) {
  Cone cc = c.canonical();
  if (cc.equalities().size() == cc.ambient_dim()) throw std::domain_error("facets: cone is {0}");
  return cc.inequalities();
}

Cone facet_cone(const Cone& c, const IntVector& facet) { return c.with_equality(facet); }

bool meets_open_orthant(const Cone& c) {
  const std::size_t n = c.ambient_dim();
  LinearProgram lp;
  lp.nvars = n;
  for (const auto& e : c.equalities()) lp.add(to_rational(e), Sense::Equal);
  for (const auto& a : c.inequalities()) lp.add(to_rational(a), Sense::LessEqual);
  for (std::size_t i = 0; i < n; ++i) {
    RatVector row(n);
    row[i] = 1;
    lp.add(std::move(row), Sense::GreaterEqual, Rational(1));
  }
  return solve(lp).status == LpStatus::Optimal;
}

IntVector relative_interior_point(const Cone& c) {
  const std::size_t n = c.ambient_dim();
  Cone cc = meets_open_orthant(c) ? c.intersect(Cone::orthant(n)).canonical() : c.canonical();
  RatVector sum(n);
  for (std::size_t k = 0; k < cc.inequalities().size(); ++k) {
    LinearProgram lp;
    lp.nvars = n;
    for (const auto& e : cc.equalities()) lp.add(to_rational(e), Sense::Equal);
    for (std::size_t j = 0; j < cc.inequalities().size(); ++j) {
      lp.add(to_rational(cc.inequalities()[j]), Sense::LessEqual, Rational(j == k ? -1 : 0));
    }
    LpSolution sol = solve(lp);
    if (sol.status != LpStatus::Optimal) throw std::logic_error("relative_interior_point: facet LP failed");
    for (std::size_t i = 0; i < n; ++i) sum[i] += sol.x[i];
  }
  return primitive(std::span<const Rational>(sum));
}

Membership contains(const Cone& c, std::span<const Rational> w) {
  if (w.size() != c.ambient_dim()) throw std::invalid_argument("contains: dimension mismatch");
  Cone cc = c.canonical();
  for (const auto& e : cc.equalities()) {
    if (dot(std::span<const Integer>(e), w) != 0) return Membership::Outside;
  }
  bool boundary = false;
  for (const auto& a : cc.inequalities()) {
    Rational v = dot(std::span<const Integer>(a), w);
    if (v > 0) return Membership::Outside;
    if (v == 0) boundary = true;
  }
  return boundary ? Membership::Boundary : Membership::Interior;
}

Membership contains(const Cone& c, std::span<const Integer> w) {
  RatVector r = to_rational(w);
  return contains(c, std::span<const Rational>(r));
}

bool implies(const Cone& c, std::span<const Integer> a) {
  if (a.size() != c.ambient_dim()) throw std::invalid_argument("implies: dimension mismatch");
  Cone cc = c.canonical();
  return in_cone_plus_span(cc.inequalities(), cc.equalities(), a);
}

Cone common_refinement(const Cone& a, const Cone& b) { return a.intersect(b); }

std::vector<Cone> refine_with_orthant(std::span<const Cone> cones) {
  std::vector<Cone> out;
  for (const auto& c : cones) {
    Cone r = c.intersect(Cone::orthant(c.ambient_dim())).canonical();
    if (r.dimension() == c.ambient_dim()) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace rfan
