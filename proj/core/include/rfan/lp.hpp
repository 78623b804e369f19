// Copyright 2026 The rfan Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <variant>
#include <vector>

#include "rfan/rational.hpp"

namespace rfan {

using RatMatrix = std::vector<RatVector>;

enum class LpStatus { Optimal, Infeasible, Unbounded };

/// Result of an exact simplex solve. For Infeasible, `farkas` is a vector y
/// over the equality rows with y^T A >= 0 and y^T b < 0.
struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  RatVector x;
  Rational objective;
  RatVector farkas;
};

/// minimize c^T x subject to A x = b, x >= 0. Dense two-phase tableau simplex
/// over exact rationals with Bland's rule, so it always terminates.
LpSolution solve_standard_form(const RatMatrix& A, const RatVector& b, const RatVector& c);

enum class Sense { LessEqual, Equal, GreaterEqual };

struct LinearConstraint {
  RatVector coefficients;
  Sense sense = Sense::LessEqual;
  Rational rhs;
};

/// General LP over free or non-negative variables. For Infeasible results the
/// Farkas vector is not translated back and is left empty.
struct LinearProgram {
  std::size_t nvars = 0;
  std::vector<bool> nonnegative;  // empty means all free
  std::vector<LinearConstraint> constraints;
  RatVector objective;  // empty means pure feasibility
  bool maximize = true;

  void add(RatVector coefficients, Sense sense, Rational rhs = 0);
};

LpSolution solve(const LinearProgram& lp);

struct StrictlyFeasible {
  RatVector s;  // A s = 0 and every entry >= 1
};
struct StrictlyInfeasible {
  RatVector y;  // y^T A >= 0 and y^T A != 0
};
using StrictFeasibility = std::variant<StrictlyFeasible, StrictlyInfeasible>;

/// Decides whether {A s = 0, s > 0} has a solution. Strictness is handled by
/// the substitution s = 1 + z, z >= 0; the phase-one dual of an infeasible
/// run is the certificate of the alternative.
StrictFeasibility lp_feasible_strict(const RatMatrix& A, std::size_t columns);

/// Replays a certificate: y^T A >= 0 componentwise and not identically zero.
bool is_farkas_certificate(const RatMatrix& A, std::span<const Rational> y);

/// Indices of a maximal set of linearly independent rows (first-come order).
std::vector<std::size_t> independent_rows(const RatMatrix& A);

RatVector multiply(const RatMatrix& A, std::span<const Rational> x);
RatVector left_multiply(std::span<const Rational> y, const RatMatrix& A, std::size_t columns);

}  // namespace rfan
