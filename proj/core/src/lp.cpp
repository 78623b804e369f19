// Copyright 2026 The rfan Authors
// SPDX-License-Identifier: Apache-2.0

#include "rfan/lp.hpp"

#include <stdexcept>

namespace rfan {

namespace {

// Dense simplex tableau. Row i reads  sum_j rows[i][j] x_j = rhs[i]  with
// basic variable basis[i]; cost holds reduced costs and cost_rhs = -objective.
class Tableau {
 public:
  Tableau(std::size_t m, std::size_t ncols) : rows(m, RatVector(ncols)), rhs(m), basis(m), cost(ncols) {}

  std::vector<RatVector> rows;
  RatVector rhs;
  std::vector<std::size_t> basis;
  RatVector cost;
  Rational cost_rhs;

  void pivot(std::size_t r, std::size_t col) {
    RatVector& prow = rows[r];
    if (prow[col] != 1) {
      Rational inv = 1 / prow[col];
      for (auto& v : prow) {
        if (v != 0) v *= inv;
      }
      rhs[r] *= inv;
    }
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j < prow.size(); ++j) {
      if (prow[j] != 0) nz.push_back(j);
    }
    Rational f;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      f = rows[i][col];
      auto& row = rows[i];
      for (std::size_t j : nz) row[j] -= f * prow[j];
      rhs[i] -= f * rhs[r];
    }
    if (cost[col] != 0) {
      f = cost[col];
      for (std::size_t j : nz) cost[j] -= f * prow[j];
      cost_rhs -= f * rhs[r];
    }
    basis[r] = col;
  }

  // Bland's rule over columns [0, allowed). Returns false when unbounded.
  bool run(std::size_t allowed) {
    while (true) {
      std::size_t col = allowed;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (cost[j] < 0) {
          col = j;
          break;
        }
      }
      if (col == allowed) return true;
      std::size_t best = rows.size();
      Rational best_ratio;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][col] <= 0) continue;
        Rational ratio = rhs[i] / rows[i][col];
        if (best == rows.size() || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[best])) {
          best = i;
          best_ratio = std::move(ratio);
        }
      }
      if (best == rows.size()) return false;
      pivot(best, col);
    }
  }
};

}  // namespace

LpSolution solve_standard_form(const RatMatrix& A, const RatVector& b, const RatVector& c) {
  const std::size_t m = A.size();
  const std::size_t n = c.size();
  if (b.size() != m) throw std::invalid_argument("solve_standard_form: rhs size mismatch");
  for (const auto& row : A) {
    if (row.size() != n) throw std::invalid_argument("solve_standard_form: row size mismatch");
  }

  Tableau t(m, n + m);
  std::vector<int> sign(m, 1);
  for (std::size_t i = 0; i < m; ++i) {
    if (b[i] < 0) sign[i] = -1;
    for (std::size_t j = 0; j < n; ++j) {
      if (A[i][j] != 0) t.rows[i][j] = sign[i] < 0 ? Rational(-A[i][j]) : A[i][j];
    }
    t.rows[i][n + i] = 1;
    t.rhs[i] = sign[i] < 0 ? Rational(-b[i]) : b[i];
    t.basis[i] = n + i;
  }

  // Phase one: minimize the sum of artificials.
  for (std::size_t j = 0; j < n; ++j) {
    Rational s = 0;
    for (std::size_t i = 0; i < m; ++i) s += t.rows[i][j];
    t.cost[j] = -s;
  }
  t.cost_rhs = 0;
  for (std::size_t i = 0; i < m; ++i) t.cost_rhs -= t.rhs[i];
  t.run(n + m);

  LpSolution out;
  if (t.cost_rhs != 0) {
    // Duals pi_i = 1 - reduced cost of artificial i; y = -pi in original row signs.
    out.status = LpStatus::Infeasible;
    out.farkas.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      Rational pi = 1 - t.cost[n + i];
      out.farkas[i] = sign[i] < 0 ? pi : Rational(-pi);
    }
    return out;
  }

  // Drive remaining (zero-level) artificials out where possible.
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basis[i] < n) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (t.rows[i][j] != 0) {
        t.pivot(i, j);
        break;
      }
    }
  }

  // Phase two.
  for (std::size_t j = 0; j < n + m; ++j) {
    Rational s = j < n ? c[j] : Rational(0);
    for (std::size_t i = 0; i < m; ++i) {
      if (t.basis[i] < n && c[t.basis[i]] != 0) s -= c[t.basis[i]] * t.rows[i][j];
    }
    t.cost[j] = s;
  }
  t.cost_rhs = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basis[i] < n) t.cost_rhs -= c[t.basis[i]] * t.rhs[i];
  }
  if (!t.run(n)) {
    out.status = LpStatus::Unbounded;
    return out;
  }
  out.status = LpStatus::Optimal;
  out.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basis[i] < n) out.x[t.basis[i]] = t.rhs[i];
  }
  out.objective = -t.cost_rhs;
  return out;
}

void LinearProgram::add(RatVector coefficients, Sense sense, Rational rhs) {
  if (coefficients.size() != nvars) throw std::invalid_argument("LinearProgram: constraint size mismatch");
  constraints.push_back({std::move(coefficients), sense, std::move(rhs)});
}

LpSolution solve(const LinearProgram& lp) {
  const std::size_t nv = lp.nvars;
  if (!lp.nonnegative.empty() && lp.nonnegative.size() != nv) {
    throw std::invalid_argument("LinearProgram: sign vector size mismatch");
  }
  // Column layout: one column per non-negative variable, two per free one,
  // then one slack per inequality.
  std::vector<std::size_t> pos(nv), neg(nv, SIZE_MAX);
  std::size_t cols = 0;
  for (std::size_t k = 0; k < nv; ++k) {
    pos[k] = cols++;
    if (lp.nonnegative.empty() || !lp.nonnegative[k]) neg[k] = cols++;
  }
  std::size_t first_slack = cols;
  for (const auto& con : lp.constraints) {
    if (con.sense != Sense::Equal) ++cols;
  }

  RatMatrix A;
  RatVector b;
  std::size_t slack = first_slack;
  for (const auto& con : lp.constraints) {
    RatVector row(cols);
    for (std::size_t k = 0; k < nv; ++k) {
      row[pos[k]] = con.coefficients[k];
      if (neg[k] != SIZE_MAX) row[neg[k]] = -con.coefficients[k];
    }
    if (con.sense == Sense::LessEqual) row[slack++] = 1;
    if (con.sense == Sense::GreaterEqual) row[slack++] = -1;
    A.push_back(std::move(row));
    b.push_back(con.rhs);
  }
  RatVector c(cols);
  if (!lp.objective.empty()) {
    if (lp.objective.size() != nv) throw std::invalid_argument("LinearProgram: objective size mismatch");
    for (std::size_t k = 0; k < nv; ++k) {
      Rational v = lp.maximize ? Rational(-lp.objective[k]) : lp.objective[k];
      c[pos[k]] = v;
      if (neg[k] != SIZE_MAX) c[neg[k]] = -v;
    }
  }
  LpSolution raw = solve_standard_form(A, b, c);
  LpSolution out;
  out.status = raw.status;
  if (raw.status != LpStatus::Optimal) return out;
  out.x.resize(nv);
  for (std::size_t k = 0; k < nv; ++k) {
    out.x[k] = raw.x[pos[k]];
    if (neg[k] != SIZE_MAX) out.x[k] -= raw.x[neg[k]];
  }
  out.objective = lp.maximize ? Rational(-raw.objective) : raw.objective;
  return out;
}

RatVector multiply(const RatMatrix& A, std::span<const Rational> x) {
  RatVector out;
  out.reserve(A.size());
  for (const auto& row : A) out.push_back(dot(std::span<const Rational>(row), x));
  return out;
}

RatVector left_multiply(std::span<const Rational> y, const RatMatrix& A, std::size_t columns) {
  if (y.size() != A.size()) throw std::invalid_argument("left_multiply: size mismatch");
  RatVector out(columns);
  for (std::size_t i = 0; i < A.size(); ++i) {
    if (y[i] == 0) continue;
    for (std::size_t j = 0; j < columns; ++j) {
      if (A[i][j] != 0) out[j] += y[i] * A[i][j];
    }
  }
  return out;
}

std::vector<std::size_t> independent_rows(const RatMatrix& A) {
  std::vector<RatVector> reduced;
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> chosen;
  for (std::size_t r = 0; r < A.size(); ++r) {
    RatVector v = A[r];
    for (std::size_t k = 0; k < reduced.size(); ++k) {
      const std::size_t p = pivots[k];
      if (v[p] == 0) continue;
      Rational f = v[p];
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (reduced[k][j] != 0) v[j] -= f * reduced[k][j];
      }
    }
    std::size_t p = 0;
    while (p < v.size() && v[p] == 0) ++p;
    if (p == v.size()) continue;
    Rational inv = 1 / v[p];
    for (auto& x : v) {
      if (x != 0) x *= inv;
    }
    // Keep earlier rows reduced at the new pivot so later reductions stay one pass.
    for (auto& row : reduced) {
      if (row[p] == 0) continue;
      Rational f = row[p];
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j] != 0) row[j] -= f * v[j];
      }
    }
    reduced.push_back(std::move(v));
    pivots.push_back(p);
    chosen.push_back(r);
  }
  return chosen;
}

StrictFeasibility lp_feasible_strict(const RatMatrix& A, std::size_t columns) {
  for (const auto& row : A) {
    if (row.size() != columns) throw std::invalid_argument("lp_feasible_strict: row size mismatch");
  }
  std::vector<std::size_t> keep = independent_rows(A);
  RatMatrix reduced;
  RatVector b;
  RatVector ones(columns, Rational(1));
  for (std::size_t i : keep) {
    reduced.push_back(A[i]);
    b.push_back(-dot(std::span<const Rational>(A[i]), std::span<const Rational>(ones)));
  }
  LpSolution sol = solve_standard_form(reduced, b, RatVector(columns));
  if (sol.status == LpStatus::Optimal) {
    RatVector s = sol.x;
    for (auto& v : s) v += 1;
    return StrictlyFeasible{std::move(s)};
  }
  // y^T A z = y^T b < 0 with b = -A 1 gives y^T A 1 > 0, so y^T A >= 0 is nonzero.
  RatVector y(A.size());
  for (std::size_t k = 0; k < keep.size(); ++k) y[keep[k]] = sol.farkas[k];
  return StrictlyInfeasible{std::move(y)};
}

bool is_farkas_certificate(const RatMatrix& A, std::span<const Rational> y) {
  if (A.empty() || y.size() != A.size()) return false;
  RatVector yA = left_multiply(y, A, A.front().size());
  bool nonzero = false;
  for (const auto& v : yA) {
    if (v < 0) return false;
    if (v != 0) nonzero = true;
  }
  return nonzero;
}

}  // namespace rfan
