#pragma once

#include <optional>
#include <vector>

#include "orbitcone/linalg.hpp"

namespace orbitcone {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  Rational value;  // objective at optimum (maximization)
  QVec x;          // optimal point (free-variable space)
};

/// Linear program over free variables:
///   maximize objective . x   s.t.   ge rows a.x >= b,  eq rows a.x = b.
/// Empty objective means pure feasibility.
struct LpProblem {
  std::size_t num_vars = 0;
  std::vector<QVec> ge_lhs;
  std::vector<Rational> ge_rhs;
  std::vector<QVec> eq_lhs;
  std::vector<Rational> eq_rhs;
  QVec objective;

  explicit LpProblem(std::size_t n) : num_vars(n) {}
  void add_ge(QVec a, Rational b) {
    ge_lhs.push_back(std::move(a));
    ge_rhs.push_back(std::move(b));
  }
  void add_eq(QVec a, Rational b) {
    eq_lhs.push_back(std::move(a));
    eq_rhs.push_back(std::move(b));
  }
};

/// Exact rational simplex, Bland's anti-cycling rule throughout.
LpOutcome lp_maximize(const LpProblem& p);

/// maximize c.x s.t. Ax = b, x >= 0 (standard form).
LpOutcome lp_max_standard(const QMat& A, const QVec& b, const QVec& c);

/// Feasibility of Ax = b, x >= 0; returns a feasible point if one exists.
std::optional<QVec> standard_form_feasible(const QMat& A, const QVec& b);

/// target in cone(gens)?  (nonnegative combinations; empty gens => only 0)
bool cone_contains(const std::vector<QVec>& gens, const QVec& target);

/// target in conv(points) + cone(rays)?  points empty encodes a cone with apex 0.
bool vrep_contains(const std::vector<QVec>& points, const std::vector<QVec>& rays,
                   const QVec& target);

}  // namespace orbitcone
