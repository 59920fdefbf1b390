#include "orbitcone/lp.hpp"

#include <cassert>
#include <limits>

namespace orbitcone {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Dense tableau for max problems in standard form. Row m holds the reduced
// costs, column n the right-hand side; T(m,n) stores minus the objective.
class Tableau {
 public:
  Tableau(const QMat& A, const QVec& b) : m_(A.rows), n_(A.cols), T_(A.rows + 1, A.cols + 1) {
    for (std::size_t i = 0; i < m_; ++i) {
      bool flip = b[i] < 0;
      for (std::size_t j = 0; j < n_; ++j) T_(i, j) = flip ? -A(i, j) : A(i, j);
      T_(i, n_) = flip ? -b[i] : b[i];
    }
    basis_.assign(m_, kNone);
  }

  // Phase 1: artificial basis, then drive the artificials out.
  bool make_feasible() {
    QMat ext(m_, n_ + m_);
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) ext(i, j) = T_(i, j);
      ext(i, n_ + i) = 1;
    }
    QVec rhs(m_);
    for (std::size_t i = 0; i < m_; ++i) rhs[i] = T_(i, n_);
    Tableau ph1(ext, rhs);
    for (std::size_t i = 0; i < m_; ++i) ph1.basis_[i] = n_ + i;
    // reduced costs of  maximize -(sum of artificials)
    for (std::size_t j = 0; j < n_; ++j) {
      Rational s(0);
      for (std::size_t i = 0; i < m_; ++i) s += ph1.T_(i, j);
      ph1.T_(m_, j) = s;
    }
    Rational sb(0);
    for (std::size_t i = 0; i < m_; ++i) sb += ph1.T_(i, n_ + m_);
    ph1.T_(m_, n_ + m_) = sb;

    LpStatus st = ph1.iterate();
    assert(st != LpStatus::Unbounded);
    (void)st;
    if (ph1.T_(m_, n_ + m_) != 0) return false;  // positive artificial residue

    // Pivot remaining artificials out; rows that cannot pivot are redundant.
    std::vector<bool> drop(m_, false);
    for (std::size_t i = 0; i < m_; ++i) {
      if (ph1.basis_[i] < n_) continue;
      std::size_t j = 0;
      while (j < n_ && ph1.T_(i, j) == 0) ++j;
      if (j < n_)
        ph1.pivot(i, j);
      else
        drop[i] = true;
    }
    std::size_t r = 0;
    basis_.clear();
    for (std::size_t i = 0; i < m_; ++i) {
      if (drop[i]) continue;
      for (std::size_t j = 0; j < n_; ++j) T_(r, j) = ph1.T_(i, j);
      T_(r, n_) = ph1.T_(i, n_ + m_);
      basis_.push_back(ph1.basis_[i]);
      ++r;
    }
    m_ = r;
    return true;
  }

  void set_objective(const QVec& c) {
    for (std::size_t j = 0; j < n_; ++j) T_(m_, j) = j < c.size() ? c[j] : Rational(0);
    T_(m_, n_) = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      Rational cb = basis_[i] < c.size() ? c[basis_[i]] : Rational(0);
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= n_; ++j) T_(m_, j) -= cb * T_(i, j);
    }
  }

  LpStatus iterate() {
    for (;;) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < n_; ++j)
        if (T_(m_, j) > 0) { enter = j; break; }  // Bland: lowest index
      if (enter == kNone) return LpStatus::Optimal;
      std::size_t leave = kNone;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (T_(i, enter) <= 0) continue;
        Rational ratio = T_(i, n_) / T_(i, enter);
        if (leave == kNone || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == kNone) return LpStatus::Unbounded;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t i, std::size_t j) {
    Rational inv = 1 / T_(i, j);
    for (std::size_t k = 0; k <= n_; ++k) T_(i, k) *= inv;
    for (std::size_t r = 0; r <= m_; ++r) {
      if (r == i || T_(r, j) == 0) continue;
      Rational f = T_(r, j);
      for (std::size_t k = 0; k <= n_; ++k) T_(r, k) -= f * T_(i, k);
    }
    basis_[i] = j;
  }

  QVec solution() const {
    QVec x(n_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < n_) x[basis_[i]] = T_(i, n_);
    return x;
  }

  Rational objective_value() const { return -T_(m_, n_); }

 private:
  std::size_t m_, n_;
  QMat T_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpOutcome lp_max_standard(const QMat& A, const QVec& b, const QVec& c) {
  Tableau t(A, b);
  if (!t.make_feasible()) return {LpStatus::Infeasible, Rational(0), {}};
  t.set_objective(c);
  LpStatus st = t.iterate();
  return {st, t.objective_value(), t.solution()};
}

std::optional<QVec> standard_form_feasible(const QMat& A, const QVec& b) {
  Tableau t(A, b);
  if (!t.make_feasible()) return std::nullopt;
  return t.solution();
}

LpOutcome lp_maximize(const LpProblem& p) {
  // Free variables split as x = u - w; slacks turn ge rows into equalities.
  std::size_t n = p.num_vars;
  std::size_t m = p.ge_lhs.size() + p.eq_lhs.size();
  std::size_t cols = 2 * n + p.ge_lhs.size();
  QMat A(m, cols);
  QVec b(m, Rational(0));
  std::size_t r = 0;
  for (std::size_t g = 0; g < p.ge_lhs.size(); ++g, ++r) {
    for (std::size_t j = 0; j < n; ++j) {
      A(r, j) = p.ge_lhs[g][j];
      A(r, n + j) = -p.ge_lhs[g][j];
    }
    A(r, 2 * n + g) = -1;
    b[r] = p.ge_rhs[g];
  }
  for (std::size_t e = 0; e < p.eq_lhs.size(); ++e, ++r) {
    for (std::size_t j = 0; j < n; ++j) {
      A(r, j) = p.eq_lhs[e][j];
      A(r, n + j) = -p.eq_lhs[e][j];
    }
    b[r] = p.eq_rhs[e];
  }
  QVec c(cols, Rational(0));
  for (std::size_t j = 0; j < p.objective.size() && j < n; ++j) {
    c[j] = p.objective[j];
    c[n + j] = -p.objective[j];
  }
  LpOutcome out = lp_max_standard(A, b, c);
  if (out.status == LpStatus::Infeasible) return out;
  QVec x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = out.x[j] - out.x[n + j];
  out.x = std::move(x);
  return out;
}

bool cone_contains(const std::vector<QVec>& gens, const QVec& target) {
  if (is_zero(target)) return true;
  if (gens.empty()) return false;
  std::size_t dim = target.size();
  QMat A(dim, gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (gens[j].size() != dim) throw std::invalid_argument("cone_contains: dimension mismatch");
    for (std::size_t i = 0; i < dim; ++i) A(i, j) = gens[j][i];
  }
  return standard_form_feasible(A, target).has_value();
}

bool vrep_contains(const std::vector<QVec>& points, const std::vector<QVec>& rays,
                   const QVec& target) {
  if (points.empty()) return cone_contains(rays, target);
  std::size_t dim = target.size();
  std::size_t cols = points.size() + rays.size();
  QMat A(dim + 1, cols);
  QVec b(dim + 1);
  for (std::size_t i = 0; i < dim; ++i) b[i] = target[i];
  b[dim] = 1;  // convex-combination row
  for (std::size_t j = 0; j < points.size(); ++j) {
    for (std::size_t i = 0; i < dim; ++i) A(i, j) = points[j][i];
    A(dim, j) = 1;
  }
  for (std::size_t j = 0; j < rays.size(); ++j)
    for (std::size_t i = 0; i < dim; ++i) A(i, points.size() + j) = rays[j][i];
  return standard_form_feasible(A, b).has_value();
}

}  // namespace orbitcone
