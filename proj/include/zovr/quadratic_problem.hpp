#ifndef ZOVR_QUADRATIC_PROBLEM_HPP
#define ZOVR_QUADRATIC_PROBLEM_HPP

#include <vector>

#include "zovr/problem.hpp"

namespace zovr {

//! Synthetic testbed with analytic oracles: per-component diagonal
//! quadratics f_i(x) = 1/2 x'A_i x - b_i'x + c_i with A_i = diag(a_i) > 0,
//! plus psi = lambda1 ||.||_1. L and mu are the extreme diagonal entries
//! across all components.
class QuadraticLassoProblem : public CompositeProblem {
 public:
  //! diag and b are n*d row-major; constants may be empty (all zero).
  QuadraticLassoProblem(int n, int d, std::vector<double> diag,
                        std::vector<double> b, std::vector<double> constants,
                        double lambda1);

  bool has_analytic_grad() const override { return true; }
  using CompositeProblem::analytic_component_grad;
  void analytic_component_grad(int i, const Vec& x, Vec& out) const override;

  //! Mean diagonal and mean linear term of the averaged quadratic.
  Vec mean_diag() const;
  Vec mean_b() const;

 protected:
  double eval_impl(int i, const EvalPoint& p) const override;

 private:
  std::vector<double> diag_;
  std::vector<double> b_;
  std::vector<double> constants_;
};

}  // namespace zovr

#endif  // ZOVR_QUADRATIC_PROBLEM_HPP
