#ifndef ZOVR_LOGISTIC_PROBLEM_HPP
#define ZOVR_LOGISTIC_PROBLEM_HPP

#include <cstdint>
#include <vector>

#include "zovr/problem.hpp"
#include "zovr/sparse_row.hpp"

namespace zovr {

//! L1-regularized logistic regression over sparse rows:
//!   f_i(x) = log(1 + exp(-y_i x'z_i)) + (lambda2/2)||x||^2,
//!   psi(x) = lambda1 ||x||_1.
//! The ridge lives inside each f_i so mu = lambda2 and
//! L = max_i ||z_i||^2 / 4 + lambda2.
class LogisticProblem : public CompositeProblem {
 public:
  LogisticProblem(const std::vector<SparseRow>& rows,
                  const std::vector<int>& labels, double lambda1,
                  double lambda2);

  bool has_analytic_grad() const override { return true; }
  using CompositeProblem::analytic_component_grad;
  void analytic_component_grad(int i, const Vec& x, Vec& out) const override;

  double lambda2() const { return lambda2_; }
  const std::vector<int>& labels() const { return labels_; }

 protected:
  double eval_impl(int i, const EvalPoint& p) const override;

 private:
  double margin(int i, const Vec& x) const;  // y_i * z_i'x

  // CSR storage of the rows.
  std::vector<std::size_t> offsets_;
  std::vector<int> cols_;
  std::vector<double> vals_;
  std::vector<int> labels_;
  double lambda2_;
};

}  // namespace zovr

#endif  // ZOVR_LOGISTIC_PROBLEM_HPP
