#ifndef ZOVR_REFERENCE_SOLVER_HPP
#define ZOVR_REFERENCE_SOLVER_HPP

#include <cstdint>

#include "zovr/optimizers.hpp"
#include "zovr/problem.hpp"

namespace zovr {

struct ReferenceSolveError : std::runtime_error {
  explicit ReferenceSolveError(const std::string& what) : std::runtime_error(what) {}
};

//! High-precision optimum via proximal gradient on the exact analytic
//! gradients (accelerated phase, then plain polish steps until
//! ||x_{t+1} - x_t|| / eta <= tol with eta = 1/L). The returned point
//! satisfies ||prox(x - eta grad f(x)) - x|| <= eta tol.
Reference compute_reference_optimum(const CompositeProblem& prob,
                                    double tol = 1e-10,
                                    std::uint64_t max_iters = 5'000'000);

}  // namespace zovr

#endif  // ZOVR_REFERENCE_SOLVER_HPP
