#ifndef ZOVR_SYNTHETIC_HPP
#define ZOVR_SYNTHETIC_HPP

#include <cstdint>

#include "zovr/libsvm_io.hpp"
#include "zovr/quadratic_problem.hpp"

namespace zovr {

//! Diagonal quadratic-lasso testbed with conditioning exactly
//! kappa_target (mu = 1, L = kappa_target) and linear terms drawn so the
//! unregularized minimizer sits away from the origin.
QuadraticLassoProblem make_quadratic_lasso(int n, int d, double kappa_target,
                                           double lambda1, std::uint64_t seed);

//! Sparse binary-classification data in LIBSVM shape: nnz_per_row active
//! features per sample (0/1-valued when binary_features, else standard
//! normal) and labels from a planted separator with flip noise.
Dataset make_synthetic_dataset(int n, int d, int nnz_per_row,
                               std::uint64_t seed, bool binary_features = true,
                               double label_noise = 0.05);

}  // namespace zovr

#endif  // ZOVR_SYNTHETIC_HPP
