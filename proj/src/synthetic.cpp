#include "zovr/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "zovr/rng.hpp"

namespace zovr {

QuadraticLassoProblem make_quadratic_lasso(int n, int d, double kappa_target,
                                           double lambda1, std::uint64_t seed) {
  if (!(kappa_target >= 1.0)) {
    throw std::invalid_argument("make_quadratic_lasso: kappa_target must be >= 1");
  }
  if (n < 1 || d < 1) {
    throw std::invalid_argument("make_quadratic_lasso: n and d must be >= 1");
  }
  if (d == 1 && n == 1 && kappa_target > 1.0) {
    throw std::invalid_argument(
        "make_quadratic_lasso: a single 1-d component cannot realize kappa > 1");
  }
  SeededRng rng(seed);
  const double mu = 1.0;
  const double big_l = kappa_target * mu;
  const std::size_t nd = static_cast<std::size_t>(n) * static_cast<std::size_t>(d);
  std::vector<double> diag(nd, mu);

  if (d >= 2) {
    // Same log-spaced spectrum in every component, permuted per component,
    // with the endpoints pinned so L/mu equals kappa_target exactly.
    std::vector<double> spectrum(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
      spectrum[static_cast<std::size_t>(j)] =
          mu * std::pow(kappa_target, static_cast<double>(j) / (d - 1));
    }
    spectrum.front() = mu;
    spectrum.back() = big_l;
    for (int i = 0; i < n; ++i) {
      std::vector<double> perm = spectrum;
      for (std::size_t j = perm.size(); j > 1; --j) {
        std::swap(perm[j - 1], perm[rng.uniform_index(j)]);
      }
      std::copy(perm.begin(), perm.end(),
                diag.begin() + static_cast<std::size_t>(i) * static_cast<std::size_t>(d));
    }
  } else if (kappa_target > 1.0) {
    // One eigenvalue per component: spread the spectrum across components.
    for (int i = 0; i < n; ++i) {
      diag[static_cast<std::size_t>(i)] =
          mu * std::pow(kappa_target, static_cast<double>(i) / (n - 1));
    }
    diag.front() = mu;
    diag.back() = big_l;
  }

  // Target minimizer with entries in +-[0.5, 1.5], then b_i = A_i t + noise
  // with the per-coordinate noise mean removed so the averaged quadratic
  // still has its minimizer near t.
  Vec target(static_cast<std::size_t>(d));
  for (double& t : target) {
    const double mag = 0.5 + rng.uniform01();
    t = rng.uniform01() < 0.5 ? -mag : mag;
  }
  std::vector<double> b(nd, 0.0);
  std::vector<double> noise(nd);
  Vec noise_mean(static_cast<std::size_t>(d), 0.0);
  for (std::size_t k = 0; k < nd; ++k) noise[k] = 0.5 * rng.normal();
  for (int i = 0; i < n; ++i) {
    const std::size_t base = static_cast<std::size_t>(i) * static_cast<std::size_t>(d);
    for (int j = 0; j < d; ++j) {
      noise_mean[static_cast<std::size_t>(j)] += noise[base + static_cast<std::size_t>(j)];
    }
  }
  scale(1.0 / static_cast<double>(n), noise_mean);
  for (int i = 0; i < n; ++i) {
    const std::size_t base = static_cast<std::size_t>(i) * static_cast<std::size_t>(d);
    for (int j = 0; j < d; ++j) {
      const std::size_t jj = static_cast<std::size_t>(j);
      b[base + jj] = diag[base + jj] * target[jj] + noise[base + jj] - noise_mean[jj];
    }
  }
  return QuadraticLassoProblem(n, d, std::move(diag), std::move(b), {}, lambda1);
}

Dataset make_synthetic_dataset(int n, int d, int nnz_per_row, std::uint64_t seed,
                               bool binary_features, double label_noise) {
  if (n < 1 || d < 1 || nnz_per_row < 1 || nnz_per_row > d) {
    throw std::invalid_argument("make_synthetic_dataset: bad shape");
  }
  SeededRng rng(seed);
  Vec separator(static_cast<std::size_t>(d));
  for (double& wj : separator) wj = rng.normal();

  Dataset ds;
  ds.d = d;
  ds.rows.reserve(static_cast<std::size_t>(n));
  ds.labels.reserve(static_cast<std::size_t>(n));
  std::vector<int> picks;
  for (int i = 0; i < n; ++i) {
    picks.clear();
    while (static_cast<int>(picks.size()) < nnz_per_row) {
      const int idx = static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(d)));
      if (std::find(picks.begin(), picks.end(), idx) == picks.end()) {
        picks.push_back(idx);
      }
    }
    std::sort(picks.begin(), picks.end());
    SparseRow row;
    row.dim = d;
    row.indices = picks;
    row.values.resize(picks.size());
    for (double& v : row.values) v = binary_features ? 1.0 : rng.normal();
    double margin = dot(row, separator);
    int label = margin >= 0.0 ? 1 : -1;
    if (rng.uniform01() < label_noise) label = -label;
    row.validate();
    ds.rows.push_back(std::move(row));
    ds.labels.push_back(label);
  }
  return ds;
}

}  // namespace zovr
