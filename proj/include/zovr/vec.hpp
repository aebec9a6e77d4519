#ifndef ZOVR_VEC_HPP
#define ZOVR_VEC_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace zovr {

using Vec = std::vector<double>;

inline double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * b[j];
  return s;
}

inline double sq_norm(const Vec& a) { return dot(a, a); }

inline double norm(const Vec& a) { return std::sqrt(sq_norm(a)); }

inline double l1_norm(const Vec& a) {
  double s = 0.0;
  for (double x : a) s += std::fabs(x);
  return s;
}

//! y += c * x
inline void axpy(double c, const Vec& x, Vec& y) {
  for (std::size_t j = 0; j < x.size(); ++j) y[j] += c * x[j];
}

inline void scale(double c, Vec& x) {
  for (double& v : x) v *= c;
}

inline void fill_zero(Vec& x) { x.assign(x.size(), 0.0); }

inline bool all_finite(const Vec& a) {
  for (double x : a) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

inline double sq_dist(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double diff = a[j] - b[j];
    s += diff * diff;
  }
  return s;
}

inline void soft_threshold_inplace(Vec& x, double t) {
  if (t < 0.0) throw std::invalid_argument("soft_threshold: threshold must be >= 0");
  if (t == 0.0) return;
  for (double& v : x) {
    if (v > t) {
      v -= t;
    } else if (v < -t) {
      v += t;
    } else {
      v = 0.0;
    }
  }
}

//! Componentwise shrinkage sign(x_j) * max(|x_j| - t, 0).
inline Vec soft_threshold(const Vec& x, double t) {
  Vec out = x;
  soft_threshold_inplace(out, t);
  return out;
}

}  // namespace zovr

#endif  // ZOVR_VEC_HPP
