#ifndef ZOVR_SPARSE_ROW_HPP
#define ZOVR_SPARSE_ROW_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "zovr/vec.hpp"

namespace zovr {

//! One sample row: strictly increasing 0-based column ids with finite values.
struct SparseRow {
  std::vector<int> indices;
  std::vector<double> values;
  int dim = 0;

  void validate() const {
    if (indices.size() != values.size()) {
      throw std::invalid_argument("SparseRow: indices/values length mismatch");
    }
    int prev = -1;
    for (std::size_t k = 0; k < indices.size(); ++k) {
      if (indices[k] <= prev) {
        throw std::invalid_argument("SparseRow: indices must be strictly increasing");
      }
      if (indices[k] >= dim) {
        throw std::invalid_argument("SparseRow: index out of range");
      }
      if (!std::isfinite(values[k])) {
        throw std::invalid_argument("SparseRow: values must be finite");
      }
      prev = indices[k];
    }
  }

  std::size_t nnz() const { return indices.size(); }
};

inline double dot(const SparseRow& r, const Vec& x) {
  double s = 0.0;
  for (std::size_t k = 0; k < r.indices.size(); ++k) {
    s += r.values[k] * x[static_cast<std::size_t>(r.indices[k])];
  }
  return s;
}

inline double sq_norm(const SparseRow& r) {
  double s = 0.0;
  for (double v : r.values) s += v * v;
  return s;
}

inline Vec to_dense(const SparseRow& r) {
  Vec out(static_cast<std::size_t>(r.dim), 0.0);
  for (std::size_t k = 0; k < r.indices.size(); ++k) {
    out[static_cast<std::size_t>(r.indices[k])] = r.values[k];
  }
  return out;
}

}  // namespace zovr

#endif  // ZOVR_SPARSE_ROW_HPP
