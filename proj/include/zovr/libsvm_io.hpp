#ifndef ZOVR_LIBSVM_IO_HPP
#define ZOVR_LIBSVM_IO_HPP

#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "zovr/sparse_row.hpp"

namespace zovr {

struct ParseError : std::runtime_error {
  ParseError(int line_number, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_number) + ": " + what),
        line(line_number) {}
  int line;
};

//! Parsed binary-classification dataset; labels are mapped to +-1.
struct Dataset {
  std::vector<SparseRow> rows;
  std::vector<int> labels;
  int d = 0;

  int n() const { return static_cast<int>(rows.size()); }
};

//! LIBSVM text: one `<label> <idx>:<val> ...` sample per line, 1-based
//! strictly increasing indices, `#` starts a comment. Labels {0, -1} map
//! to -1 and {1, +1} to +1. d is the max feature index unless overridden
//! (the override must cover every observed index).
Dataset parse_libsvm(std::istream& in, int dim_override = 0);
Dataset parse_libsvm_string(const std::string& text, int dim_override = 0);

//! Reads a file, transparently inflating gzip input.
Dataset load_libsvm_file(const std::string& path, int dim_override = 0);

std::string to_libsvm_string(const Dataset& ds);

//! Optional per-feature max-abs scaling (off by default everywhere: it
//! changes the smoothness constant). Columns with no support are left
//! alone.
void max_abs_scale_features(Dataset& ds);

struct DatasetSummary {
  int n = 0;
  int d = 0;
  std::uint64_t nnz = 0;
  int positives = 0;
  int negatives = 0;
};

DatasetSummary dataset_summary(const Dataset& ds);

}  // namespace zovr

#endif  // ZOVR_LIBSVM_IO_HPP
