#include "zovr/libsvm_io.hpp"

#include <zlib.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

namespace zovr {

namespace {

bool parse_double(const std::string& tok, double& out) {
  const char* s = tok.c_str();
  char* end = nullptr;
  out = std::strtod(s, &end);
  return end == s + tok.size() && !tok.empty();
}

int map_label(double raw, int line) {
  if (raw == 1.0) return 1;
  if (raw == -1.0 || raw == 0.0) return -1;
  throw ParseError(line, "label " + std::to_string(raw) + " is not one of {0, 1, -1}");
}

std::string inflate_gzip(const std::string& compressed) {
  z_stream zs;
  std::memset(&zs, 0, sizeof(zs));
  if (inflateInit2(&zs, 15 + 16) != Z_OK) {
    throw std::runtime_error("gzip: inflateInit failed");
  }
  zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(compressed.data()));
  zs.avail_in = static_cast<uInt>(compressed.size());
  std::string out;
  char buf[1 << 16];
  int ret = Z_OK;
  do {
    zs.next_out = reinterpret_cast<Bytef*>(buf);
    zs.avail_out = sizeof(buf);
    ret = inflate(&zs, Z_NO_FLUSH);
    if (ret != Z_OK && ret != Z_STREAM_END) {
      inflateEnd(&zs);
      throw std::runtime_error("gzip: corrupt stream");
    }
    out.append(buf, sizeof(buf) - zs.avail_out);
  } while (ret != Z_STREAM_END);
  inflateEnd(&zs);
  return out;
}

}  // namespace

Dataset parse_libsvm(std::istream& in, int dim_override) {
  Dataset ds;
  std::string line;
  int line_no = 0;
  int max_index = -1;  // 0-based
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;  // blank line

    double raw_label = 0.0;
    if (!parse_double(tok, raw_label)) {
      throw ParseError(line_no, "non-numeric label '" + tok + "'");
    }
    SparseRow row;
    int prev = 0;  // 1-based
    while (ls >> tok) {
      const std::size_t colon = tok.find(':');
      if (colon == std::string::npos) {
        throw ParseError(line_no, "expected idx:value, got '" + tok + "'");
      }
      double idx_raw = 0.0;
      double value = 0.0;
      if (!parse_double(tok.substr(0, colon), idx_raw) ||
          idx_raw != std::floor(idx_raw) || idx_raw < 1.0) {
        throw ParseError(line_no, "bad feature index in '" + tok + "'");
      }
      if (!parse_double(tok.substr(colon + 1), value) || !std::isfinite(value)) {
        throw ParseError(line_no, "bad feature value in '" + tok + "'");
      }
      const int idx = static_cast<int>(idx_raw);
      if (idx <= prev) {
        throw ParseError(line_no, "feature indices must be strictly increasing");
      }
      prev = idx;
      row.indices.push_back(idx - 1);
      row.values.push_back(value);
    }
    if (prev - 1 > max_index) max_index = prev - 1;
    ds.labels.push_back(map_label(raw_label, line_no));
    ds.rows.push_back(std::move(row));
  }
  if (ds.rows.empty()) throw ParseError(line_no, "no samples in input");

  int dim = max_index + 1;
  if (dim_override > 0) {
    if (dim_override < dim) {
      throw std::invalid_argument("dimension override " + std::to_string(dim_override) +
                                  " below observed max index " + std::to_string(dim));
    }
    dim = dim_override;
  }
  if (dim < 1) dim = 1;  // all-empty rows still need a dimension
  ds.d = dim;
  for (SparseRow& r : ds.rows) {
    r.dim = dim;
    r.validate();
  }
  return ds;
}

Dataset parse_libsvm_string(const std::string& text, int dim_override) {
  std::istringstream in(text);
  return parse_libsvm(in, dim_override);
}

Dataset load_libsvm_file(const std::string& path, int dim_override) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  if (bytes.size() >= 2 && static_cast<unsigned char>(bytes[0]) == 0x1f &&
      static_cast<unsigned char>(bytes[1]) == 0x8b) {
    bytes = inflate_gzip(bytes);
  }
  return parse_libsvm_string(bytes, dim_override);
}

std::string to_libsvm_string(const Dataset& ds) {
  std::string out;
  char buf[64];
  for (std::size_t i = 0; i < ds.rows.size(); ++i) {
    out += ds.labels[i] > 0 ? "+1" : "-1";
    const SparseRow& r = ds.rows[i];
    for (std::size_t k = 0; k < r.indices.size(); ++k) {
      std::snprintf(buf, sizeof(buf), " %d:%.17g", r.indices[k] + 1, r.values[k]);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

void max_abs_scale_features(Dataset& ds) {
  Vec max_abs(static_cast<std::size_t>(ds.d), 0.0);
  for (const SparseRow& r : ds.rows) {
    for (std::size_t k = 0; k < r.indices.size(); ++k) {
      const std::size_t j = static_cast<std::size_t>(r.indices[k]);
      max_abs[j] = std::max(max_abs[j], std::fabs(r.values[k]));
    }
  }
  for (SparseRow& r : ds.rows) {
    for (std::size_t k = 0; k < r.indices.size(); ++k) {
      const std::size_t j = static_cast<std::size_t>(r.indices[k]);
      if (max_abs[j] > 0.0) r.values[k] /= max_abs[j];
    }
  }
}

DatasetSummary dataset_summary(const Dataset& ds) {
  DatasetSummary s;
  s.n = ds.n();
  s.d = ds.d;
  for (const SparseRow& r : ds.rows) s.nnz += r.nnz();
  for (int y : ds.labels) {
    if (y > 0) {
      ++s.positives;
    } else {
      ++s.negatives;
    }
  }
  return s;
}

}  // namespace zovr
