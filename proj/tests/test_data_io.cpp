#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <zlib.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "support/oracles.hpp"
#include "zovr/libsvm_io.hpp"
#include "zovr/reference_solver.hpp"
#include "zovr/rng.hpp"
#include "zovr/synthetic.hpp"

using namespace zovr;

TEST_CASE("libsvm basic line") {
  const Dataset ds = parse_libsvm_string("+1 2:0.5 4:-1.25\n");
  REQUIRE(ds.n() == 1);
  CHECK(ds.labels[0] == 1);
  CHECK(ds.d == 4);
  REQUIRE(ds.rows[0].indices.size() == 2);
  CHECK(ds.rows[0].indices[0] == 1);
  CHECK(ds.rows[0].values[0] == 0.5);
  CHECK(ds.rows[0].indices[1] == 3);
  CHECK(ds.rows[0].values[1] == -1.25);
}

TEST_CASE("libsvm degenerate and mapped labels") {
  const Dataset ds = parse_libsvm_string("-1\n0 1:2\n1 2:1\n");
  REQUIRE(ds.n() == 3);
  CHECK(ds.labels[0] == -1);
  CHECK(ds.rows[0].indices.empty());
  CHECK(ds.labels[1] == -1);  // 0 maps to -1
  CHECK(ds.labels[2] == 1);
}

TEST_CASE("libsvm comments and blank lines are ignored") {
  const Dataset ds = parse_libsvm_string(
      "# header comment\n\n+1 1:1 # trailing comment\n-1 2:3\n");
  CHECK(ds.n() == 2);
  CHECK(ds.d == 2);
}

TEST_CASE("libsvm parse errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_libsvm_string("1 a:b\n"),
                       doctest::Contains("line 1"), ParseError);
  CHECK_THROWS_AS(parse_libsvm_string("+1 2:1 2:3\n"), ParseError);  // non-increasing
  CHECK_THROWS_AS(parse_libsvm_string("+1 3:1 2:3\n"), ParseError);
  CHECK_THROWS_AS(parse_libsvm_string("5 1:1\n"), ParseError);  // unmappable label
  CHECK_THROWS_AS(parse_libsvm_string("+1 0:1\n"), ParseError);  // 0 is not 1-based
  CHECK_THROWS_AS(parse_libsvm_string(""), ParseError);          // empty input
  CHECK_THROWS_AS(parse_libsvm_string("# only comments\n"), ParseError);
}

TEST_CASE("dimension override must cover observed indices") {
  const Dataset ds = parse_libsvm_string("+1 3:1\n", 10);
  CHECK(ds.d == 10);
  CHECK_THROWS_AS(parse_libsvm_string("+1 3:1\n", 2), std::invalid_argument);
}

TEST_CASE("libsvm round trip is lossless") {
  SeededRng rng(9);
  Dataset ds = make_synthetic_dataset(60, 25, 6, 123, false);
  const std::string text = to_libsvm_string(ds);
  const Dataset back = parse_libsvm_string(text, ds.d);
  REQUIRE(back.n() == ds.n());
  CHECK(back.d == ds.d);
  for (int i = 0; i < ds.n(); ++i) {
    const std::size_t ii = static_cast<std::size_t>(i);
    CHECK(back.labels[ii] == ds.labels[ii]);
    CHECK(back.rows[ii].indices == ds.rows[ii].indices);
    CHECK(back.rows[ii].values == ds.rows[ii].values);  // %.17g round-trips
  }
}

TEST_CASE("gzip input is inflated transparently") {
  const Dataset ds = make_synthetic_dataset(20, 10, 4, 5);
  const std::string text = to_libsvm_string(ds);

  // gzip-compress with zlib (windowBits 15+16 selects the gzip wrapper)
  z_stream zs{};
  REQUIRE(deflateInit2(&zs, Z_BEST_SPEED, Z_DEFLATED, 15 + 16, 8,
                       Z_DEFAULT_STRATEGY) == Z_OK);
  std::string gz(text.size() + 128, '\0');
  zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(text.data()));
  zs.avail_in = static_cast<uInt>(text.size());
  zs.next_out = reinterpret_cast<Bytef*>(gz.data());
  zs.avail_out = static_cast<uInt>(gz.size());
  REQUIRE(deflate(&zs, Z_FINISH) == Z_STREAM_END);
  gz.resize(gz.size() - zs.avail_out);
  deflateEnd(&zs);

  const std::string path =
      (std::filesystem::temp_directory_path() / "zovr_test_data.gz").string();
  std::ofstream(path, std::ios::binary) << gz;
  const Dataset back = load_libsvm_file(path, ds.d);
  CHECK(back.n() == ds.n());
  CHECK(to_libsvm_string(back) == text);
  std::filesystem::remove(path);
}

TEST_CASE("dataset summary counts") {
  const Dataset ds = parse_libsvm_string("+1 1:1 3:1\n-1 2:1\n-1\n+1 4:2\n");
  const DatasetSummary s = dataset_summary(ds);
  CHECK(s.n == 4);
  CHECK(s.d == 4);
  CHECK(s.nnz == 4);
  CHECK(s.positives == 2);
  CHECK(s.negatives == 2);
}

TEST_CASE("quadratic generator respects the conditioning target") {
  for (double kappa : {1.0, 3.0, 25.0}) {
    const QuadraticLassoProblem prob = make_quadratic_lasso(12, 6, kappa, 0.1, 31);
    CHECK(std::fabs(prob.condition_number() - kappa) <= 1e-12 * kappa);
  }
  // kappa = 1 degenerates to A_i = mu I: every analytic gradient is x - b_i,
  // so L = mu exactly.
  const QuadraticLassoProblem iso = make_quadratic_lasso(4, 3, 1.0, 0.0, 1);
  CHECK(iso.smoothness() == iso.strong_convexity());
  CHECK_THROWS_AS(make_quadratic_lasso(4, 3, 0.5, 0.0, 1), std::invalid_argument);
}

TEST_CASE("unregularized generator optimum matches the closed form") {
  const QuadraticLassoProblem prob = make_quadratic_lasso(25, 7, 12.0, 0.0, 17);
  const Vec closed = zovr_test::solve_mean_quadratic(prob);
  const Reference ref = compute_reference_optimum(prob, 1e-11);
  CHECK(std::sqrt(sq_dist(ref.x_star, closed)) <= 1e-8);
}

TEST_CASE("generator puts the minimizer away from the origin") {
  const QuadraticLassoProblem prob = make_quadratic_lasso(25, 7, 12.0, 0.3, 17);
  const Reference ref = compute_reference_optimum(prob, 1e-11);
  CHECK(norm(ref.x_star) > 0.5);
  CHECK(norm(prob.analytic_full_grad(ref.x_star)) > 0.1);
}

TEST_CASE("max-abs scaling normalizes feature columns") {
  Dataset ds = parse_libsvm_string("+1 1:4 2:0.5\n-1 1:-2 3:1\n");
  max_abs_scale_features(ds);
  CHECK(ds.rows[0].values[0] == doctest::Approx(1.0));
  CHECK(ds.rows[1].values[0] == doctest::Approx(-0.5));
  CHECK(ds.rows[0].values[1] == doctest::Approx(1.0));  // sole entry scales to 1
  CHECK(ds.rows[1].values[1] == doctest::Approx(1.0));
  // idempotent once scaled
  const std::string once = to_libsvm_string(ds);
  max_abs_scale_features(ds);
  CHECK(to_libsvm_string(ds) == once);
}

// Real-dataset shape checks run only when the files are present under
// data/ (they are not bundled).
TEST_CASE("known dataset shapes when files are available") {
  struct Known {
    const char* rel;
    int n;
    int d;
  };
  for (const Known& k : {Known{"/data/a9a", 32561, 123}, Known{"/data/w8a", 49749, 300}}) {
    const std::string path = std::string(ZOVR_SOURCE_DIR) + k.rel;
    if (!std::filesystem::exists(path) && !std::filesystem::exists(path + ".gz")) {
      continue;
    }
    const std::string actual =
        std::filesystem::exists(path) ? path : path + ".gz";
    const DatasetSummary s = dataset_summary(load_libsvm_file(actual));
    CHECK(s.n == k.n);
    CHECK(s.d == k.d);
  }
}

TEST_CASE("synthetic dataset shape") {
  const Dataset ds = make_synthetic_dataset(30, 15, 5, 3);
  CHECK(ds.n() == 30);
  CHECK(ds.d == 15);
  for (const SparseRow& r : ds.rows) {
    CHECK(r.nnz() == 5);
    r.validate();
  }
  int pos = 0;
  for (int y : ds.labels) pos += y > 0 ? 1 : 0;
  CHECK(pos > 0);
  CHECK(pos < 30);
}
