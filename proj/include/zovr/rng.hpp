#ifndef ZOVR_RNG_HPP
#define ZOVR_RNG_HPP

#include <cstdint>
#include <stdexcept>

#include "zovr/vec.hpp"

namespace zovr {

//! Seeded counter-based generator (splitmix64). Identical seed and draw
//! sequence give bit-identical output on every platform; independent
//! streams are derived from (seed, stream id). Normal variates come from
//! Acklam's rational inverse-CDF approximation so no state is carried
//! between draws. An instance is confined to one logical task.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed, std::uint64_t stream_id = 0)
      : state_(mix64(seed + 0x9E3779B97F4A7C15ULL * (stream_id + 1))) {}

  //! Independent child stream for parallel work.
  SeededRng stream(std::uint64_t stream_id) const {
    SeededRng child(0);
    child.state_ = mix64(state_ ^ mix64(stream_id + 0xA24BAED4963EE407ULL));
    return child;
  }

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
  }

  //! Uniform double in [0, 1).
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  //! Uniform index in {0, ..., n-1}.
  std::uint64_t uniform_index(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  //! Standard normal via inverse CDF of a uniform in (0, 1).
  double normal() {
    // Centered on the open interval so both tails are reachable and the
    // distribution is exactly symmetric around 0.5.
    const double u =
        static_cast<double>(next_u64() >> 11) * 0x1.0p-53 + 0x1.0p-54;
    return inverse_normal_cdf(u);
  }

  static double inverse_normal_cdf(double p);

 private:
  static std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

inline double SeededRng::inverse_normal_cdf(double p) {
  // Acklam's approximation, |relative error| < 1.15e-9.
  static constexpr double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                  -2.759285104469687e+02, 1.383577518672690e+02,
                                  -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                  -1.556989798598866e+02, 6.680131188771972e+01,
                                  -1.328068155288572e+01};
  static constexpr double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                  -2.400758277161838e+00, -2.549732539343734e+00,
                                  4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                                  2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double p_low = 0.02425;

  if (p <= 0.0 || p >= 1.0) {
    throw std::invalid_argument("inverse_normal_cdf: p must be in (0, 1)");
  }
  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p > 1.0 - p_low) {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  const double q = p - 0.5;
  const double r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

inline void fill_gaussian(SeededRng& rng, Vec& out) {
  for (double& v : out) v = rng.normal();
}

//! d independent standard normal samples.
inline Vec gaussian_vector(SeededRng& rng, int d) {
  if (d < 1) throw std::invalid_argument("gaussian_vector: dimension must be >= 1");
  Vec out(static_cast<std::size_t>(d));
  fill_gaussian(rng, out);
  return out;
}

}  // namespace zovr

#endif  // ZOVR_RNG_HPP
