#ifndef ZOVR_GRADIENT_LEARNER_HPP
#define ZOVR_GRADIENT_LEARNER_HPP

#include "zovr/estimators.hpp"
#include "zovr/problem.hpp"

namespace zovr {

//! Coordinate-wise variance reducer: a running estimate h~ of the smooth
//! gradient at the reference point, refined along one saved random
//! direction per reference refresh. Owned by a single optimizer instance.
struct GradientLearner {
  Vec h_tilde;
  Vec saved_dir;

  explicit GradientLearner(int d)
      : h_tilde(static_cast<std::size_t>(d), 0.0), saved_dir() {}
};

//! Averaging update along the saved direction u:
//!   h~ <- h~ + (1/(d+2)) (dir_estimate_full(x, u) - u u'h~).
//! One full pass, exactly 2n SZO. Mutates h_tilde only.
void learner_update(GradientLearner& learner, const CompositeProblem& prob,
                    const Vec& x, const SmoothingConfig& cfg,
                    SzoCounter& counter);

//! Reference gradient at w with a freshly sampled direction:
//!   h~ + dir_estimate_full(w, u) - u u'h~.
//! Stores u as the learner's saved direction, leaves h_tilde untouched,
//! and costs exactly 2n SZO. The caller caches the result until the next
//! refresh.
Vec reference_gradient(GradientLearner& learner, const CompositeProblem& prob,
                       const Vec& w, const Vec& fresh_u,
                       const SmoothingConfig& cfg, SzoCounter& counter);

}  // namespace zovr

#endif  // ZOVR_GRADIENT_LEARNER_HPP
