#include "zovr/gradient_learner.hpp"

#include <stdexcept>

namespace zovr {

void learner_update(GradientLearner& learner, const CompositeProblem& prob,
                    const Vec& x, const SmoothingConfig& cfg,
                    SzoCounter& counter) {
  const Vec& u = learner.saved_dir;
  if (static_cast<int>(u.size()) != prob.dim() ||
      static_cast<int>(learner.h_tilde.size()) != prob.dim()) {
    throw std::invalid_argument("learner_update: no saved direction or dimension mismatch");
  }
  const Vec est = dir_estimate_full(prob, x, u, cfg, counter);
  const double sketch = dot(u, learner.h_tilde);
  const double step = 1.0 / (static_cast<double>(prob.dim()) + 2.0);
  for (std::size_t j = 0; j < learner.h_tilde.size(); ++j) {
    learner.h_tilde[j] += step * (est[j] - sketch * u[j]);
  }
}

Vec reference_gradient(GradientLearner& learner, const CompositeProblem& prob,
                       const Vec& w, const Vec& fresh_u,
                       const SmoothingConfig& cfg, SzoCounter& counter) {
  if (static_cast<int>(fresh_u.size()) != prob.dim() ||
      static_cast<int>(learner.h_tilde.size()) != prob.dim()) {
    throw std::invalid_argument("reference_gradient: dimension mismatch");
  }
  Vec out = dir_estimate_full(prob, w, fresh_u, cfg, counter);
  const double sketch = dot(fresh_u, learner.h_tilde);
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j] += learner.h_tilde[j] - sketch * fresh_u[j];
  }
  learner.saved_dir = fresh_u;
  return out;
}

}  // namespace zovr
