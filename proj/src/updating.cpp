#include "misspec/updating.hpp"

#include <cmath>

namespace misspec {

namespace detail {

void check_observation(const Model& m, Index x) {
  if (x < 0 || x >= m.n_obs())
    throw IndexOutOfRange("observation index " + std::to_string(x) + " out of range for " +
                          std::to_string(m.n_obs()) + " observations");
}

VectorXd bayes_weights(const Model& m, const Eigen::Ref<const VectorXd>& q, Index x) {
  VectorXd w = q.cwiseProduct(m.likelihoods().col(x));
  return w / w.sum();
}

VectorXd conservative_weights(const Model& m, const Eigen::Ref<const VectorXd>& q, Index x,
                              double gamma) {
  if (gamma == 0.0) return q;
  if (gamma == 1.0) return bayes_weights(m, q, x);
  VectorXd out = (1.0 - gamma) * q + gamma * bayes_weights(m, q, x);
  if (gamma > 1.0) {
    if ((out.array() < 0.0).any())
      throw OutOfSimplex("conservative update with weight " + std::to_string(gamma) +
                         " left the simplex; use the overreacting rule to clamp");
  }
  return out / out.sum();
}

VectorXd generalized_bayes_weights(const Model& m, const Eigen::Ref<const VectorXd>& q, Index x,
                                   double gamma) {
  if (gamma == 0.0) return q;
  if (gamma == 1.0) return bayes_weights(m, q, x);  // exact reduction, no log round-trip
  VectorXd logw(q.size());
  double top = -std::numeric_limits<double>::infinity();
  for (Index t = 0; t < q.size(); ++t) {
    logw[t] = q[t] > 0.0 ? std::log(q[t]) + gamma * std::log(m.likelihoods()(t, x))
                         : -std::numeric_limits<double>::infinity();
    if (logw[t] > top) top = logw[t];
  }
  VectorXd w(q.size());
  for (Index t = 0; t < q.size(); ++t) w[t] = std::exp(logw[t] - top);
  return w / w.sum();
}

VectorXd overreacting_weights(const Model& m, const Eigen::Ref<const VectorXd>& q, Index x,
                              double gamma, double clamp_eps) {
  VectorXd out = (1.0 - gamma) * q + gamma * bayes_weights(m, q, x);
  out = out.cwiseMax(clamp_eps).cwiseMin(1.0 - clamp_eps);
  return out / out.sum();
}

}  // namespace detail

Belief bayes_posterior(const Model& m, const Belief& q, Index x) {
  detail::check_observation(m, x);
  return Belief(detail::bayes_weights(m, q.weights(), x));
}

Belief conservative_update(const Model& m, const Belief& q, Index x, double gamma) {
  detail::check_observation(m, x);
  if (gamma < 0.0) throw InvalidSchedule("update weight must be non-negative");
  return Belief(detail::conservative_weights(m, q.weights(), x, gamma));
}

Belief noisy_conservative_update(const Model& m, const Belief& q, Index x, double gamma,
                                 const NoiseFn& noise) {
  detail::check_observation(m, x);
  if (gamma < 0.0 || gamma > 1.0)
    throw InvalidSchedule("noisy update weight must be in [0,1]");
  const VectorXd b = noise(detail::bayes_weights(m, q.weights(), x));
  if (b.size() != q.size() || (b.array() < -kSimplexTol).any() ||
      std::abs(b.sum() - 1.0) > kIngestTol)
    throw InvalidNoise("noise supplier returned a point outside the simplex");
  VectorXd out = (1.0 - gamma) * q.weights() + gamma * b;
  return Belief(std::move(out));
}

Belief generalized_bayes_update(const Model& m, const Belief& q, Index x, double gamma) {
  detail::check_observation(m, x);
  if (gamma < 0.0 || gamma > 1.0)
    throw InvalidSchedule("generalized-Bayes weight must be in [0,1]");
  return Belief(detail::generalized_bayes_weights(m, q.weights(), x, gamma));
}

Belief observation_weighted_update(const Model& m, const Belief& q, Index x, double gamma_n,
                                   const Eigen::Ref<const VectorXd>& alpha) {
  detail::check_observation(m, x);
  if (alpha.size() != m.n_obs())
    throw DimensionMismatch("alpha must have one entry per observation");
  for (Index i = 0; i < alpha.size(); ++i)
    if (!(alpha[i] > 0.0 && alpha[i] <= 1.0))
      throw InvalidSchedule("observation weight alpha must lie in (0,1]");
  const double effective = gamma_n * alpha[x];
  if (effective > 1.0)
    throw InvalidSchedule("effective weight gamma*alpha exceeds 1");
  return Belief(detail::conservative_weights(m, q.weights(), x, effective));
}

Belief overreacting_update(const Model& m, const Belief& q, Index x, double gamma,
                           double clamp_eps) {
  detail::check_observation(m, x);
  const double bound = 1.0 / static_cast<double>(m.n_params());
  if (!(clamp_eps > 0.0 && clamp_eps < bound))
    throw InvalidSchedule("clamp must be in (0, 1/|Theta|)");
  return Belief(detail::overreacting_weights(m, q.weights(), x, gamma, clamp_eps));
}

}  // namespace misspec
