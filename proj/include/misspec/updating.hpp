#pragma once

#include <functional>

#include "misspec/model.hpp"

namespace misspec {

// One-step belief-update rules. All rules with effective weight in [0,1]
// map the simplex into itself and preserve zero coordinates.

// Bayes posterior B(q, x). Denominator is positive by full support.
Belief bayes_posterior(const Model& m, const Belief& q, Index x);

// Conservative update (1-gamma) q + gamma B(q,x). For gamma in [0,1] the
// result lies on the segment [q, B(q,x)]; gamma > 1 extrapolates past the
// posterior and throws OutOfSimplex if a coordinate turns negative (use
// overreacting_update to clamp instead).
Belief conservative_update(const Model& m, const Belief& q, Index x, double gamma);

// Noise supplier: receives the exact Bayes posterior, returns a simplex
// point whose conditional mean is that posterior.
using NoiseFn = std::function<VectorXd(const VectorXd& bayes)>;

// Conservative update with a noisy posterior estimate b(q,x) in place of
// B(q,x). Throws InvalidNoise if the supplied point is outside the simplex.
Belief noisy_conservative_update(const Model& m, const Belief& q, Index x, double gamma,
                                 const NoiseFn& noise);

// Tempered posterior: q'(theta) proportional to q(theta) p_theta(x)^gamma,
// gamma in [0,1]. Computed in log space with max-subtraction.
Belief generalized_bayes_update(const Model& m, const Belief& q, Index x, double gamma);

// Conservative update with effective weight gamma_n * alpha(x), where
// alpha maps each observation into (0,1].
Belief observation_weighted_update(const Model& m, const Belief& q, Index x, double gamma_n,
                                   const Eigen::Ref<const VectorXd>& alpha);

// Overreacting update (gamma > 1 allowed): computes (1-gamma) q + gamma B,
// clamps every coordinate to [clamp_eps, 1-clamp_eps] and renormalizes.
// Requires clamp_eps in (0, 1/|Theta|).
Belief overreacting_update(const Model& m, const Belief& q, Index x, double gamma,
                           double clamp_eps);

namespace detail {
// Unvalidated fast paths over raw weight vectors, for simulation loops.
VectorXd bayes_weights(const Model& m, const Eigen::Ref<const VectorXd>& q, Index x);
VectorXd conservative_weights(const Model& m, const Eigen::Ref<const VectorXd>& q, Index x,
                              double gamma);
VectorXd generalized_bayes_weights(const Model& m, const Eigen::Ref<const VectorXd>& q, Index x,
                                   double gamma);
VectorXd overreacting_weights(const Model& m, const Eigen::Ref<const VectorXd>& q, Index x,
                              double gamma, double clamp_eps);
void check_observation(const Model& m, Index x);
}  // namespace detail

}  // namespace misspec
