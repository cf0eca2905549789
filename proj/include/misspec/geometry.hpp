#pragma once

#include <vector>

#include "misspec/model.hpp"

namespace misspec {

// Analytic objects of the learning problem: the predictive map, the
// cross-entropy objective, its gradient, the mean update drift whose zeros
// are the rest points of the dynamics, the mixture set, and structural
// tests on the candidate family.

// Predictive distribution sum_theta q_theta p_theta. Accepts any
// non-negative weight vector so callers can sweep grids and expressions.
VectorXd predictive(const Model& m, const Eigen::Ref<const VectorXd>& q);
VectorXd predictive(const Model& m, const Belief& q);

// Cross-entropy of the predictive mixture against the true DGP:
// sum_x p*(x) log(sum_theta q_theta p_theta(x)). Finite by full support.
// Defined for any positive-mixture weight vector (used by the gradient's
// finite-difference checks, which step off the simplex).
double cross_entropy(const Model& m, const Eigen::Ref<const VectorXd>& q);
double cross_entropy(const Model& m, const Belief& q);

// Expected likelihood ratio per parameter and the mean one-step drift of
// the conservative update under the true DGP:
//   ratio[t] = sum_x p*(x) p_t(x) / predictive(x)      (= dV/dq_t)
//   drift[t] = q_t (ratio[t] - 1)                      (= E[B(q,x)] - q)
// drift sums to zero; its zeros are the candidate rest points.
struct DriftField {
  VectorXd ratio;
  VectorXd drift;
};
DriftField drift_field(const Model& m, const Eigen::Ref<const VectorXd>& q);
DriftField drift_field(const Model& m, const Belief& q);

// Gradient of the cross-entropy; identical to drift_field(...).ratio.
VectorXd cross_entropy_gradient(const Model& m, const Eigen::Ref<const VectorXd>& q);

// Kullback-Leibler divergence of r from p (both full support).
double kl_divergence(const Eigen::Ref<const VectorXd>& p, const Eigen::Ref<const VectorXd>& r);

// All mixture weights reproducing the true DGP exactly:
// { lambda in simplex : sum_theta lambda_theta p_theta = p* }.
struct MixtureSet {
  int dimension = -1;               // affine dimension; -1 when empty
  VectorXd base_point;              // one feasible point (empty when none)
  MatrixXd directions;              // |Theta| x dimension null-space basis
  std::vector<VectorXd> vertices;   // extreme points, enumerated when dimension <= 2
};
MixtureSet mixture_set(const Model& m);

// Family structure. `full`: pairwise likelihood differences span the
// tangent space of the observation simplex (rank via singular values,
// threshold 1e-10). `convex independent`: no row is a convex combination
// of the others (exact search over supports, |Theta| <= 8).
// `tight`: |Theta| == |X|, full and convex independent.
bool is_full(const Model& m);
bool is_convex_independent(const Model& m);
bool is_tight(const Model& m);

// Expected log growth factor of belief coordinate `theta` under a constant
// weight: sum_x p*(x) log((1-gamma) + gamma p_theta(x)/predictive(x)).
double growth_rate(const Model& m, const Eigen::Ref<const VectorXd>& q, double gamma, Index theta);

// True DGP reweighted by observation weights and renormalized:
// p*(x) alpha(x) / sum_x' p*(x') alpha(x').
VectorXd reweighted_dgp(const Model& m, const Eigen::Ref<const VectorXd>& alpha);

namespace detail {
// Does `target` lie in the convex hull of the given distribution rows?
// Exact basic-solution search over column supports; tolerance on the
// residual. Rows are |points| x dim.
bool in_convex_hull(const MatrixXd& points, const Eigen::Ref<const VectorXd>& target,
                    double residual_tol);
}  // namespace detail

}  // namespace misspec
