#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "misspec/errors.hpp"

namespace misspec {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

// Probability vectors must sum to one within this tolerance once validated.
inline constexpr double kSimplexTol = 1e-12;
// Raw input may deviate by up to this much before it is rejected.
inline constexpr double kIngestTol = 1e-9;
// Deviations above this trigger renormalization; below, the vector is kept
// bit-for-bit so that validation is idempotent and round-trips exactly.
inline constexpr double kRenormTol = 1e-13;

// Normalizes `v` onto the simplex. Throws NotStochastic if the sum is off by
// more than kIngestTol or an entry is negative beyond -kIngestTol.
VectorXd normalized_simplex(VectorXd v, const std::string& what);

// Unvalidated model data as read from a file or built in code.
struct ModelData {
  std::vector<std::string> theta_labels;
  std::vector<std::string> x_labels;
  MatrixXd likelihoods;  // rows = theta
  VectorXd true_dgp;
};

// A finite learning problem: parameter set, observation set, the candidate
// likelihoods p_theta (one row per parameter, full support), and the true
// data-generating process p* (full support). Immutable after construction.
class Model {
 public:
  Model(std::vector<std::string> theta_labels, std::vector<std::string> x_labels,
        MatrixXd likelihoods, VectorXd true_dgp);

  Index n_params() const { return likelihoods_.rows(); }
  Index n_obs() const { return likelihoods_.cols(); }
  const MatrixXd& likelihoods() const { return likelihoods_; }
  const VectorXd& true_dgp() const { return true_dgp_; }
  const std::vector<std::string>& theta_labels() const { return theta_labels_; }
  const std::vector<std::string>& x_labels() const { return x_labels_; }

  // Cumulative distribution of the true DGP, for observation sampling.
  const VectorXd& true_dgp_cdf() const { return dgp_cdf_; }

 private:
  std::vector<std::string> theta_labels_;
  std::vector<std::string> x_labels_;
  MatrixXd likelihoods_;
  VectorXd true_dgp_;
  VectorXd dgp_cdf_;
};

// Validates raw model data: dimensions, full support, stochastic rows.
Model validate_model(const ModelData& raw);
// Re-validation of an already valid model is the identity.
Model validate_model(const Model& m);

// A belief over the parameter set: a point of the simplex.
class Belief {
 public:
  explicit Belief(VectorXd weights);

  static Belief uniform(Index n_params);
  static Belief point_mass(Index theta, Index n_params);

  const VectorXd& weights() const { return w_; }
  Index size() const { return w_.size(); }
  double operator[](Index theta) const { return w_[theta]; }

  bool is_interior(double tol = 0.0) const { return (w_.array() > tol).all(); }

 private:
  VectorXd w_;
};

// Point mass on one parameter of `m`. Throws IndexOutOfRange.
Belief delta_belief(Index theta, const Model& m);

}  // namespace misspec
