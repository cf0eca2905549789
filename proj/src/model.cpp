#include "misspec/model.hpp"

#include <cmath>
#include <utility>

namespace misspec {

VectorXd normalized_simplex(VectorXd v, const std::string& what) {
  if (v.size() == 0) throw DimensionMismatch(what + ": empty vector");
  for (Index i = 0; i < v.size(); ++i) {
    if (!(v[i] > -kIngestTol))
      throw NotStochastic(what + ": negative entry " + std::to_string(v[i]));
    if (v[i] < 0.0) v[i] = 0.0;
  }
  const double sum = v.sum();
  if (std::abs(sum - 1.0) > kIngestTol)
    throw NotStochastic(what + ": entries sum to " + std::to_string(sum));
  if (std::abs(sum - 1.0) > kRenormTol) v /= sum;
  return v;
}

Model::Model(std::vector<std::string> theta_labels, std::vector<std::string> x_labels,
             MatrixXd likelihoods, VectorXd true_dgp)
    : theta_labels_(std::move(theta_labels)),
      x_labels_(std::move(x_labels)),
      likelihoods_(std::move(likelihoods)),
      true_dgp_(std::move(true_dgp)) {
  const Index k = likelihoods_.rows();
  const Index n = likelihoods_.cols();
  if (k < 1 || n < 1) throw DimensionMismatch("model: empty parameter or observation set");
  if (static_cast<Index>(theta_labels_.size()) != k)
    throw DimensionMismatch("model: " + std::to_string(theta_labels_.size()) +
                            " theta labels for " + std::to_string(k) + " likelihood rows");
  if (static_cast<Index>(x_labels_.size()) != n)
    throw DimensionMismatch("model: " + std::to_string(x_labels_.size()) +
                            " x labels for " + std::to_string(n) + " likelihood columns");
  if (true_dgp_.size() != n)
    throw DimensionMismatch("model: true_dgp has " + std::to_string(true_dgp_.size()) +
                            " entries, expected " + std::to_string(n));

  for (Index t = 0; t < k; ++t) {
    VectorXd row = likelihoods_.row(t);
    for (Index x = 0; x < n; ++x)
      if (!(row[x] > 0.0))
        throw ZeroLikelihood("likelihood row '" + theta_labels_[t] +
                             "' has a non-positive entry at '" + x_labels_[x] + "'");
    likelihoods_.row(t) = normalized_simplex(std::move(row), "likelihood row '" + theta_labels_[t] + "'");
  }
  for (Index x = 0; x < n; ++x)
    if (!(true_dgp_[x] > 0.0))
      throw ZeroLikelihood("true_dgp has a non-positive entry at '" + x_labels_[x] + "'");
  true_dgp_ = normalized_simplex(std::move(true_dgp_), "true_dgp");

  dgp_cdf_.resize(n);
  double acc = 0.0;
  for (Index x = 0; x < n; ++x) {
    acc += true_dgp_[x];
    dgp_cdf_[x] = acc;
  }
  dgp_cdf_[n - 1] = 1.0;
}

Model validate_model(const ModelData& raw) {
  return Model(raw.theta_labels, raw.x_labels, raw.likelihoods, raw.true_dgp);
}

Model validate_model(const Model& m) {
  return Model(m.theta_labels(), m.x_labels(), m.likelihoods(), m.true_dgp());
}

Belief::Belief(VectorXd weights) : w_(normalized_simplex(std::move(weights), "belief")) {}

Belief Belief::uniform(Index n_params) {
  return Belief(VectorXd::Constant(n_params, 1.0 / static_cast<double>(n_params)));
}

Belief Belief::point_mass(Index theta, Index n_params) {
  if (theta < 0 || theta >= n_params)
    throw IndexOutOfRange("point_mass: parameter index " + std::to_string(theta) +
                          " out of range for " + std::to_string(n_params) + " parameters");
  VectorXd w = VectorXd::Zero(n_params);
  w[theta] = 1.0;
  return Belief(std::move(w));
}

Belief delta_belief(Index theta, const Model& m) {
  return Belief::point_mass(theta, m.n_params());
}

}  // namespace misspec
