#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>

#include <Eigen/Dense>

#include "misspec/errors.hpp"

namespace misspec {

using Eigen::Index;
using Eigen::VectorXd;

// Rule producing the update weight for step n (n >= 1). Built-in decreasing
// families are restricted to 1/n^a with a in (0,1] and 1/log^a(n) with a > 1;
// both satisfy the divergence and tail conditions required for almost-sure
// convergence of the conservative update.
class WeightSchedule {
 public:
  enum class Kind {
    PureBayes,             // gamma = 1
    PowerLaw,              // gamma_n = n^-a
    LogPower,              // gamma_n = min(1, log(n+1)^-a)
    Constant,              // gamma in (0,1)
    ObservationDependent,  // gamma_n * alpha(x), alpha: X -> (0,1]
    GeneralizedBayes,      // tempered posterior with base-schedule weight
    Overreacting,          // gamma_n = base + 1/n with base > 1, clamped update
    Custom,                // caller-supplied weight function, unvalidated
  };

  // Custom weight: may inspect the step index, observation, current belief
  // and its Bayes posterior (covers random and belief-dependent weights).
  using CustomFn = std::function<double(std::uint64_t n, Index x, const VectorXd& q, const VectorXd& bayes)>;

  static WeightSchedule pure_bayes();
  static WeightSchedule power_law(double alpha);
  static WeightSchedule log_power(double alpha);
  static WeightSchedule constant(double gamma);
  static WeightSchedule observation_dependent(WeightSchedule base, VectorXd alpha);
  static WeightSchedule generalized_bayes(WeightSchedule base);
  static WeightSchedule overreacting(double base, double clamp_eps);
  static WeightSchedule custom(CustomFn fn, bool validated);

  // Parses a descriptor: bayes | power:A | logpow:A | constant:G |
  // overreact:B:EPS | genbayes(INNER) | obsdep(INNER;A1,A2,...) — see README.
  static WeightSchedule parse(const std::string& spec);

  Kind kind() const { return kind_; }
  // Weight before any observation dependence, n >= 1. Not defined for Custom.
  double base_gamma(std::uint64_t n) const;
  const VectorXd& alpha() const { return alpha_; }
  double clamp_eps() const { return clamp_eps_; }
  const WeightSchedule& base() const;
  const CustomFn& custom_fn() const { return fn_; }
  bool validated() const { return validated_; }

  std::string descriptor() const;

 private:
  WeightSchedule() = default;

  Kind kind_ = Kind::PureBayes;
  double param_ = 1.0;  // exponent or constant/overreaction base
  double clamp_eps_ = 0.0;
  VectorXd alpha_;
  std::shared_ptr<const WeightSchedule> base_;
  CustomFn fn_;
  bool validated_ = true;
};

}  // namespace misspec
