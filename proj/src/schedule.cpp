#include "misspec/schedule.hpp"

#include <cmath>
#include <sstream>

#include "misspec/model_io.hpp"

namespace misspec {

WeightSchedule WeightSchedule::pure_bayes() {
  WeightSchedule s;
  s.kind_ = Kind::PureBayes;
  return s;
}

WeightSchedule WeightSchedule::power_law(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw InvalidSchedule("power-law exponent must be in (0,1], got " + std::to_string(alpha));
  WeightSchedule s;
  s.kind_ = Kind::PowerLaw;
  s.param_ = alpha;
  return s;
}

WeightSchedule WeightSchedule::log_power(double alpha) {
  if (!(alpha > 1.0))
    throw InvalidSchedule("log-power exponent must be > 1, got " + std::to_string(alpha));
  WeightSchedule s;
  s.kind_ = Kind::LogPower;
  s.param_ = alpha;
  return s;
}

WeightSchedule WeightSchedule::constant(double gamma) {
  if (!(gamma > 0.0 && gamma < 1.0))
    throw InvalidSchedule("constant weight must be in (0,1), got " + std::to_string(gamma));
  WeightSchedule s;
  s.kind_ = Kind::Constant;
  s.param_ = gamma;
  return s;
}

WeightSchedule WeightSchedule::observation_dependent(WeightSchedule base, VectorXd alpha) {
  switch (base.kind_) {
    case Kind::PureBayes:
    case Kind::PowerLaw:
    case Kind::LogPower:
    case Kind::Constant:
      break;
    default:
      throw InvalidSchedule("observation-dependent base must be bayes, power, logpow or constant");
  }
  for (Index x = 0; x < alpha.size(); ++x)
    if (!(alpha[x] > 0.0 && alpha[x] <= 1.0))
      throw InvalidSchedule("observation weight alpha must lie in (0,1], got " +
                            std::to_string(alpha[x]));
  WeightSchedule s;
  s.kind_ = Kind::ObservationDependent;
  s.alpha_ = std::move(alpha);
  s.base_ = std::make_shared<const WeightSchedule>(std::move(base));
  return s;
}

WeightSchedule WeightSchedule::generalized_bayes(WeightSchedule base) {
  switch (base.kind_) {
    case Kind::PureBayes:
    case Kind::PowerLaw:
    case Kind::LogPower:
    case Kind::Constant:
      break;
    default:
      throw InvalidSchedule("generalized-Bayes base must be bayes, power, logpow or constant");
  }
  WeightSchedule s;
  s.kind_ = Kind::GeneralizedBayes;
  s.base_ = std::make_shared<const WeightSchedule>(std::move(base));
  return s;
}

WeightSchedule WeightSchedule::overreacting(double base, double clamp_eps) {
  if (!(base > 1.0))
    throw InvalidSchedule("overreaction base must be > 1, got " + std::to_string(base));
  if (!(clamp_eps > 0.0 && clamp_eps < 1.0))
    throw InvalidSchedule("overreaction clamp must be in (0,1), got " + std::to_string(clamp_eps));
  WeightSchedule s;
  s.kind_ = Kind::Overreacting;
  s.param_ = base;
  s.clamp_eps_ = clamp_eps;
  return s;
}

WeightSchedule WeightSchedule::custom(CustomFn fn, bool validated) {
  if (!fn) throw InvalidSchedule("custom schedule requires a weight function");
  WeightSchedule s;
  s.kind_ = Kind::Custom;
  s.fn_ = std::move(fn);
  s.validated_ = validated;
  return s;
}

double WeightSchedule::base_gamma(std::uint64_t n) const {
  switch (kind_) {
    case Kind::PureBayes:
      return 1.0;
    case Kind::PowerLaw:
      return std::pow(static_cast<double>(n), -param_);
    case Kind::LogPower: {
      const double g = std::pow(std::log(static_cast<double>(n) + 1.0), -param_);
      return g < 1.0 ? g : 1.0;
    }
    case Kind::Constant:
      return param_;
    case Kind::Overreacting:
      return param_ + 1.0 / static_cast<double>(n);
    case Kind::ObservationDependent:
    case Kind::GeneralizedBayes:
      return base_->base_gamma(n);
    case Kind::Custom:
      throw InvalidSchedule("custom schedules have no closed-form weight");
  }
  return 1.0;
}

const WeightSchedule& WeightSchedule::base() const {
  if (!base_) throw InvalidSchedule("schedule has no base schedule");
  return *base_;
}

std::string WeightSchedule::descriptor() const {
  std::ostringstream out;
  switch (kind_) {
    case Kind::PureBayes:
      out << "bayes";
      break;
    case Kind::PowerLaw:
      out << "power:" << format_double(param_);
      break;
    case Kind::LogPower:
      out << "logpow:" << format_double(param_);
      break;
    case Kind::Constant:
      out << "constant:" << format_double(param_);
      break;
    case Kind::ObservationDependent: {
      out << "obsdep(" << base_->descriptor() << ";";
      for (Index x = 0; x < alpha_.size(); ++x) out << (x ? "," : "") << format_double(alpha_[x]);
      out << ")";
      break;
    }
    case Kind::GeneralizedBayes:
      out << "genbayes(" << base_->descriptor() << ")";
      break;
    case Kind::Overreacting:
      out << "overreact:" << format_double(param_) << ":" << format_double(clamp_eps_);
      break;
    case Kind::Custom:
      out << (validated_ ? "custom" : "custom(unvalidated)");
      break;
  }
  return out.str();
}

namespace {

double parse_real(const std::string& s, const std::string& where) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw InvalidSchedule(where + ": trailing characters in '" + s + "'");
    return v;
  } catch (const InvalidSchedule&) {
    throw;
  } catch (const std::exception&) {
    throw InvalidSchedule(where + ": cannot parse '" + s + "'");
  }
}

}  // namespace

WeightSchedule WeightSchedule::parse(const std::string& spec) {
  if (spec == "bayes") return pure_bayes();
  if (spec.rfind("power:", 0) == 0) return power_law(parse_real(spec.substr(6), "power"));
  if (spec.rfind("logpow:", 0) == 0) return log_power(parse_real(spec.substr(7), "logpow"));
  if (spec.rfind("constant:", 0) == 0) return constant(parse_real(spec.substr(9), "constant"));
  if (spec.rfind("overreact:", 0) == 0) {
    const std::string rest = spec.substr(10);
    const auto colon = rest.find(':');
    if (colon == std::string::npos)
      throw InvalidSchedule("overreact spec needs base and clamp, e.g. overreact:2:0.01");
    return overreacting(parse_real(rest.substr(0, colon), "overreact base"),
                        parse_real(rest.substr(colon + 1), "overreact clamp"));
  }
  if (spec.rfind("genbayes(", 0) == 0 && spec.back() == ')')
    return generalized_bayes(parse(spec.substr(9, spec.size() - 10)));
  if (spec.rfind("obsdep(", 0) == 0 && spec.back() == ')') {
    const std::string inner = spec.substr(7, spec.size() - 8);
    const auto semi = inner.rfind(';');
    if (semi == std::string::npos)
      throw InvalidSchedule("obsdep spec needs base and alphas, e.g. obsdep(power:1;0.5,1)");
    std::vector<double> alphas;
    std::stringstream list(inner.substr(semi + 1));
    std::string tok;
    while (std::getline(list, tok, ','))
      alphas.push_back(parse_real(tok, "obsdep alpha"));
    VectorXd a(static_cast<Index>(alphas.size()));
    for (Index i = 0; i < a.size(); ++i) a[i] = alphas[static_cast<std::size_t>(i)];
    return observation_dependent(parse(inner.substr(0, semi)), std::move(a));
  }
  throw InvalidSchedule("unrecognized schedule spec '" + spec + "'");
}

}  // namespace misspec
