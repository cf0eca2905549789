#include "misspec/geometry.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>
#include <cmath>

namespace misspec {

namespace {

// Fixed thresholds; desk-scale models are well conditioned.
constexpr double kRankTol = 1e-10;      // singular-value cutoff
constexpr double kFeasResidual = 1e-10; // linear-system residual for basic solutions
constexpr double kVertexDedup = 1e-9;

}  // namespace

VectorXd predictive(const Model& m, const Eigen::Ref<const VectorXd>& q) {
  return m.likelihoods().transpose() * q;
}

VectorXd predictive(const Model& m, const Belief& q) { return predictive(m, q.weights()); }

double cross_entropy(const Model& m, const Eigen::Ref<const VectorXd>& q) {
  const VectorXd p = predictive(m, q);
  double v = 0.0;
  for (Index x = 0; x < p.size(); ++x) v += m.true_dgp()[x] * std::log(p[x]);
  return v;
}

double cross_entropy(const Model& m, const Belief& q) { return cross_entropy(m, q.weights()); }

DriftField drift_field(const Model& m, const Eigen::Ref<const VectorXd>& q) {
  const VectorXd p = predictive(m, q);
  const VectorXd weights = m.true_dgp().cwiseQuotient(p);
  DriftField out;
  out.ratio = m.likelihoods() * weights;
  out.drift = q.cwiseProduct((out.ratio.array() - 1.0).matrix());
  return out;
}

DriftField drift_field(const Model& m, const Belief& q) { return drift_field(m, q.weights()); }

VectorXd cross_entropy_gradient(const Model& m, const Eigen::Ref<const VectorXd>& q) {
  return drift_field(m, q).ratio;
}

double kl_divergence(const Eigen::Ref<const VectorXd>& p, const Eigen::Ref<const VectorXd>& r) {
  if (p.size() != r.size()) throw DimensionMismatch("kl_divergence: size mismatch");
  double v = 0.0;
  for (Index x = 0; x < p.size(); ++x) {
    if (!(p[x] > 0.0 && r[x] > 0.0))
      throw ZeroLikelihood("kl_divergence requires full-support distributions");
    v += p[x] * std::log(p[x] / r[x]);
  }
  return v;
}

namespace detail {

// All basic feasible solutions of { w >= 0 : M w = b }: for every column
// subset with independent columns, solve the restricted system and keep
// consistent non-negative solutions. The feasible set is bounded (it lies
// in a simplex via the normalization row), so it is non-empty exactly when
// a basic solution exists.
std::vector<VectorXd> basic_feasible_solutions(const MatrixXd& M, const VectorXd& b,
                                               double residual_tol) {
  const Index n = M.cols();
  if (n > 16) throw NotSupported("support enumeration limited to 16 columns");
  Eigen::JacobiSVD<MatrixXd> svd(M);
  Index rank = 0;
  for (Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()[i] > kRankTol) ++rank;

  std::vector<VectorXd> found;
  std::vector<Index> cols;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (std::popcount(mask) > static_cast<int>(rank)) continue;
    cols.clear();
    for (Index i = 0; i < n; ++i)
      if (mask & (1u << i)) cols.push_back(i);
    MatrixXd sub(M.rows(), static_cast<Index>(cols.size()));
    for (std::size_t i = 0; i < cols.size(); ++i) sub.col(static_cast<Index>(i)) = M.col(cols[i]);

    Eigen::ColPivHouseholderQR<MatrixXd> qr(sub);
    qr.setThreshold(kRankTol);
    if (qr.rank() < sub.cols()) continue;  // dependent columns: covered by a smaller support
    const VectorXd wsub = qr.solve(b);
    if ((M.rows() ? (sub * wsub - b).cwiseAbs().maxCoeff() : 0.0) > residual_tol) continue;
    if ((wsub.array() < -1e-12).any()) continue;

    VectorXd w = VectorXd::Zero(n);
    for (std::size_t i = 0; i < cols.size(); ++i) w[cols[i]] = std::max(wsub[static_cast<Index>(i)], 0.0);
    bool duplicate = false;
    for (const VectorXd& prev : found)
      if ((prev - w).cwiseAbs().maxCoeff() < kVertexDedup) {
        duplicate = true;
        break;
      }
    if (!duplicate) found.push_back(std::move(w));
  }
  return found;
}

bool in_convex_hull(const MatrixXd& points, const Eigen::Ref<const VectorXd>& target,
                    double residual_tol) {
  const Index n = points.rows();
  const Index d = points.cols();
  MatrixXd M(d + 1, n);
  M.topRows(d) = points.transpose();
  M.bottomRows(1).setOnes();
  VectorXd b(d + 1);
  b.head(d) = target;
  b[d] = 1.0;
  return !basic_feasible_solutions(M, b, residual_tol).empty();
}

}  // namespace detail

MixtureSet mixture_set(const Model& m) {
  const Index k = m.n_params();
  const Index n = m.n_obs();
  MatrixXd M(n + 1, k);
  M.topRows(n) = m.likelihoods().transpose();
  M.bottomRows(1).setOnes();
  VectorXd b(n + 1);
  b.head(n) = m.true_dgp();
  b[n] = 1.0;

  MixtureSet out;
  auto vertices = detail::basic_feasible_solutions(M, b, kFeasResidual);
  if (vertices.empty()) return out;  // dimension -1, empty

  Eigen::JacobiSVD<MatrixXd> svd(M, Eigen::ComputeFullV);
  Index rank = 0;
  for (Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()[i] > kRankTol) ++rank;
  out.dimension = static_cast<int>(k - rank);
  out.base_point = vertices.front();
  out.directions = svd.matrixV().rightCols(k - rank);
  if (out.dimension <= 2) out.vertices = std::move(vertices);
  return out;
}

bool is_full(const Model& m) {
  const Index k = m.n_params();
  const Index n = m.n_obs();
  if (n == 1) return true;  // tangent space is trivial
  if (k == 1) return false;
  MatrixXd diffs(k - 1, n);
  for (Index t = 1; t < k; ++t) diffs.row(t - 1) = m.likelihoods().row(t) - m.likelihoods().row(0);
  Eigen::JacobiSVD<MatrixXd> svd(diffs);
  Index rank = 0;
  for (Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()[i] > kRankTol) ++rank;
  return rank == n - 1;
}

bool is_convex_independent(const Model& m) {
  const Index k = m.n_params();
  if (k > 8) throw NotSupported("convex independence test limited to 8 parameters");
  if (k == 1) return true;
  for (Index t = 0; t < k; ++t) {
    MatrixXd others(k - 1, m.n_obs());
    Index r = 0;
    for (Index s = 0; s < k; ++s)
      if (s != t) others.row(r++) = m.likelihoods().row(s);
    if (detail::in_convex_hull(others, m.likelihoods().row(t).transpose(), 1e-9)) return false;
  }
  return true;
}

bool is_tight(const Model& m) {
  return m.n_params() == m.n_obs() && is_full(m) && is_convex_independent(m);
}

double growth_rate(const Model& m, const Eigen::Ref<const VectorXd>& q, double gamma, Index theta) {
  if (!(gamma > 0.0 && gamma < 1.0))
    throw InvalidSchedule("growth rate requires a constant weight in (0,1)");
  if (theta < 0 || theta >= m.n_params())
    throw IndexOutOfRange("growth_rate: parameter index out of range");
  const VectorXd p = predictive(m, q);
  double r = 0.0;
  for (Index x = 0; x < p.size(); ++x)
    r += m.true_dgp()[x] * std::log((1.0 - gamma) + gamma * m.likelihoods()(theta, x) / p[x]);
  return r;
}

VectorXd reweighted_dgp(const Model& m, const Eigen::Ref<const VectorXd>& alpha) {
  if (alpha.size() != m.n_obs())
    throw DimensionMismatch("reweighted_dgp: alpha must have one entry per observation");
  for (Index x = 0; x < alpha.size(); ++x)
    if (!(alpha[x] > 0.0 && alpha[x] <= 1.0))
      throw InvalidSchedule("observation weight alpha must lie in (0,1]");
  VectorXd w = m.true_dgp().cwiseProduct(alpha);
  return w / w.sum();
}

}  // namespace misspec
