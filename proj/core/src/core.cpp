#include "voi/core.hpp"

#include <cmath>
#include <numeric>

namespace voi {

namespace {
constexpr double kNegativeTol = 1e-12;
constexpr double kNormalizationTol = 1e-6;

std::vector<double> normalized_or_throw(std::vector<double> v, const char* what) {
  if (v.empty()) {
    throw InvalidInput(errc::empty, std::string(what) + ": needs at least one component");
  }
  double sum = 0.0;
  for (double& x : v) {
    if (x < -kNegativeTol) {
      throw InvalidInput(errc::negative_component,
                         std::string(what) + ": negative component " + std::to_string(x));
    }
    if (x < 0.0) x = 0.0;
    sum += x;
  }
  if (std::abs(sum - 1.0) > kNormalizationTol) {
    throw InvalidInput(errc::not_normalized,
                       std::string(what) + ": components sum to " + std::to_string(sum));
  }
  for (double& x : v) x /= sum;
  return v;
}
}  // namespace

double log_scale(LogBase base) {
  switch (base) {
    case LogBase::two:
      return 1.0 / std::log(2.0);
    case LogBase::ten:
      return 1.0 / std::log(10.0);
    case LogBase::natural:
    default:
      return 1.0;
  }
}

Distribution::Distribution(std::vector<double> values)
    : p_(normalized_or_throw(std::move(values), "distribution")) {}

JointDistribution::JointDistribution(Matrix theta) : theta_(std::move(theta)) {
  if (theta_.rows == 0 || theta_.cols == 0) {
    throw InvalidInput(errc::empty, "joint distribution: empty matrix");
  }
  theta_.data = normalized_or_throw(std::move(theta_.data), "joint distribution");
}

Distribution JointDistribution::row_marginal() const {
  std::vector<double> m(theta_.rows, 0.0);
  for (std::size_t i = 0; i < theta_.rows; ++i)
    for (std::size_t j = 0; j < theta_.cols; ++j) m[i] += theta_(i, j);
  return Distribution(std::move(m));
}

Distribution JointDistribution::col_marginal() const {
  std::vector<double> m(theta_.cols, 0.0);
  for (std::size_t i = 0; i < theta_.rows; ++i)
    for (std::size_t j = 0; j < theta_.cols; ++j) m[j] += theta_(i, j);
  return Distribution(std::move(m));
}

ConditionalMatrix::ConditionalMatrix(Matrix rows, Orientation orientation)
    : m_(std::move(rows)), orient_(orientation) {
  if (m_.rows == 0 || m_.cols == 0) {
    throw InvalidInput(errc::empty, "conditional matrix: empty");
  }
  for (std::size_t i = 0; i < m_.rows; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < m_.cols; ++j) {
      double& x = m_(i, j);
      if (x < -kNegativeTol) {
        throw InvalidInput(errc::negative_component, "conditional matrix: negative entry");
      }
      if (x < 0.0) x = 0.0;
      sum += x;
    }
    if (std::abs(sum - 1.0) > kNormalizationTol) {
      throw InvalidInput(errc::not_normalized,
                         "conditional matrix: row " + std::to_string(i) + " sums to " +
                             std::to_string(sum));
    }
    for (std::size_t j = 0; j < m_.cols; ++j) m_(i, j) /= sum;
  }
}

namespace detail {

double h_nats(double x) { return x > 0.0 ? -x * std::log(x) : 0.0; }

double entropy_nats(const std::vector<double>& v) {
  double h = 0.0;
  for (double x : v) h += h_nats(x);
  return h;
}

}  // namespace detail

double point_entropy(double r, LogBase base) {
  if (r < -kNegativeTol || r > 1.0 + kNegativeTol) {
    throw InvalidInput(errc::domain_error,
                       "point_entropy: argument " + std::to_string(r) + " outside [0,1]");
  }
  if (r <= 0.0 || r >= 1.0) return 0.0;
  return detail::h_nats(r) * log_scale(base);
}

double entropy(const Distribution& phi, LogBase base) {
  return detail::entropy_nats(phi.probs()) * log_scale(base);
}

double total_variation(const Distribution& phi, const Distribution& psi) {
  if (phi.size() != psi.size()) {
    throw InvalidInput(errc::dimension_mismatch, "total_variation: dimensions differ");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < phi.size(); ++i) s += std::abs(phi[i] - psi[i]);
  return 0.5 * s;
}

Distribution uniform(std::size_t m) {
  if (m == 0) throw InvalidInput(errc::empty, "uniform: m must be positive");
  return Distribution(std::vector<double>(m, 1.0 / static_cast<double>(m)));
}

JointDistribution joint_from_conditional(const Distribution& phi, const ConditionalMatrix& P) {
  if (P.orientation() != Orientation::forward || P.rows() != phi.size()) {
    throw InvalidInput(errc::dimension_mismatch,
                       "joint_from_conditional: need a forward conditional with one row per "
                       "component of phi");
  }
  Matrix theta(P.rows(), P.cols());
  for (std::size_t i = 0; i < P.rows(); ++i)
    for (std::size_t j = 0; j < P.cols(); ++j) theta(i, j) = phi[i] * P(i, j);
  return JointDistribution(std::move(theta));
}

ConditionalMatrix conditional_from_joint(const JointDistribution& theta, Orientation orientation) {
  const Matrix& t = theta.theta();
  if (orientation == Orientation::forward) {
    Distribution psi = theta.col_marginal();
    Matrix p(t.rows, t.cols);
    for (std::size_t i = 0; i < t.rows; ++i) {
      double rs = 0.0;
      for (std::size_t j = 0; j < t.cols; ++j) rs += t(i, j);
      for (std::size_t j = 0; j < t.cols; ++j) {
        p(i, j) = rs > 0.0 ? t(i, j) / rs : psi[j];
      }
    }
    return ConditionalMatrix(std::move(p), Orientation::forward);
  }
  Distribution phi = theta.row_marginal();
  Matrix q(t.cols, t.rows);
  for (std::size_t j = 0; j < t.cols; ++j) {
    double cs = 0.0;
    for (std::size_t i = 0; i < t.rows; ++i) cs += t(i, j);
    for (std::size_t i = 0; i < t.rows; ++i) {
      q(j, i) = cs > 0.0 ? t(i, j) / cs : phi[i];
    }
  }
  return ConditionalMatrix(std::move(q), Orientation::reverse);
}

double conditional_entropy(const Distribution& phi, const ConditionalMatrix& P, LogBase base) {
  if (P.rows() != phi.size()) {
    throw InvalidInput(errc::dimension_mismatch,
                       "conditional_entropy: phi pairs with the rows of P");
  }
  double j_phi = 0.0;
  for (std::size_t i = 0; i < P.rows(); ++i) {
    if (phi[i] <= 0.0) continue;
    double hr = 0.0;
    for (std::size_t jj = 0; jj < P.cols(); ++jj) hr += detail::h_nats(P(i, jj));
    j_phi += phi[i] * hr;
  }
  return j_phi * log_scale(base);
}

double mutual_information(const JointDistribution& theta, LogBase base) {
  double joint_h = 0.0;
  for (double x : theta.theta().data) joint_h += detail::h_nats(x);
  double mi = detail::entropy_nats(theta.row_marginal().probs()) +
              detail::entropy_nats(theta.col_marginal().probs()) - joint_h;
  return mi * log_scale(base);
}

}  // namespace voi
