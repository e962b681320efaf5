#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "voi/errors.hpp"

namespace voi {

/// Default enumeration budget for the exact (exponential) solvers.
inline constexpr std::uint64_t kDefaultSizeCap = 10'000'000;

/// Logarithm base used for every entropy-valued quantity. All identities in
/// this library are linear in the entropy unit, so the base only rescales
/// results; the default is the natural logarithm (nats).
enum class LogBase { natural, two, ten };

/// Multiplier converting a nat-valued entropy to the requested base.
double log_scale(LogBase base);

/// A probability distribution on a finite abstract alphabet {0, ..., n-1}.
///
/// The constructor rejects components below -1e-12 and raw sums farther than
/// 1e-6 from one; anything admissible is clamped/rescaled so that the stored
/// components are nonnegative and sum to one within 1e-12.
class Distribution {
 public:
  explicit Distribution(std::vector<double> values);

  std::size_t size() const noexcept { return p_.size(); }
  double operator[](std::size_t i) const { return p_[i]; }
  const std::vector<double>& probs() const noexcept { return p_; }

  std::vector<double>::const_iterator begin() const noexcept { return p_.begin(); }
  std::vector<double>::const_iterator end() const noexcept { return p_.end(); }

 private:
  std::vector<double> p_;
};

/// Dense row-major matrix of doubles.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, double fill = 0.0)
      : rows(r), cols(c), data(r * c, fill) {}

  double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

/// A joint distribution on the product of two finite alphabets: an n x m
/// nonnegative matrix summing to one. Marginals are valid Distributions.
class JointDistribution {
 public:
  explicit JointDistribution(Matrix theta);

  const Matrix& theta() const noexcept { return theta_; }
  std::size_t rows() const noexcept { return theta_.rows; }
  std::size_t cols() const noexcept { return theta_.cols; }

  Distribution row_marginal() const;
  Distribution col_marginal() const;

 private:
  Matrix theta_;
};

/// Whether a conditional matrix maps row-alphabet states to column laws
/// (forward, the usual P with row i = law of Y given X = i) or the other way
/// around (reverse, Q with row j = law of X given Y = j).
enum class Orientation { forward, reverse };

/// A row-stochastic matrix of conditional probabilities.
class ConditionalMatrix {
 public:
  explicit ConditionalMatrix(Matrix rows, Orientation orientation = Orientation::forward);

  const Matrix& matrix() const noexcept { return m_; }
  Orientation orientation() const noexcept { return orient_; }
  std::size_t rows() const noexcept { return m_.rows; }
  std::size_t cols() const noexcept { return m_.cols; }
  double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

 private:
  Matrix m_;
  Orientation orient_;
};

/// -r log r, exactly zero at r = 0 and r = 1. Throws for r outside [0,1]
/// beyond 1e-12.
double point_entropy(double r, LogBase base = LogBase::natural);

/// Shannon entropy of a distribution; lies in [0, log n].
double entropy(const Distribution& phi, LogBase base = LogBase::natural);

/// Total variation distance (1/2) sum |phi_i - psi_i| between two
/// distributions on a common alphabet.
double total_variation(const Distribution& phi, const Distribution& psi);

/// The uniform distribution with m components.
Distribution uniform(std::size_t m);

/// Theta = Diag(phi) P: the joint distribution induced by a marginal and a
/// forward conditional matrix. The row marginal of the result is phi.
JointDistribution joint_from_conditional(const Distribution& phi, const ConditionalMatrix& P);

/// Recovers the conditional matrix from a joint distribution. A row (or, in
/// reverse orientation, a column) of zero marginal mass gets the opposite
/// marginal as its conditional law -- conditioning on an impossible event is
/// conventionally resolved to the unconditional distribution.
ConditionalMatrix conditional_from_joint(const JointDistribution& theta,
                                         Orientation orientation = Orientation::forward);

/// Conditional entropy H(Y|X) = sum_i phi_i H(row i of P). Zero-mass rows
/// contribute nothing regardless of their contents.
double conditional_entropy(const Distribution& phi, const ConditionalMatrix& P,
                           LogBase base = LogBase::natural);

/// Mutual information H(X) + H(Y) - H(X,Y) of a joint distribution;
/// nonnegative, zero exactly for product joints.
double mutual_information(const JointDistribution& theta, LogBase base = LogBase::natural);

namespace detail {

/// -x log x without domain checks; zero for x <= 0. Internal building block.
double h_nats(double x);

/// Entropy in nats of a raw nonnegative vector (no normalization check).
double entropy_nats(const std::vector<double>& v);

}  // namespace detail

}  // namespace voi
