#ifndef ADAPL_ORACLE_HPP
#define ADAPL_ORACLE_HPP

#include <cstddef>
#include <optional>
#include <span>

#include "adapl/kernels.hpp"
#include "adapl/problems.hpp"
#include "adapl/rng.hpp"
#include "adapl/types.hpp"

namespace adapl {

/// Per-coordinate affine variance bound: Var[g_i] <= V1_i + V2_i |grad_i f|^2.
class NoiseModel {
 public:
  NoiseModel() = default;
  NoiseModel(Vector additive, Vector multiplicative);

  static NoiseModel uniform(std::size_t dimension, double additive, double multiplicative);

  std::size_t dimension() const { return additive_.size(); }
  const Vector& additive() const { return additive_; }
  const Vector& multiplicative() const { return multiplicative_; }

  /// M = max_i V1_i.
  double max_additive() const { return max_additive_; }
  /// M_G = max_i (V2_i + 1).
  double max_gain() const { return max_gain_; }

  double variance(std::size_t i, double grad_i) const {
    return additive_[i] + multiplicative_[i] * grad_i * grad_i;
  }

  bool operator==(const NoiseModel&) const = default;

 private:
  Vector additive_;
  Vector multiplicative_;
  double max_additive_ = 0.0;
  double max_gain_ = 1.0;
};

enum class OracleKind { deterministic, finite_sum, synthetic_noise };

/// Gradient source for a run. Holds configuration only; randomness comes from the
/// caller's RngStream.
class GradientOracle {
 public:
  static GradientOracle deterministic();
  /// One uniformly drawn component per sample, averaged over `batch` independent draws.
  static GradientOracle finite_sum(std::size_t batch = 1);
  /// Full gradient plus zero-mean Gaussian noise with the model's variance, batch-averaged.
  static GradientOracle synthetic(NoiseModel noise, std::size_t batch = 1);

  OracleKind kind() const { return kind_; }
  bool stochastic() const { return kind_ != OracleKind::deterministic; }
  std::size_t batch_size() const { return batch_; }
  const std::optional<NoiseModel>& noise() const { return noise_; }

  void sample(const Problem& problem, std::span<const double> x, RngStream& rng,
              std::span<double> out) const;
  Vector sample(const Problem& problem, std::span<const double> x, RngStream& rng) const;

 private:
  GradientOracle(OracleKind kind, std::size_t batch, std::optional<NoiseModel> noise);

  OracleKind kind_;
  std::size_t batch_;
  std::optional<NoiseModel> noise_;
};

Vector full_gradient(const Problem& problem, std::span<const double> x);

/// Gradient of a uniformly sampled component (mean of `batch` draws).
Vector sample_gradient(const Problem& problem, std::span<const double> x, RngStream& rng,
                       std::size_t batch = 1);

Vector noisy_gradient(const Problem& problem, std::span<const double> x,
                      const NoiseModel& noise, RngStream& rng, std::size_t batch = 1);

struct Moments {
  Vector mean;
  Vector variance;  // unbiased (n - 1 denominator)
};

Moments empirical_moments(const GradientOracle& oracle, const Problem& problem,
                          std::span<const double> x, std::size_t n_samples, RngStream& rng);

/// Smallest affine envelope (V1, V2) covering the measured per-coordinate variances.
///
/// V2_i is the nonnegative least-squares slope of variance against |grad_i f|^2 over
/// the points; V1_i is then raised until every measurement lies under the envelope.
NoiseModel fit_affine_variance(const GradientOracle& oracle, const Problem& problem,
                               const kernels::PointSet& points, std::size_t n_samples,
                               RngStream& rng);

}  // namespace adapl

#endif  // ADAPL_ORACLE_HPP
