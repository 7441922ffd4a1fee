#ifndef ADAPL_OPTIMIZERS_HPP
#define ADAPL_OPTIMIZERS_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

#include "adapl/oracle.hpp"
#include "adapl/problems.hpp"
#include "adapl/rng.hpp"
#include "adapl/trace.hpp"
#include "adapl/types.hpp"

namespace adapl {

/// Whether x is divided by sqrt(y_{k+1}) (deterministic AdaGrad) or sqrt(y_k)
/// (stochastic AdaGrad).
enum class DenominatorTiming { post_update, pre_update };

std::string_view to_string(DenominatorTiming t);

/// Step size h > 0 and epsilon in (0, 1); validated on construction.
class StepParams {
 public:
  StepParams(double h, double epsilon);
  double h() const { return h_; }
  double epsilon() const { return epsilon_; }

 private:
  double h_;
  double epsilon_;
};

struct AdaGradState {
  Vector x;
  Vector y;  // accumulated squared gradients; all entries equal in norm mode
  std::size_t k = 0;
  bool norm_mode = false;
  DenominatorTiming timing = DenominatorTiming::post_update;

  static AdaGradState initial(Vector x0, bool norm_mode = false,
                              DenominatorTiming timing = DenominatorTiming::post_update);
};

/// y' = y + g^2, x' = x - h g / (sqrt(y') + eps). Requires post-update timing.
AdaGradState adagrad_step(AdaGradState state, std::span<const double> gradient,
                          const StepParams& params);

/// x' = x - h g / (sqrt(y) + eps), then y' = y + g^2. Requires pre-update timing.
AdaGradState adagrad_stochastic_step(AdaGradState state, std::span<const double> gradient,
                                     const StepParams& params);

enum class AdamVariant { adam, amsgrad, adabelief };

std::string_view to_string(AdamVariant v);

/// h, eps and beta2 in [0, 1); validated on construction.
class AdamParams {
 public:
  AdamParams(double h, double epsilon, double beta2);
  double h() const { return step_.h(); }
  double epsilon() const { return step_.epsilon(); }
  double beta2() const { return beta2_; }

 private:
  StepParams step_;
  double beta2_;
};

struct AdamState {
  Vector x;
  Vector mu;
  Vector nu;
  Vector nu_hat;  // running max of nu; amsgrad only
  std::size_t k = 0;
  AdamVariant variant = AdamVariant::adam;
  bool bias_correction = false;

  static AdamState initial(Vector x0, AdamVariant variant = AdamVariant::adam,
                           bool bias_correction = false);

  /// The vector whose square root (plus eps) divides the step.
  const Vector& denominator_source() const {
    return variant == AdamVariant::amsgrad ? nu_hat : nu;
  }
};

/// h * sqrt(1 - beta2^(k+1)) / (1 - beta1^(k+1)).
double bias_corrected_step(double h, double beta1, double beta2, std::size_t k);

AdamState adam_step(AdamState state, std::span<const double> gradient, const AdamParams& params,
                    double beta1);

class Beta1Schedule {
 public:
  enum class Kind { constant, theory };

  static Beta1Schedule constant(double beta1);
  /// beta1_k = gamma * min_i 1 / (1 + |mu_i| / |g_i|) over coordinates with g_i != 0.
  static Beta1Schedule theory(double gamma = 0.5);

  Kind kind() const { return kind_; }
  double value() const { return value_; }
  double gamma() const { return gamma_; }

  bool operator==(const Beta1Schedule&) const = default;

 private:
  Beta1Schedule(Kind kind, double value, double gamma) : kind_(kind), value_(value), gamma_(gamma) {}

  Kind kind_;
  double value_;
  double gamma_;
};

struct Beta1Choice {
  double beta1;
  /// min_i 1 / (1 + |mu_i| / |g_i|); 1 when no coordinate constrains it.
  double admissible_bound;
  /// beta1 / (1 - beta1) * max_i |mu_i| / |g_i|; any theta above it keeps the
  /// Adam descent inequality solvable.
  double theta_lower;
};

Beta1Choice next_beta1(const Beta1Schedule& schedule, const AdamState& state,
                       std::span<const double> gradient);

/// min_i p_i / q_i over coordinates with mu_i != 0 and g_i != 0, evaluated at
/// theta = (theta_lower + 1) / 2. Infinite when no coordinate constrains h.
double adam_step_bound(const Beta1Choice& choice, std::span<const double> mu,
                       std::span<const double> gradient, double smoothness);

enum class Method { adagrad, adagrad_norm, adam, amsgrad, adabelief };

std::string_view to_string(Method m);
bool is_adam_family(Method m);

struct MethodConfig {
  Method method = Method::adagrad;
  double h = 0.0;
  double epsilon = 0.5;
  double beta2 = 0.999;
  Beta1Schedule beta1 = Beta1Schedule::constant(0.9);
  bool bias_correction = false;
  /// Unset: post-update for deterministic oracles, pre-update for stochastic ones.
  std::optional<DenominatorTiming> timing;
};

inline constexpr double kDefaultStopGap = 1e-14;

struct RunOptions {
  std::size_t iterations = 100'000;
  double stop_gap = kDefaultStopGap;
  Vector x0;
};

/// Runs until `iterations` steps are taken or the gap reaches stop_gap. A non-finite
/// objective or iterate ends the run with trace.diverged set.
Trace run(const Problem& problem, const GradientOracle& oracle, const MethodConfig& method,
          const RunOptions& options, RngStream& rng);

}  // namespace adapl

#endif  // ADAPL_OPTIMIZERS_HPP
