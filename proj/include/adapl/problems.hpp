#ifndef ADAPL_PROBLEMS_HPP
#define ADAPL_PROBLEMS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "adapl/types.hpp"

namespace adapl {

/// Smooth objective, optionally a mean of component losses.
class Objective {
 public:
  virtual ~Objective() = default;

  virtual std::size_t dimension() const = 0;
  virtual double value(std::span<const double> x) const = 0;
  virtual void gradient(std::span<const double> x, std::span<double> out) const = 0;

  /// Number of components in the empirical-risk decomposition, 0 if none.
  virtual std::size_t components() const { return 0; }
  virtual void component_gradient(std::size_t j, std::span<const double> x,
                                  std::span<double> out) const;
};

/// Row-major dense matrix used for problem data.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  Vector data;

  double operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  std::span<const double> row(std::size_t r) const {
    return {data.data() + r * cols, cols};
  }

  static Matrix from_rows(const std::vector<Vector>& rows);
  bool operator==(const Matrix&) const = default;
};

/// An objective together with its certified constants.
///
/// Immutable after construction; copies share the objective.
class Problem {
 public:
  Problem(std::string name, std::shared_ptr<const Objective> objective, double optimum,
          double smoothness, double pl_constant, Box box);

  const std::string& name() const { return name_; }
  std::size_t dimension() const { return objective_->dimension(); }

  double value(std::span<const double> x) const { return objective_->value(x); }
  Vector gradient(std::span<const double> x) const;
  void gradient(std::span<const double> x, std::span<double> out) const {
    objective_->gradient(x, out);
  }

  /// f* (minimum value).
  double optimum() const { return optimum_; }
  /// L, Lipschitz constant of the gradient.
  double smoothness() const { return smoothness_; }
  /// l, constant of the Polyak-Lojasiewicz inequality.
  double pl_constant() const { return pl_constant_; }
  const Box& test_box() const { return box_; }

  bool has_finite_sum() const { return objective_->components() > 0; }
  std::size_t components() const { return objective_->components(); }
  void component_gradient(std::size_t j, std::span<const double> x,
                          std::span<double> out) const {
    objective_->component_gradient(j, x, out);
  }

  /// Gradient norm reached by the reference solver when f* was computed numerically.
  std::optional<double> reference_gradient_norm() const { return reference_gradient_norm_; }
  std::optional<std::size_t> reference_iterations() const { return reference_iterations_; }

  Problem with_reference(double gradient_norm, std::size_t iterations) const;

 private:
  std::string name_;
  std::shared_ptr<const Objective> objective_;
  double optimum_;
  double smoothness_;
  double pl_constant_;
  Box box_;
  std::optional<double> reference_gradient_norm_;
  std::optional<std::size_t> reference_iterations_;
};

inline constexpr double kDefaultBoxHalfWidth = 5.0;
inline constexpr double kDegenerateGap = 1e-12;

/// f(x) = 1/2 (x - offset)^T diag(eigenvalues) (x - offset). Empty offset means zero.
Problem quadratic_problem(const Vector& eigenvalues, const Vector& offset = {});

/// f(x) = ||Ax - b||^2 / (2m) with one component per row. Requires consistent b.
Problem least_squares_problem(const Matrix& a, const Vector& b);

/// Regularized logistic loss; f* comes from a long gradient-descent reference solve.
Problem logistic_problem(const Matrix& features, const Vector& labels, double reg);

/// f(x) = x^2 + 3 sin^2(x) on [-10, 10]: non-convex, PL, with numerically certified l.
Problem sin_pl_problem();

/// Minimum of ||grad f||^2 / (2 (f - f*)) over uniform samples from `box`.
///
/// Points with f - f* below kDegenerateGap are skipped; throws std::runtime_error
/// ("box contains only optima") if every sample is skipped.
double estimate_pl_constant(const Problem& problem, const Box& box, std::size_t samples,
                            std::uint64_t seed = 0x5eed);

/// Reads a CSV matrix: one row per line, comma-separated decimals, no header.
Matrix load_matrix_csv(const std::string& path);

/// Problems used for certification and the descent checks, one per family.
std::vector<Problem> standard_suite();

}  // namespace adapl

#endif  // ADAPL_PROBLEMS_HPP
