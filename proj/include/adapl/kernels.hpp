#ifndef ADAPL_KERNELS_HPP
#define ADAPL_KERNELS_HPP

// Data-parallel certification kernels. Each has a serial reference and an
// OpenMP path; both must return identical results (only min/max/count
// reductions are used, so the schedule cannot change the answer).

#include <cstddef>
#include <span>

#include "adapl/problems.hpp"
#include "adapl/rng.hpp"
#include "adapl/types.hpp"

namespace adapl {

enum class Execution { serial, parallel };

namespace kernels {

/// n points of a fixed dimension, stored contiguously.
struct PointSet {
  std::size_t dimension = 0;
  Vector coords;

  std::size_t size() const { return dimension == 0 ? 0 : coords.size() / dimension; }
  std::span<const double> operator[](std::size_t i) const {
    return {coords.data() + i * dimension, dimension};
  }
};

/// Uniform samples from a box, drawn sequentially so the set depends only on the stream.
PointSet sample_box(const Box& box, std::size_t n, RngStream& rng);

struct PlScan {
  double min_ratio;   // +inf when no point was usable
  std::size_t used;   // points with f - f* >= degeneracy threshold
};

/// Minimum of ||grad f||^2 / (2 (f - f*)) over the non-degenerate points.
PlScan pl_ratio_scan(const Problem& problem, const PointSet& points, double degenerate_gap,
                     Execution exec);

/// Points where 1/2 ||grad f||^2 < slack * l * (f - f*).
std::size_t pl_violations(const Problem& problem, const PointSet& points, double slack,
                          Execution exec);

/// max ||grad f(x_j) - grad f(y_j)|| / ||x_j - y_j|| over paired points.
double smoothness_ratio_max(const Problem& problem, const PointSet& xs, const PointSet& ys,
                            Execution exec);

/// max over points of ||fd - grad f|| / max(1, ||grad f||), central differences.
double gradient_check_max_error(const Problem& problem, const PointSet& points, double step,
                                Execution exec);

}  // namespace kernels
}  // namespace adapl

#endif  // ADAPL_KERNELS_HPP
