#ifndef ADAPL_ANALYSIS_HPP
#define ADAPL_ANALYSIS_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "adapl/oracle.hpp"
#include "adapl/trace.hpp"

namespace adapl {

inline constexpr std::size_t kMinFitRows = 10;
inline constexpr double kLinearMinRSquared = 0.99;
inline constexpr double kLinearMaxRho = 0.9999;
inline constexpr double kLogRepresentableGap = 1e-300;
/// Gaps below floor_factor * stop_gap are numerics rather than dynamics.
inline constexpr double kFloorFactor = 100.0;
inline constexpr std::size_t kMinTailRows = 100;

/// Log-linear fit of the suboptimality gap.
struct RateReport {
  double rho_hat = 1.0;    // exp(slope of log gap against k)
  double max_ratio = 0.0;  // max gap_{k+1} / gap_k inside the window
  double r_squared = 0.0;  // clamped to [0, 1]
  std::size_t k_start = 0;
  std::size_t k_end = 0;   // last row used (after truncation)
  bool linear = false;     // rho_hat <= kLinearMaxRho and r_squared >= kLinearMinRSquared
};

/// Fits rows with k in [k_start, k_end]. The window is cut at the first gap that is
/// not log-representable; fewer than kMinFitRows remaining rows is an error.
RateReport rate_fit(const Trace& trace, std::size_t k_start, std::size_t k_end);

/// Same fit on a bare gap sequence whose first entry is iteration `first_k`.
RateReport rate_fit(std::span<const double> gaps, std::size_t first_k = 0);

enum class CaseKind { all_crossed, none_crossed, mixed };

std::string_view to_string(CaseKind c);

/// Threshold-crossing structure of the accumulator.
struct CaseReport {
  double epsilon = 0.0;
  double threshold = 0.0;  // (1 - eps)^2
  /// First row from which coordinate i stays above the threshold; empty when it never
  /// does. Filled only when the trace kept per-coordinate history.
  std::vector<std::optional<std::size_t>> crossings;
  /// Row from which every coordinate stays above the threshold.
  std::optional<std::size_t> transition;
  CaseKind kind = CaseKind::none_crossed;
  /// max over the trace of max_i (sqrt(acc_i) + eps).
  double denominator_bound = 0.0;
  bool per_coordinate = false;
};

CaseReport case_transitions(const Trace& trace, double epsilon);

struct TheoryBounds {
  double smoothness = 0.0;
  double pl_constant = 0.0;
  double epsilon = 0.0;
  double denominator_bound = 0.0;
  double h = 0.0;
  std::size_t dimension = 0;

  /// min{2 eps^2 / L, B / (2 l), 1 / (2 l)}
  double h_bar = 0.0;
  /// 2 eps^2 / L
  double descent_safe = 0.0;
  bool h_below_h_bar = false;
  bool h_below_descent_safe = false;

  bool stochastic = false;
  double stochastic_bound = 0.0;      // 2 / (L M_G)
  double stochastic_eps_bound = 0.0;  // 2 eps^2 / (L M_G)
  bool h_below_stochastic = false;
  bool h_below_stochastic_eps = false;
  double omega = 0.0;                 // L M d h^2 / (2 B)
  std::optional<double> grad_floor;   // g*; empty when 1 - L M_G h / 2 <= 0
  std::optional<double> grad_floor_total;  // d g*
  std::optional<double> rho_hat;
  std::optional<double> asymptotic_gap;    // omega / (1 - rho_hat), when rho_hat < 1
};

/// Pure function of its inputs. `noise` absent means a deterministic run.
TheoryBounds theory_bounds(double smoothness, double pl_constant, double epsilon,
                           double denominator_bound, double h, std::size_t dimension,
                           const std::optional<NoiseModel>& noise = std::nullopt,
                           std::optional<double> rho_hat = std::nullopt);

struct NoiseFloorReport {
  std::size_t tail_rows = 0;
  double mean_tail_gap = 0.0;
  double mean_tail_grad_norm_sq = 0.0;
  std::optional<double> gap_bound;  // omega / (1 - rho_hat)
  bool pass = false;
  std::optional<bool> grad_above_floor;  // mean tail ||grad f||^2 > d g*
};

/// Tail statistics of a stochastic run against the asymptotic bounds. The gap passes
/// when it is at most max(omega / (1 - rho_hat), stop_gap).
NoiseFloorReport noise_floor_check(const Trace& trace, const TheoryBounds& bounds,
                                   double tail_fraction);

struct FitWindow {
  std::size_t k_start;
  std::size_t k_end;
};

/// Drops the first max(10, T) rows and everything from the first gap below
/// kFloorFactor * stop_gap onward.
FitWindow default_fit_window(const Trace& trace, const CaseReport& cases);

/// Last row index before the gap first drops below kFloorFactor * stop_gap.
std::size_t floor_row(const Trace& trace);

/// max gap_{k+1} / gap_k for k_from <= k < floor_row(trace); 0 when empty.
double max_step_ratio(const Trace& trace, std::size_t k_from);

}  // namespace adapl

#endif  // ADAPL_ANALYSIS_HPP
