#ifndef ADAPL_TRACE_HPP
#define ADAPL_TRACE_HPP

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "adapl/types.hpp"

namespace adapl {

/// Per-coordinate accumulator history is kept only up to this dimension.
inline constexpr std::size_t kPerCoordinateLimit = 64;

/// One iteration of a run. Row k describes the state (x_k, accumulator_k) and the
/// step taken from it.
struct TraceRow {
  std::size_t k = 0;
  double gap = 0.0;           // f(x_k) - f*
  double grad_norm_sq = 0.0;  // ||grad f(x_k)||^2
  double acc_min = 0.0;       // accumulator (y, nu or nu_hat) extrema
  double acc_max = 0.0;
  double denom_min = 0.0;     // sqrt(accumulator) + eps extrema
  double denom_max = 0.0;
  double beta1_k = 0.0;
  double h_eff = 0.0;
  // Theory beta1 schedule only; not part of the CSV schema.
  double theta_lower = 0.0;
  double h1_bound = std::numeric_limits<double>::infinity();

  bool operator==(const TraceRow&) const = default;
};

struct TraceMetadata {
  std::string problem;
  std::string method;
  std::string timing;
  std::string rng_algorithm;
  std::uint64_t seed = 0;
  std::size_t dimension = 0;
  double h = 0.0;
  double epsilon = 0.0;
  double beta2 = 0.0;
  double stop_gap = 0.0;
};

struct Trace {
  TraceMetadata meta;
  std::vector<TraceRow> rows;
  /// rows.size() x dimension, row-major; empty when dimension > kPerCoordinateLimit.
  Vector accumulator_history;
  bool diverged = false;
  std::string stop_reason;

  bool has_per_coordinate() const { return !accumulator_history.empty(); }
  std::span<const double> accumulator(std::size_t row) const {
    return {accumulator_history.data() + row * meta.dimension, meta.dimension};
  }
};

/// Decimal text with 17 significant digits (lossless for doubles).
std::string format_double(double v);

inline constexpr const char* kTraceHeader =
    "k,gap,grad_norm_sq,acc_min,acc_max,denom_min,denom_max,beta1_k,h_eff";

void write_trace_csv(const Trace& trace, std::ostream& out);

/// Parses the CSV schema written by write_trace_csv (the nine schema columns only).
std::vector<TraceRow> read_trace_csv(std::istream& in);

}  // namespace adapl

#endif  // ADAPL_TRACE_HPP
