#ifndef ADAPL_CONFIG_HPP
#define ADAPL_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "adapl/optimizers.hpp"
#include "adapl/problems.hpp"
#include "adapl/types.hpp"

namespace adapl {

/// Every constraint a config violates, reported together.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<std::string> errors);
  const std::vector<std::string>& errors() const { return errors_; }

 private:
  std::vector<std::string> errors_;
};

struct ProblemSpec {
  std::string kind = "quadratic";  // quadratic | least_squares | logistic | sin_pl
  Vector eigenvalues;
  Vector offset;
  std::vector<Vector> matrix;  // least_squares: A, logistic: features
  std::string matrix_file;
  Vector vector;               // least_squares: b, logistic: labels
  std::string vector_file;
  double reg = 0.0;

  bool operator==(const ProblemSpec&) const = default;
};

struct OracleSpec {
  OracleKind kind = OracleKind::deterministic;
  Vector v1;  // one entry broadcasts to every coordinate
  Vector v2;
  std::size_t batch_size = 1;

  bool operator==(const OracleSpec&) const = default;
};

struct StepSpec {
  std::optional<double> value;
  /// h = fraction * min{2 eps^2 / (L M_G), 1 / (2 l)}, M_G = 1 for exact gradients.
  std::optional<double> theory_fraction;

  bool operator==(const StepSpec&) const = default;
};

struct MethodSpec {
  Method method = Method::adagrad;
  StepSpec h;
  double epsilon = 0.5;
  double beta2 = 0.999;
  Beta1Schedule beta1 = Beta1Schedule::constant(0.9);
  bool bias_correction = false;
  std::optional<DenominatorTiming> timing;

  bool operator==(const MethodSpec&) const = default;
};

struct InitSpec {
  std::optional<Vector> explicit_x0;
  std::optional<std::pair<double, double>> random_box;

  bool operator==(const InitSpec&) const = default;
};

struct RunSpec {
  std::size_t iterations = 100'000;
  double stop_gap = kDefaultStopGap;
  std::vector<std::uint64_t> seeds;
  InitSpec x0;
  double tail_fraction = 0.1;

  bool operator==(const RunSpec&) const = default;
};

struct OutputSpec {
  std::string directory = "out";
  std::string trace = "trace_{seed}.csv";
  std::string report = "report.json";
  std::string plot_data = "plot_{seed}";

  bool operator==(const OutputSpec&) const = default;
};

struct ExperimentConfig {
  std::string name = "experiment";
  ProblemSpec problem;
  OracleSpec oracle;
  MethodSpec method;
  RunSpec run;
  OutputSpec output;
  std::optional<bool> expect_linear;
  /// Directory that relative data-file paths are resolved against. Not serialized.
  std::string base_dir;

  bool operator==(const ExperimentConfig&) const = default;
};

/// Strict parse: unknown keys and range violations are all collected into a ConfigError.
ExperimentConfig parse_config(const std::string& text, const std::string& base_dir = ".");

ExperimentConfig load_config(const std::string& path);

nlohmann::json to_json(const ExperimentConfig& config);

}  // namespace adapl

#endif  // ADAPL_CONFIG_HPP
