#ifndef ADAPL_EXPERIMENT_HPP
#define ADAPL_EXPERIMENT_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "adapl/analysis.hpp"
#include "adapl/config.hpp"
#include "adapl/kernels.hpp"
#include "adapl/optimizers.hpp"
#include "adapl/oracle.hpp"
#include "adapl/problems.hpp"

namespace adapl {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerdictMismatch = 1,
  kExitDiverged = 2,
  kExitConfigError = 3,
  kExitIoError = 4,
};

/// Environment variable that replaces output.directory when set.
inline constexpr const char* kOutputDirEnv = "ADAPL_OUTPUT_DIR";

struct SeedResult {
  std::uint64_t seed = 0;
  Vector x0;
  Trace trace;
  std::optional<RateReport> rate;
  std::string rate_error;
  CaseReport cases;
  std::optional<TheoryBounds> bounds;
  std::optional<NoiseFloorReport> noise_floor;
  std::optional<RateReport> matched_rate;  // deterministic twin of a stochastic run
  std::optional<NoiseModel> noise;         // configured or fitted variance constants
  bool beta1_admissible = true;
};

Problem build_problem(const ProblemSpec& spec, const std::string& base_dir);
GradientOracle build_oracle(const OracleSpec& spec, const Problem& problem);
/// Resolves theory_fraction step sizes against the problem's constants.
MethodConfig build_method(const MethodSpec& spec, const Problem& problem,
                          const GradientOracle& oracle);

/// Runs and analyzes one seed. Owns its RngStream; safe to call concurrently.
SeedResult run_seed(const ExperimentConfig& config, const Problem& problem,
                    const GradientOracle& oracle, const MethodConfig& method, std::uint64_t seed);

/// One SeedResult per configured seed, in config order, regardless of scheduling.
std::vector<SeedResult> run_seeds(const ExperimentConfig& config, const Problem& problem,
                                  Execution exec);

nlohmann::json seed_report(const SeedResult& result, const Problem& problem);
nlohmann::json experiment_report(const ExperimentConfig& config, const Problem& problem,
                                 const std::vector<SeedResult>& results);

/// Writes k,log10_gap to <stem>_gap.csv and k,grad_norm_sq to <stem>_grad.csv.
void emit_plot_data(const Trace& trace, const std::string& stem);

/// Runs every seed and writes traces, plot data and the report. Returns an ExitCode.
int run_experiment(const ExperimentConfig& config, Execution exec, std::ostream& log);

/// Loads, validates and runs a config file.
int run_config_file(const std::string& path, Execution exec, std::ostream& log);

/// Validates a config file without running it.
int check_config_file(const std::string& path, std::ostream& log);

/// Runs every *.json config in a directory (sorted by name); returns the worst code.
int run_suite(const std::string& dir, Execution exec, std::ostream& log);

}  // namespace adapl

#endif  // ADAPL_EXPERIMENT_HPP
