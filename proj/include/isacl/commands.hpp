#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isacl/dataset.hpp"
#include "isacl/metrics.hpp"
#include "isacl/model_record.hpp"
#include "isacl/optimizer.hpp"

namespace isacl {

enum class Algorithm { MfnnBp, Ga, Pso, Gwo, Sca, Isa, Isacl };

inline constexpr Algorithm kAllAlgorithms[] = {Algorithm::MfnnBp, Algorithm::Ga, Algorithm::Pso,
                                               Algorithm::Gwo,    Algorithm::Sca, Algorithm::Isa,
                                               Algorithm::Isacl};

std::string algorithm_name(Algorithm a);

/// Case-insensitive lookup of the names above; empty for unknown names.
std::optional<Algorithm> parse_algorithm(const std::string& name);

/// Everything one training run needs. Defaults follow the reference
/// protocol: 500 iterations, population 10, 10+10 hidden neurons, weight
/// box [-10,10], 12-day horizon.
struct RunConfig {
    Algorithm algorithm = Algorithm::Isacl;
    std::size_t iters = 500;
    std::size_t pop_size = 10;
    std::uint64_t seed = 1;
    NetworkSpec net;
    double bound_lower = -10.0;
    double bound_upper = 10.0;
    SplitPolicy split = SplitPolicy::by_ratio(0.75);
    std::size_t horizon = 12;
    RelativeErrorDenominator mape_denominator = RelativeErrorDenominator::Model;
    /// Gradient-descent step size, MFNN-BP only.
    double learning_rate = 0.5;
};

/// Builds the configured metaheuristic; MFNN-BP has no Optimizer and
/// returns null (train_on_series handles it separately).
std::unique_ptr<Optimizer> make_optimizer(const RunConfig& config);

struct TrainedRun {
    ModelRecord model;
    std::vector<double> best_per_iter;  // running-min train MSE, one per iteration
    std::size_t eval_count = 0;         // objective calls; 0 for MFNN-BP
    SeriesDataset train;
    SeriesDataset test;
};

/// Splits, fits the scaler on the train half, and trains the configured
/// algorithm on the scaled samples. Deterministic given (series, config).
TrainedRun train_on_series(const SeriesDataset& series, const RunConfig& config);

/// Model outputs in original units for day indices first_day ..
/// first_day+count-1.
std::vector<double> predict_days(const ModelRecord& model, std::size_t first_day,
                                 std::size_t count);

struct EvaluationResult {
    MetricsReport train;
    MetricsReport test;
};

/// Re-splits the series under the model's stored policy and scores both
/// halves. Throws CompatibilityError when the scaler refit on this data
/// disagrees with the stored one (wrong data file for the model).
EvaluationResult evaluate_model(const ModelRecord& model, const SeriesDataset& series);

struct ForecastRow {
    Date date;
    double value = 0.0;
};

/// Day indices T+1 .. T+horizon through the stored scaler and network,
/// dated continuously after the source series. Throws
/// std::invalid_argument when horizon is 0.
std::vector<ForecastRow> forecast_model(const ModelRecord& model, std::size_t horizon);

struct TrainOutput {
    std::string model_path;
    std::string trace_path;
    double final_train_mse = 0.0;
    std::vector<std::string> warnings;
};

/// Trains and writes <out_dir>/model.txt plus <out_dir>/trace.csv
/// (columns iteration,best_mse, one row per iteration).
TrainOutput cmd_train(const std::string& data_path, const RunConfig& config,
                      const std::string& out_dir);

struct EvaluateOutput {
    EvaluationResult result;
    std::string report_path;
};

/// Scores a saved model against a data file and writes
/// <out_dir>/report.csv (columns set,rmse,mae,mape,rmsre,r2).
EvaluateOutput cmd_evaluate(const std::string& model_path, const std::string& data_path,
                            const std::string& out_dir);

struct ForecastOutput {
    std::vector<ForecastRow> rows;
    std::string csv_path;
};

/// Writes <out_dir>/forecast.csv (columns date,forecast).
ForecastOutput cmd_forecast(const std::string& model_path, std::size_t horizon,
                            const std::string& out_dir);

struct CompareOutput {
    std::string report_path;  // per-algorithm best and median metrics
    std::string runs_path;    // every (algorithm, seed) cell
    std::string plot_path;    // day_index, actual, one column per algorithm
    std::size_t cells_ok = 0;
    std::size_t cells_failed = 0;
};

/// Runs the (algorithm x seed) grid with seeds base_config.seed ..
/// base_config.seed + n_seeds - 1. Cells may execute concurrently; any
/// cell failure is recorded in the runs report without aborting the grid.
/// Output assembly is ordered by (algorithm position, seed), so repeated
/// invocations produce identical bytes apart from `# created` lines.
CompareOutput cmd_compare(const std::string& data_path, const std::vector<Algorithm>& algorithms,
                          std::size_t n_seeds, const RunConfig& base_config,
                          const std::string& out_dir);

}  // namespace isacl
