#pragma once

#include <vector>

namespace isacl {

/// Denominator of the relative errors (MAPE, RMSRE). Model is the default:
/// the relative error of a prediction is taken against the predicted value
/// itself. Actual gives the conventional definition.
enum class RelativeErrorDenominator { Model, Actual };

struct MetricsReport {
    double rmse = 0.0;
    double mae = 0.0;
    double mape = 0.0;   // mean |(actual - model) / denominator|
    double rmsre = 0.0;  // root mean square of the same ratios
    double r2 = 0.0;     // 1 - SS_res / SS_tot about the actual mean
};

/// Computes all five indices on original-unit series. Throws
/// std::invalid_argument when lengths differ or are below 2, MetricError
/// (index "mape") when a denominator value is zero, and MetricError (index
/// "r2") when the actual series is constant.
MetricsReport compute_metrics(const std::vector<double>& actual,
                              const std::vector<double>& model,
                              RelativeErrorDenominator denom = RelativeErrorDenominator::Model);

}  // namespace isacl
