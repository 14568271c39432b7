#include "isacl/metrics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "isacl/errors.hpp"

namespace isacl {

MetricsReport compute_metrics(const std::vector<double>& actual,
                              const std::vector<double>& model,
                              RelativeErrorDenominator denom) {
    if (actual.size() != model.size()) {
        throw std::invalid_argument("compute_metrics: series lengths differ");
    }
    const std::size_t n = actual.size();
    if (n < 2) {
        throw std::invalid_argument("compute_metrics: need at least 2 points");
    }

    const std::vector<double>& den = denom == RelativeErrorDenominator::Model ? model : actual;
    for (std::size_t i = 0; i < n; ++i) {
        if (den[i] == 0.0) {
            throw MetricError("relative error undefined: denominator value at position " +
                                  std::to_string(i) + " is zero",
                              "mape");
        }
    }

    double sum_sq = 0.0, sum_abs = 0.0, sum_rel = 0.0, sum_rel_sq = 0.0, mean_actual = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double diff = actual[i] - model[i];
        const double rel = diff / den[i];
        sum_sq += diff * diff;
        sum_abs += std::fabs(diff);
        sum_rel += std::fabs(rel);
        sum_rel_sq += rel * rel;
        mean_actual += actual[i];
    }
    mean_actual /= static_cast<double>(n);

    double ss_tot = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dev = actual[i] - mean_actual;
        ss_tot += dev * dev;
    }
    if (ss_tot == 0.0) {
        throw MetricError("coefficient of determination undefined: actual series is constant",
                          "r2");
    }

    MetricsReport report;
    const double inv_n = 1.0 / static_cast<double>(n);
    report.rmse = std::sqrt(sum_sq * inv_n);
    report.mae = sum_abs * inv_n;
    report.mape = sum_rel * inv_n;
    report.rmsre = std::sqrt(sum_rel_sq * inv_n);
    report.r2 = 1.0 - sum_sq / ss_tot;
    return report;
}

}  // namespace isacl
