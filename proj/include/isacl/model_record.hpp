#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "isacl/dataset.hpp"
#include "isacl/dates.hpp"
#include "isacl/metrics.hpp"
#include "isacl/mfnn.hpp"

namespace isacl {

/// Everything needed to reload and apply a trained model: the run
/// configuration, the fitted scaler, the source-series frame, and the flat
/// parameter vector. Serialized as a versioned key-value text record with
/// parameters at full precision; the only non-deterministic line is the
/// leading `# created` timestamp comment.
struct ModelRecord {
    int version = 1;
    std::string algorithm;
    std::uint64_t seed = 0;
    std::size_t iters = 0;
    std::size_t pop_size = 0;
    NetworkSpec net;
    double bound_lower = -10.0;
    double bound_upper = 10.0;
    SplitPolicy split;
    std::size_t horizon = 12;
    Scaler scaler;
    Date series_start{};
    std::size_t series_length = 0;
    RelativeErrorDenominator mape_denominator = RelativeErrorDenominator::Model;
    double final_train_mse = 0.0;
    std::vector<double> params;
};

/// Writes the record; `created` is the timestamp comment body (pass a fixed
/// string for reproducible files). Throws ParseError when the file cannot
/// be written.
void save_model(const ModelRecord& record, const std::string& path, const std::string& created);

/// Reads a record back, validating the version marker and the parameter
/// count. Throws ParseError with the offending line on malformed input.
ModelRecord load_model(const std::string& path);

}  // namespace isacl
