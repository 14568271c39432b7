#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace isacl {

/// Objective returned a non-finite value where no recovery is possible
/// (population initialization and unconditional-move optimizers).
class EvaluationError : public std::runtime_error {
public:
    EvaluationError(const std::string& message, std::vector<double> position)
        : std::runtime_error(message), position_(std::move(position)) {}

    const std::vector<double>& position() const noexcept { return position_; }

private:
    std::vector<double> position_;
};

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& message, std::size_t line = 0)
        : std::runtime_error(message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_ = 0;
};

/// Missing calendar days inside an ingested series.
class GapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class TrainingError : public std::runtime_error {
public:
    TrainingError(const std::string& message, std::size_t epoch)
        : std::runtime_error(message), epoch_(epoch) {}

    std::size_t epoch() const noexcept { return epoch_; }

private:
    std::size_t epoch_ = 0;
};

/// A metric whose formula cannot be evaluated on the given series
/// (division by a zero model value, R^2 on constant actuals).
class MetricError : public std::runtime_error {
public:
    MetricError(const std::string& message, std::string index)
        : std::runtime_error(message), index_(std::move(index)) {}

    /// Name of the offending index: "mape", "rmsre" or "r2".
    const std::string& index() const noexcept { return index_; }

private:
    std::string index_;
};

/// Model record and dataset disagree (scaler parameters, network shape).
class CompatibilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace isacl
