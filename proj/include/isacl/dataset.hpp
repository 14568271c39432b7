#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "isacl/dates.hpp"
#include "isacl/mfnn.hpp"

namespace isacl {

/// A daily cumulative-count series. Rows are strictly increasing dates at
/// daily spacing; day_index numbers days 1..T across the ORIGINAL series,
/// so the test half of a split keeps its global indices.
struct SeriesDataset {
    std::vector<Date> dates;
    std::vector<double> cumulative;
    std::size_t first_day_index = 1;
    /// Monotonicity violations (count drops) collected at load; real-world
    /// reporting corrections make these warnings, not errors.
    std::vector<std::string> warnings;

    std::size_t size() const { return dates.size(); }
    std::size_t day_index(std::size_t row) const { return first_day_index + row; }
};

/// Reads the CSV format `date,cumulative_cases` (ISO dates, non-negative
/// counts). Rows are sorted by date. Throws ParseError (with line number)
/// for malformed rows, empty files, or duplicated dates, and GapError
/// listing every missing date when the series is not daily-contiguous.
SeriesDataset load_series(const std::string& path);

/// Same parser on in-memory text; `source` names the input in errors.
SeriesDataset parse_series(const std::string& text, const std::string& source = "<memory>");

/// Chronological split policy: either the leading floor(ratio*T) rows, or
/// every row dated on or before split_date.
struct SplitPolicy {
    enum class Kind { Ratio, Date } kind = Kind::Ratio;
    double ratio = 0.75;
    Date split_date{};

    static SplitPolicy by_ratio(double r) { return {Kind::Ratio, r, {}}; }
    static SplitPolicy by_date(Date d) { return {Kind::Date, 0.0, d}; }
};

/// Contiguous chronological split; concatenating the halves reproduces the
/// input. Throws std::invalid_argument when either side would be empty or
/// the ratio is outside (0,1).
std::pair<SeriesDataset, SeriesDataset> split(const SeriesDataset& ds, const SplitPolicy& policy);

/// Affine scaling fit on the training half only. Inputs: day_index mapped
/// onto [0,1] over [1, last training day + horizon]. Targets: counts
/// divided by the training maximum.
struct Scaler {
    double input_denominator = 1.0;
    double target_max = 1.0;

    double scale_input(double day_index) const { return day_index / input_denominator; }
    double scale_target(double count) const { return count / target_max; }
    double unscale_target(double y) const { return y * target_max; }

    bool operator==(const Scaler&) const = default;
};

/// Throws std::invalid_argument on an empty train half or a zero maximum
/// count.
Scaler fit_scaler(const SeriesDataset& train, std::size_t horizon);

/// Scaled (day_index -> count) pairs ready for the network.
SampleSet to_samples(const SeriesDataset& ds, const Scaler& scaler);

}  // namespace isacl
