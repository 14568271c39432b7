#include "isacl/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "isacl/errors.hpp"

namespace isacl {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_count(const std::string& text, std::size_t line_no) {
    if (text.empty()) throw ParseError("empty count field", line_no);
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size() || !std::isfinite(v)) {
        throw ParseError("invalid count '" + text + "'", line_no);
    }
    if (v < 0.0) throw ParseError("negative count '" + text + "'", line_no);
    return v;
}

}  // namespace

SeriesDataset parse_series(const std::string& text, const std::string& source) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;

    if (!std::getline(in, line)) throw ParseError(source + ": empty file", 0);
    ++line_no;
    if (trim(line) != "date,cumulative_cases") {
        throw ParseError(source + ": expected header 'date,cumulative_cases'", line_no);
    }

    struct Row {
        Date date;
        double count;
        std::size_t line_no;
    };
    std::vector<Row> rows;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty()) {
            // A blank final line is common; blank lines elsewhere are rows.
            if (in.peek() == std::istringstream::traits_type::eof()) break;
            throw ParseError(source + ": blank row", line_no);
        }
        const std::size_t comma = t.find(',');
        if (comma == std::string::npos || t.find(',', comma + 1) != std::string::npos) {
            throw ParseError(source + ": expected exactly two comma-separated fields", line_no);
        }
        Row row;
        try {
            row.date = parse_date(trim(t.substr(0, comma)));
        } catch (const ParseError& e) {
            throw ParseError(source + ": " + e.what(), line_no);
        }
        row.count = parse_count(trim(t.substr(comma + 1)), line_no);
        row.line_no = line_no;
        rows.push_back(row);
    }
    if (rows.empty()) throw ParseError(source + ": no data rows", line_no);

    std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        return std::chrono::sys_days{a.date} < std::chrono::sys_days{b.date};
    });

    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].date == rows[i - 1].date) {
            throw ParseError(source + ": duplicated date " + format_date(rows[i].date),
                             rows[i].line_no);
        }
    }

    std::vector<Date> missing;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        for (long long d = 1; d < days_between(rows[i - 1].date, rows[i].date); ++d) {
            missing.push_back(add_days(rows[i - 1].date, d));
        }
    }
    if (!missing.empty()) {
        std::string list;
        for (const Date& d : missing) {
            if (!list.empty()) list += ", ";
            list += format_date(d);
        }
        throw GapError(source + ": series has gaps, missing dates: " + list);
    }

    SeriesDataset ds;
    ds.dates.reserve(rows.size());
    ds.cumulative.reserve(rows.size());
    for (const Row& r : rows) {
        ds.dates.push_back(r.date);
        ds.cumulative.push_back(r.count);
    }
    for (std::size_t i = 1; i < ds.size(); ++i) {
        if (ds.cumulative[i] < ds.cumulative[i - 1]) {
            std::ostringstream w;
            w << "cumulative count drops at " << format_date(ds.dates[i]) << " ("
              << ds.cumulative[i - 1] << " -> " << ds.cumulative[i] << ")";
            ds.warnings.push_back(w.str());
        }
    }
    return ds;
}

SeriesDataset load_series(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw ParseError(path + ": cannot open file", 0);
    std::ostringstream buf;
    buf << file.rdbuf();
    return parse_series(buf.str(), path);
}

std::pair<SeriesDataset, SeriesDataset> split(const SeriesDataset& ds,
                                              const SplitPolicy& policy) {
    std::size_t train_len = 0;
    if (policy.kind == SplitPolicy::Kind::Ratio) {
        if (!(policy.ratio > 0.0) || !(policy.ratio < 1.0)) {
            throw std::invalid_argument("split: ratio must lie strictly inside (0,1)");
        }
        train_len = static_cast<std::size_t>(
            std::floor(policy.ratio * static_cast<double>(ds.size())));
    } else {
        const auto cutoff = std::chrono::sys_days{policy.split_date};
        while (train_len < ds.size() && std::chrono::sys_days{ds.dates[train_len]} <= cutoff) {
            ++train_len;
        }
    }
    if (train_len == 0 || train_len >= ds.size()) {
        throw std::invalid_argument("split: both halves must be non-empty");
    }

    SeriesDataset train, test;
    train.first_day_index = ds.first_day_index;
    train.dates.assign(ds.dates.begin(), ds.dates.begin() + train_len);
    train.cumulative.assign(ds.cumulative.begin(), ds.cumulative.begin() + train_len);
    test.first_day_index = ds.first_day_index + train_len;
    test.dates.assign(ds.dates.begin() + train_len, ds.dates.end());
    test.cumulative.assign(ds.cumulative.begin() + train_len, ds.cumulative.end());
    return {std::move(train), std::move(test)};
}

Scaler fit_scaler(const SeriesDataset& train, std::size_t horizon) {
    if (train.size() == 0) throw std::invalid_argument("fit_scaler: empty training series");
    Scaler s;
    s.input_denominator =
        static_cast<double>(train.day_index(train.size() - 1) + horizon);
    s.target_max = *std::max_element(train.cumulative.begin(), train.cumulative.end());
    if (s.target_max <= 0.0) {
        throw std::invalid_argument("fit_scaler: maximum training count must be positive");
    }
    return s;
}

SampleSet to_samples(const SeriesDataset& ds, const Scaler& scaler) {
    SampleSet samples;
    samples.n_inputs = 1;
    samples.n_outputs = 1;
    samples.inputs.reserve(ds.size());
    samples.targets.reserve(ds.size());
    for (std::size_t i = 0; i < ds.size(); ++i) {
        samples.inputs.push_back(scaler.scale_input(static_cast<double>(ds.day_index(i))));
        samples.targets.push_back(scaler.scale_target(ds.cumulative[i]));
    }
    return samples;
}

}  // namespace isacl
