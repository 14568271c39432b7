#include "isacl/model_record.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "isacl/errors.hpp"

namespace isacl {

namespace {

constexpr const char* kMagic = "# isacl-forecast model v1";

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double parse_double(const std::string& text, std::size_t line_no) {
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (text.empty() || end != text.c_str() + text.size()) {
        throw ParseError("model record: invalid number '" + text + "'", line_no);
    }
    return v;
}

std::uint64_t parse_u64(const std::string& text, std::size_t line_no) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(text.c_str(), &end, 10);
    if (text.empty() || end != text.c_str() + text.size()) {
        throw ParseError("model record: invalid integer '" + text + "'", line_no);
    }
    return v;
}

}  // namespace

void save_model(const ModelRecord& record, const std::string& path, const std::string& created) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError(path + ": cannot write model file", 0);
    out << kMagic << "\n";
    out << "# created " << created << "\n";
    out << "algorithm " << record.algorithm << "\n";
    out << "seed " << record.seed << "\n";
    out << "iters " << record.iters << "\n";
    out << "pop_size " << record.pop_size << "\n";
    out << "n_inputs " << record.net.n_inputs << "\n";
    out << "hidden1 " << record.net.hidden1 << "\n";
    out << "hidden2 " << record.net.hidden2 << "\n";
    out << "n_outputs " << record.net.n_outputs << "\n";
    out << "bound_lower " << fmt(record.bound_lower) << "\n";
    out << "bound_upper " << fmt(record.bound_upper) << "\n";
    if (record.split.kind == SplitPolicy::Kind::Ratio) {
        out << "split_kind ratio\n";
        out << "split_ratio " << fmt(record.split.ratio) << "\n";
    } else {
        out << "split_kind date\n";
        out << "split_date " << format_date(record.split.split_date) << "\n";
    }
    out << "horizon " << record.horizon << "\n";
    out << "input_denominator " << fmt(record.scaler.input_denominator) << "\n";
    out << "target_max " << fmt(record.scaler.target_max) << "\n";
    out << "series_start " << format_date(record.series_start) << "\n";
    out << "series_length " << record.series_length << "\n";
    out << "mape_denominator "
        << (record.mape_denominator == RelativeErrorDenominator::Model ? "model" : "actual")
        << "\n";
    out << "final_train_mse " << fmt(record.final_train_mse) << "\n";
    out << "params " << record.params.size() << "\n";
    for (const double p : record.params) out << fmt(p) << "\n";
    if (!out) throw ParseError(path + ": write failed", 0);
}

ModelRecord load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot open model file", 0);

    ModelRecord rec;
    std::string line;
    std::size_t line_no = 0;

    if (!std::getline(in, line)) throw ParseError(path + ": empty model file", 0);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kMagic) {
        throw ParseError(path + ": not a model record (bad version marker)", line_no);
    }

    std::size_t params_expected = 0;
    bool have_params = false;
    while (!have_params && std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const std::size_t space = line.find(' ');
        if (space == std::string::npos) {
            throw ParseError(path + ": malformed key-value line '" + line + "'", line_no);
        }
        const std::string key = line.substr(0, space);
        const std::string value = line.substr(space + 1);
        if (key == "algorithm") rec.algorithm = value;
        else if (key == "seed") rec.seed = parse_u64(value, line_no);
        else if (key == "iters") rec.iters = parse_u64(value, line_no);
        else if (key == "pop_size") rec.pop_size = parse_u64(value, line_no);
        else if (key == "n_inputs") rec.net.n_inputs = parse_u64(value, line_no);
        else if (key == "hidden1") rec.net.hidden1 = parse_u64(value, line_no);
        else if (key == "hidden2") rec.net.hidden2 = parse_u64(value, line_no);
        else if (key == "n_outputs") rec.net.n_outputs = parse_u64(value, line_no);
        else if (key == "bound_lower") rec.bound_lower = parse_double(value, line_no);
        else if (key == "bound_upper") rec.bound_upper = parse_double(value, line_no);
        else if (key == "split_kind") {
            if (value == "ratio") rec.split.kind = SplitPolicy::Kind::Ratio;
            else if (value == "date") rec.split.kind = SplitPolicy::Kind::Date;
            else throw ParseError(path + ": unknown split kind '" + value + "'", line_no);
        } else if (key == "split_ratio") rec.split.ratio = parse_double(value, line_no);
        else if (key == "split_date") rec.split.split_date = parse_date(value);
        else if (key == "horizon") rec.horizon = parse_u64(value, line_no);
        else if (key == "input_denominator") rec.scaler.input_denominator = parse_double(value, line_no);
        else if (key == "target_max") rec.scaler.target_max = parse_double(value, line_no);
        else if (key == "series_start") rec.series_start = parse_date(value);
        else if (key == "series_length") rec.series_length = parse_u64(value, line_no);
        else if (key == "mape_denominator") {
            if (value == "model") rec.mape_denominator = RelativeErrorDenominator::Model;
            else if (value == "actual") rec.mape_denominator = RelativeErrorDenominator::Actual;
            else throw ParseError(path + ": unknown denominator '" + value + "'", line_no);
        } else if (key == "final_train_mse") rec.final_train_mse = parse_double(value, line_no);
        else if (key == "params") {
            params_expected = parse_u64(value, line_no);
            have_params = true;
        } else {
            throw ParseError(path + ": unknown key '" + key + "'", line_no);
        }
    }
    if (!have_params) throw ParseError(path + ": missing params section", line_no);

    rec.params.reserve(params_expected);
    while (rec.params.size() < params_expected && std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        rec.params.push_back(parse_double(line, line_no));
    }
    if (rec.params.size() != params_expected) {
        throw ParseError(path + ": expected " + std::to_string(params_expected) +
                             " parameters, found " + std::to_string(rec.params.size()),
                         line_no);
    }
    if (rec.params.size() != rec.net.dimension()) {
        throw ParseError(path + ": parameter count does not match the network shape", line_no);
    }
    return rec;
}

}  // namespace isacl
