#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "isacl/commands.hpp"
#include "isacl/dates.hpp"
#include "isacl/errors.hpp"

namespace {

/// Bad argument values discovered after CLI parsing (unknown algorithm,
/// malformed bounds); reported as usage errors, exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommonOpts {
    std::string algo = "ISACL";
    std::size_t iters = 500;
    std::size_t pop = 10;
    std::uint64_t seed = 1;
    std::string split_date;
    double split_ratio = 0.75;
    bool split_ratio_set = false;
    bool split_date_set = false;
    std::size_t horizon = 12;
    std::size_t hidden1 = 10;
    std::size_t hidden2 = 10;
    std::string bounds = "-10:10";
    std::string out_dir = "out";
    std::string mape_denominator = "model";
    double learning_rate = 0.5;
};

void add_train_options(CLI::App* cmd, CommonOpts& opts, bool with_algo) {
    if (with_algo) {
        cmd->add_option("--algo", opts.algo,
                        "Training algorithm: MFNN-BP, GA, PSO, GWO, SCA, ISA or ISACL")
            ->capture_default_str();
    }
    cmd->add_option("--iters", opts.iters, "Iterations (epochs for MFNN-BP)")
        ->capture_default_str();
    cmd->add_option("--pop", opts.pop, "Population size")->capture_default_str();
    cmd->add_option("--seed", opts.seed, "Run seed")->capture_default_str();
    auto* ratio = cmd->add_option("--split-ratio", opts.split_ratio,
                                  "Leading fraction of days used for training")
                      ->capture_default_str();
    auto* date = cmd->add_option("--split-date", opts.split_date,
                                 "Last training date (YYYY-MM-DD)");
    ratio->excludes(date);
    date->excludes(ratio);
    cmd->parse_complete_callback([&opts, ratio, date] {
        opts.split_ratio_set = ratio->count() > 0;
        opts.split_date_set = date->count() > 0;
    });
    cmd->add_option("--horizon", opts.horizon, "Forecast horizon in days")
        ->capture_default_str();
    cmd->add_option("--hidden1", opts.hidden1, "Neurons in the first hidden layer")
        ->capture_default_str();
    cmd->add_option("--hidden2", opts.hidden2, "Neurons in the second hidden layer")
        ->capture_default_str();
    cmd->add_option("--bounds", opts.bounds, "Weight search box as LO:HI")
        ->capture_default_str();
    cmd->add_option("--out-dir", opts.out_dir, "Directory for output files")
        ->capture_default_str();
    cmd->add_option("--mape-denominator", opts.mape_denominator,
                    "Denominator of the relative errors")
        ->check(CLI::IsMember({"model", "actual"}))
        ->capture_default_str();
    cmd->add_option("--lr", opts.learning_rate, "Learning rate (MFNN-BP only)")
        ->capture_default_str();
}

isacl::RunConfig build_config(const CommonOpts& opts) {
    isacl::RunConfig cfg;
    const auto algo = isacl::parse_algorithm(opts.algo);
    if (!algo) throw UsageError("unknown algorithm '" + opts.algo + "'");
    cfg.algorithm = *algo;
    cfg.iters = opts.iters;
    cfg.pop_size = opts.pop;
    cfg.seed = opts.seed;
    cfg.net.hidden1 = opts.hidden1;
    cfg.net.hidden2 = opts.hidden2;
    cfg.horizon = opts.horizon;
    cfg.learning_rate = opts.learning_rate;
    cfg.mape_denominator = opts.mape_denominator == "actual"
                               ? isacl::RelativeErrorDenominator::Actual
                               : isacl::RelativeErrorDenominator::Model;

    double lo = 0.0, hi = 0.0;
    char trailing = '\0';
    if (std::sscanf(opts.bounds.c_str(), "%lf:%lf%c", &lo, &hi, &trailing) != 2 || !(lo < hi)) {
        throw UsageError("invalid --bounds '" + opts.bounds + "': expected LO:HI with LO < HI");
    }
    cfg.bound_lower = lo;
    cfg.bound_upper = hi;

    if (opts.split_date_set) {
        try {
            cfg.split = isacl::SplitPolicy::by_date(isacl::parse_date(opts.split_date));
        } catch (const isacl::ParseError& e) {
            throw UsageError(e.what());
        }
    } else {
        cfg.split = isacl::SplitPolicy::by_ratio(opts.split_ratio);
    }
    return cfg;
}

void print_metrics_row(const char* set, const isacl::MetricsReport& m) {
    std::printf("%-6s rmse=%.6g mae=%.6g mape=%.6g rmsre=%.6g r2=%.6g\n", set, m.rmse, m.mae,
                m.mape, m.rmsre, m.r2);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cumulative-case forecasting with metaheuristic-trained neural networks"};
    app.require_subcommand(1);

    std::string data_path;
    std::string model_path;
    CommonOpts opts;
    std::string algos_csv = "MFNN-BP,GA,PSO,GWO,SCA,ISA,ISACL";
    std::size_t runs = 5;

    CLI::App* train = app.add_subcommand("train", "Fit a model to a series");
    train->add_option("--data", data_path, "Input CSV (date,cumulative_cases)")
        ->required()
        ->check(CLI::ExistingFile);
    add_train_options(train, opts, true);

    CLI::App* evaluate = app.add_subcommand("evaluate", "Score a saved model on its series");
    evaluate->add_option("--model", model_path, "Model file from train")
        ->required()
        ->check(CLI::ExistingFile);
    evaluate->add_option("--data", data_path, "Input CSV (date,cumulative_cases)")
        ->required()
        ->check(CLI::ExistingFile);
    evaluate->add_option("--out-dir", opts.out_dir, "Directory for output files")
        ->capture_default_str();

    CLI::App* forecast = app.add_subcommand("forecast", "Extend a saved model past its series");
    forecast->add_option("--model", model_path, "Model file from train")
        ->required()
        ->check(CLI::ExistingFile);
    forecast->add_option("--horizon", opts.horizon, "Days to forecast")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    forecast->add_option("--out-dir", opts.out_dir, "Directory for output files")
        ->capture_default_str();

    CLI::App* compare = app.add_subcommand("compare", "Run an algorithm-by-seed grid");
    compare->add_option("--data", data_path, "Input CSV (date,cumulative_cases)")
        ->required()
        ->check(CLI::ExistingFile);
    compare->add_option("--algos", algos_csv, "Comma-separated algorithm list")
        ->capture_default_str();
    compare->add_option("--runs", runs, "Seeds per algorithm (seed, seed+1, ...)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_train_options(compare, opts, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (train->parsed()) {
            const isacl::RunConfig cfg = build_config(opts);
            const isacl::TrainOutput out = isacl::cmd_train(data_path, cfg, opts.out_dir);
            for (const std::string& w : out.warnings) std::cerr << "warning: " << w << "\n";
            std::printf("model: %s\ntrace: %s\nfinal train mse: %.6g\n", out.model_path.c_str(),
                        out.trace_path.c_str(), out.final_train_mse);
        } else if (evaluate->parsed()) {
            const isacl::EvaluateOutput out =
                isacl::cmd_evaluate(model_path, data_path, opts.out_dir);
            print_metrics_row("train", out.result.train);
            print_metrics_row("test", out.result.test);
            std::printf("report: %s\n", out.report_path.c_str());
        } else if (forecast->parsed()) {
            const isacl::ForecastOutput out =
                isacl::cmd_forecast(model_path, opts.horizon, opts.out_dir);
            for (const isacl::ForecastRow& row : out.rows) {
                std::printf("%s,%.3f\n", isacl::format_date(row.date).c_str(), row.value);
            }
            std::printf("forecast: %s\n", out.csv_path.c_str());
        } else if (compare->parsed()) {
            std::vector<isacl::Algorithm> algorithms;
            std::stringstream ss(algos_csv);
            std::string token;
            while (std::getline(ss, token, ',')) {
                if (token.empty()) continue;
                const auto algo = isacl::parse_algorithm(token);
                if (!algo) throw UsageError("unknown algorithm '" + token + "'");
                algorithms.push_back(*algo);
            }
            if (algorithms.empty()) throw UsageError("no algorithms given");
            const isacl::RunConfig cfg = build_config(opts);
            const isacl::CompareOutput out =
                isacl::cmd_compare(data_path, algorithms, runs, cfg, opts.out_dir);
            std::printf("grid cells: %zu ok, %zu failed\nreport: %s\nruns: %s\nplot: %s\n",
                        out.cells_ok, out.cells_failed, out.report_path.c_str(),
                        out.runs_path.c_str(), out.plot_path.c_str());
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
