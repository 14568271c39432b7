#include "isacl/commands.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "isacl/baselines.hpp"
#include "isacl/errors.hpp"
#include "isacl/isa.hpp"
#include "isacl/isacl.hpp"
#include "isacl/parallel.hpp"

namespace isacl {

namespace {

std::string fmt6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string fmt17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string current_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

std::string output_path(const std::string& out_dir, const std::string& name) {
    std::filesystem::create_directories(out_dir);
    return (std::filesystem::path(out_dir) / name).string();
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error(path + ": cannot write file");
    return out;
}

MetricsReport metrics_for(const ModelRecord& model, const SeriesDataset& part) {
    const std::vector<double> predicted =
        predict_days(model, part.first_day_index, part.size());
    return compute_metrics(part.cumulative, predicted, model.mape_denominator);
}

double median(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

}  // namespace

std::string algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::MfnnBp: return "MFNN-BP";
        case Algorithm::Ga: return "GA";
        case Algorithm::Pso: return "PSO";
        case Algorithm::Gwo: return "GWO";
        case Algorithm::Sca: return "SCA";
        case Algorithm::Isa: return "ISA";
        case Algorithm::Isacl: return "ISACL";
    }
    return "unknown";
}

std::optional<Algorithm> parse_algorithm(const std::string& name) {
    std::string upper(name);
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    for (const Algorithm a : kAllAlgorithms) {
        if (upper == algorithm_name(a)) return a;
    }
    return std::nullopt;
}

std::unique_ptr<Optimizer> make_optimizer(const RunConfig& config) {
    switch (config.algorithm) {
        case Algorithm::MfnnBp: return nullptr;
        case Algorithm::Ga: return std::make_unique<GaOptimizer>();
        case Algorithm::Pso: return std::make_unique<PsoOptimizer>();
        case Algorithm::Gwo: return std::make_unique<GwoOptimizer>();
        case Algorithm::Sca: return std::make_unique<ScaOptimizer>();
        case Algorithm::Isa: return std::make_unique<IsaOptimizer>();
        case Algorithm::Isacl: return std::make_unique<IsaclOptimizer>();
    }
    throw std::invalid_argument("make_optimizer: unknown algorithm");
}

TrainedRun train_on_series(const SeriesDataset& series, const RunConfig& config) {
    if (config.net.n_inputs != 1 || config.net.n_outputs != 1) {
        throw std::invalid_argument("train_on_series: series models use 1 input and 1 output");
    }
    TrainedRun result;
    std::tie(result.train, result.test) = split(series, config.split);
    const Scaler scaler = fit_scaler(result.train, config.horizon);
    auto samples = std::make_shared<SampleSet>(to_samples(result.train, scaler));

    ModelRecord& model = result.model;
    model.algorithm = algorithm_name(config.algorithm);
    model.seed = config.seed;
    model.iters = config.iters;
    model.pop_size = config.pop_size;
    model.net = config.net;
    model.bound_lower = config.bound_lower;
    model.bound_upper = config.bound_upper;
    model.split = config.split;
    model.horizon = config.horizon;
    model.scaler = scaler;
    model.series_start = series.dates.front();
    model.series_length = series.size();
    model.mape_denominator = config.mape_denominator;

    if (config.algorithm == Algorithm::MfnnBp) {
        BpResult bp =
            bp_train(config.net, *samples, config.learning_rate, config.iters, config.seed);
        model.params = std::move(bp.params);
        model.final_train_mse = bp.final_mse;
        result.best_per_iter = std::move(bp.best_per_epoch);
        result.eval_count = 0;
        return result;
    }

    const SearchSpace space = SearchSpace::uniform_box(config.net.dimension(),
                                                       config.bound_lower, config.bound_upper);
    const ObjectiveFn objective = make_mse_objective(config.net, samples);
    std::unique_ptr<Optimizer> optimizer = make_optimizer(config);
    RunTrace trace =
        run(*optimizer, space, config.pop_size, config.iters, config.seed, objective);
    model.params = std::move(trace.final_best.position);
    model.final_train_mse = trace.final_best.fitness;
    result.best_per_iter = std::move(trace.best_per_iter);
    result.eval_count = trace.eval_count;
    return result;
}

std::vector<double> predict_days(const ModelRecord& model, std::size_t first_day,
                                 std::size_t count) {
    std::vector<double> out(count);
    ForwardScratch scratch;
    double y = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        const double x = model.scaler.scale_input(static_cast<double>(first_day + i));
        forward(model.params, model.net, &x, &y, scratch);
        out[i] = model.scaler.unscale_target(y);
    }
    return out;
}

EvaluationResult evaluate_model(const ModelRecord& model, const SeriesDataset& series) {
    if (series.size() != model.series_length ||
        (series.size() > 0 && series.dates.front() != model.series_start)) {
        throw CompatibilityError("data file does not match the model's training series");
    }
    auto [train, test] = split(series, model.split);
    const Scaler refit = fit_scaler(train, model.horizon);
    const double tol = 1e-9;
    if (std::fabs(refit.input_denominator - model.scaler.input_denominator) >
            tol * std::max(1.0, std::fabs(model.scaler.input_denominator)) ||
        std::fabs(refit.target_max - model.scaler.target_max) >
            tol * std::max(1.0, std::fabs(model.scaler.target_max))) {
        throw CompatibilityError("scaler refit on this data disagrees with the stored model");
    }
    return {metrics_for(model, train), metrics_for(model, test)};
}

std::vector<ForecastRow> forecast_model(const ModelRecord& model, std::size_t horizon) {
    if (horizon == 0) throw std::invalid_argument("forecast: horizon must be positive");
    const std::vector<double> values =
        predict_days(model, model.series_length + 1, horizon);
    std::vector<ForecastRow> rows(horizon);
    for (std::size_t i = 0; i < horizon; ++i) {
        rows[i].date = add_days(model.series_start,
                                static_cast<long long>(model.series_length + i));
        rows[i].value = values[i];
    }
    return rows;
}

TrainOutput cmd_train(const std::string& data_path, const RunConfig& config,
                      const std::string& out_dir) {
    const SeriesDataset series = load_series(data_path);
    TrainedRun trained = train_on_series(series, config);

    TrainOutput out;
    out.warnings = series.warnings;
    out.final_train_mse = trained.model.final_train_mse;
    out.model_path = output_path(out_dir, "model.txt");
    save_model(trained.model, out.model_path, current_timestamp());

    out.trace_path = output_path(out_dir, "trace.csv");
    std::ofstream trace = open_output(out.trace_path);
    trace << "# created " << current_timestamp() << "\n";
    trace << "iteration,best_mse\n";
    for (std::size_t i = 0; i < trained.best_per_iter.size(); ++i) {
        trace << (i + 1) << "," << fmt17(trained.best_per_iter[i]) << "\n";
    }
    return out;
}

EvaluateOutput cmd_evaluate(const std::string& model_path, const std::string& data_path,
                            const std::string& out_dir) {
    const ModelRecord model = load_model(model_path);
    const SeriesDataset series = load_series(data_path);

    EvaluateOutput out;
    out.result = evaluate_model(model, series);
    out.report_path = output_path(out_dir, "report.csv");
    std::ofstream report = open_output(out.report_path);
    report << "# created " << current_timestamp() << "\n";
    report << "set,rmse,mae,mape,rmsre,r2\n";
    const auto row = [&report](const char* set, const MetricsReport& m) {
        report << set << "," << fmt6(m.rmse) << "," << fmt6(m.mae) << "," << fmt6(m.mape) << ","
               << fmt6(m.rmsre) << "," << fmt6(m.r2) << "\n";
    };
    row("train", out.result.train);
    row("test", out.result.test);
    return out;
}

ForecastOutput cmd_forecast(const std::string& model_path, std::size_t horizon,
                            const std::string& out_dir) {
    const ModelRecord model = load_model(model_path);

    ForecastOutput out;
    out.rows = forecast_model(model, horizon);
    out.csv_path = output_path(out_dir, "forecast.csv");
    std::ofstream csv = open_output(out.csv_path);
    csv << "# created " << current_timestamp() << "\n";
    csv << "date,forecast\n";
    char buf[32];
    for (const ForecastRow& row : out.rows) {
        std::snprintf(buf, sizeof(buf), "%.3f", row.value);
        csv << format_date(row.date) << "," << buf << "\n";
    }
    return out;
}

CompareOutput cmd_compare(const std::string& data_path, const std::vector<Algorithm>& algorithms,
                          std::size_t n_seeds, const RunConfig& base_config,
                          const std::string& out_dir) {
    if (algorithms.empty()) throw std::invalid_argument("compare: need at least one algorithm");
    if (n_seeds == 0) throw std::invalid_argument("compare: need at least one seed");
    const SeriesDataset series = load_series(data_path);

    struct Cell {
        Algorithm algo{};
        std::uint64_t seed = 0;
        bool ok = false;
        std::string error;
        ModelRecord model;
        MetricsReport train;
        MetricsReport test;
    };
    std::vector<Cell> cells;
    cells.reserve(algorithms.size() * n_seeds);
    for (const Algorithm a : algorithms) {
        for (std::size_t s = 0; s < n_seeds; ++s) {
            Cell c;
            c.algo = a;
            c.seed = base_config.seed + s;
            cells.push_back(std::move(c));
        }
    }

    // Cells share only the immutable series and configuration; each writes
    // its own slot, and the reports below are assembled serially in grid
    // order, so concurrent execution cannot change any output byte.
    const auto run_cell = [&](Cell& cell) {
        try {
            RunConfig cfg = base_config;
            cfg.algorithm = cell.algo;
            cfg.seed = cell.seed;
            TrainedRun trained = train_on_series(series, cfg);
            cell.train = metrics_for(trained.model, trained.train);
            cell.test = metrics_for(trained.model, trained.test);
            cell.model = std::move(trained.model);
            cell.ok = true;
        } catch (const std::exception& e) {
            cell.error = e.what();
        } catch (...) {
            cell.error = "unknown failure";
        }
    };
#ifdef _OPENMP
    if (parallel::enabled() && cells.size() > 1) {
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(cells.size()); ++i) {
            run_cell(cells[static_cast<std::size_t>(i)]);
        }
    } else {
        for (Cell& cell : cells) run_cell(cell);
    }
#else
    for (Cell& cell : cells) run_cell(cell);
#endif

    CompareOutput out;
    for (const Cell& cell : cells) {
        if (cell.ok) ++out.cells_ok;
        else ++out.cells_failed;
    }

    out.runs_path = output_path(out_dir, "comparison_runs.csv");
    {
        std::ofstream runs = open_output(out.runs_path);
        runs << "# created " << current_timestamp() << "\n";
        runs << "algorithm,seed,status,final_train_mse,train_rmse,train_mae,train_mape,"
                "train_rmsre,train_r2,test_rmse,test_mae,test_mape,test_rmsre,test_r2,error\n";
        for (const Cell& cell : cells) {
            runs << algorithm_name(cell.algo) << "," << cell.seed << ","
                 << (cell.ok ? "ok" : "failed") << ",";
            if (cell.ok) {
                runs << fmt6(cell.model.final_train_mse) << "," << fmt6(cell.train.rmse) << ","
                     << fmt6(cell.train.mae) << "," << fmt6(cell.train.mape) << ","
                     << fmt6(cell.train.rmsre) << "," << fmt6(cell.train.r2) << ","
                     << fmt6(cell.test.rmse) << "," << fmt6(cell.test.mae) << ","
                     << fmt6(cell.test.mape) << "," << fmt6(cell.test.rmsre) << ","
                     << fmt6(cell.test.r2) << ",\n";
            } else {
                std::string message = cell.error;
                std::replace(message.begin(), message.end(), ',', ';');
                runs << ",,,,,,,,,,," << message << "\n";
            }
        }
    }

    out.report_path = output_path(out_dir, "comparison.csv");
    {
        std::ofstream report = open_output(out.report_path);
        report << "# created " << current_timestamp() << "\n";
        report << "algorithm,stat,seed,set,rmse,mae,mape,rmsre,r2\n";
        const auto metric_row = [&report](const std::string& algo, const std::string& stat,
                                          const std::string& seed, const char* set,
                                          const MetricsReport& m) {
            report << algo << "," << stat << "," << seed << "," << set << "," << fmt6(m.rmse)
                   << "," << fmt6(m.mae) << "," << fmt6(m.mape) << "," << fmt6(m.rmsre) << ","
                   << fmt6(m.r2) << "\n";
        };
        for (const Algorithm a : algorithms) {
            const Cell* best = nullptr;
            std::vector<const Cell*> ok_cells;
            for (const Cell& cell : cells) {
                if (cell.algo != a || !cell.ok) continue;
                ok_cells.push_back(&cell);
                if (!best || cell.model.final_train_mse < best->model.final_train_mse) {
                    best = &cell;
                }
            }
            if (!best) continue;
            const std::string name = algorithm_name(a);
            metric_row(name, "best", std::to_string(best->seed), "train", best->train);
            metric_row(name, "best", std::to_string(best->seed), "test", best->test);

            MetricsReport med_train, med_test;
            const auto fill = [&ok_cells](MetricsReport& dst, bool use_test) {
                const auto take = [&](double MetricsReport::*field) {
                    std::vector<double> v;
                    v.reserve(ok_cells.size());
                    for (const Cell* c : ok_cells) v.push_back((use_test ? c->test : c->train).*field);
                    return median(std::move(v));
                };
                dst.rmse = take(&MetricsReport::rmse);
                dst.mae = take(&MetricsReport::mae);
                dst.mape = take(&MetricsReport::mape);
                dst.rmsre = take(&MetricsReport::rmsre);
                dst.r2 = take(&MetricsReport::r2);
            };
            fill(med_train, false);
            fill(med_test, true);
            metric_row(name, "median", "", "train", med_train);
            metric_row(name, "median", "", "test", med_test);
        }
    }

    out.plot_path = output_path(out_dir, "comparison_plot.csv");
    {
        std::ofstream plot = open_output(out.plot_path);
        plot << "# created " << current_timestamp() << "\n";
        plot << "day_index,actual";
        std::vector<std::vector<double>> curves(algorithms.size());
        const std::size_t total_days = series.size() + base_config.horizon;
        for (std::size_t ai = 0; ai < algorithms.size(); ++ai) {
            plot << "," << algorithm_name(algorithms[ai]);
            const Cell* best = nullptr;
            for (const Cell& cell : cells) {
                if (cell.algo != algorithms[ai] || !cell.ok) continue;
                if (!best || cell.model.final_train_mse < best->model.final_train_mse) {
                    best = &cell;
                }
            }
            if (best) curves[ai] = predict_days(best->model, 1, total_days);
        }
        plot << "\n";
        for (std::size_t day = 1; day <= total_days; ++day) {
            plot << day << ",";
            if (day <= series.size()) plot << fmt6(series.cumulative[day - 1]);
            for (const auto& curve : curves) {
                plot << ",";
                if (!curve.empty()) plot << fmt6(curve[day - 1]);
            }
            plot << "\n";
        }
    }
    return out;
}

}  // namespace isacl
