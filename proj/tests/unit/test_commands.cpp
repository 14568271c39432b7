#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "isacl/commands.hpp"
#include "isacl/errors.hpp"
#include "isacl/rng.hpp"

using namespace isacl;

namespace {

SeriesDataset logistic_series(int days, double K = 1000.0, double r = 0.2, double t0 = 30.0) {
    std::string text = "date,cumulative_cases\n";
    Date d = parse_date("2020-03-01");
    char buf[64];
    for (int t = 1; t <= days; ++t) {
        const double v = K / (1.0 + std::exp(-r * (t - t0)));
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        text += format_date(d) + "," + buf + "\n";
        d = add_days(d, 1);
    }
    return parse_series(text);
}

RunConfig tiny_config(Algorithm algo, std::uint64_t seed = 5) {
    RunConfig cfg;
    cfg.algorithm = algo;
    cfg.iters = 5;
    cfg.pop_size = 4;
    cfg.seed = seed;
    cfg.net = NetworkSpec{1, 4, 4, 1};
    return cfg;
}

}  // namespace

TEST_CASE("algorithm names parse case-insensitively") {
    CHECK(parse_algorithm("ISACL") == Algorithm::Isacl);
    CHECK(parse_algorithm("isacl") == Algorithm::Isacl);
    CHECK(parse_algorithm("Mfnn-Bp") == Algorithm::MfnnBp);
    CHECK(parse_algorithm("gwo") == Algorithm::Gwo);
    CHECK_FALSE(parse_algorithm("simplex").has_value());
    for (const Algorithm a : kAllAlgorithms) {
        CHECK(parse_algorithm(algorithm_name(a)) == a);
    }
}

TEST_CASE("train_on_series fills the model record and the trace") {
    const SeriesDataset series = logistic_series(20);
    const RunConfig cfg = tiny_config(Algorithm::Isacl);
    const TrainedRun run = train_on_series(series, cfg);

    CHECK(run.model.algorithm == "ISACL");
    CHECK(run.model.seed == 5);
    CHECK(run.model.params.size() == cfg.net.dimension());
    CHECK(run.model.series_length == 20);
    CHECK(format_date(run.model.series_start) == "2020-03-01");
    CHECK(run.train.size() == 15);
    CHECK(run.test.size() == 5);
    CHECK(run.model.scaler.input_denominator == 27.0);  // train day 15 + horizon 12

    REQUIRE(run.best_per_iter.size() == 5);
    for (std::size_t t = 1; t < run.best_per_iter.size(); ++t) {
        CHECK(run.best_per_iter[t] <= run.best_per_iter[t - 1]);
    }
    CHECK(run.model.final_train_mse == run.best_per_iter.back());
    CHECK(run.eval_count == 4 + 5 * (4 + 10));
}

TEST_CASE("train_on_series is deterministic in the configuration") {
    const SeriesDataset series = logistic_series(20);
    const TrainedRun a = train_on_series(series, tiny_config(Algorithm::Isa));
    const TrainedRun b = train_on_series(series, tiny_config(Algorithm::Isa));
    CHECK(a.model.params == b.model.params);
    CHECK(a.best_per_iter == b.best_per_iter);

    const TrainedRun c = train_on_series(series, tiny_config(Algorithm::Isa, 6));
    CHECK(a.model.params != c.model.params);
}

TEST_CASE("the gradient-descent baseline reports epochs instead of evaluations") {
    const SeriesDataset series = logistic_series(20);
    RunConfig cfg = tiny_config(Algorithm::MfnnBp);
    cfg.iters = 30;
    const TrainedRun run = train_on_series(series, cfg);
    CHECK(run.model.algorithm == "MFNN-BP");
    CHECK(run.eval_count == 0);
    CHECK(run.best_per_iter.size() == 30);
    CHECK(run.model.params.size() == cfg.net.dimension());
}

TEST_CASE("train_on_series rejects multi-column networks") {
    const SeriesDataset series = logistic_series(10);
    RunConfig cfg = tiny_config(Algorithm::Isa);
    cfg.net.n_inputs = 2;
    CHECK_THROWS_AS(train_on_series(series, cfg), std::invalid_argument);
}

TEST_CASE("predict_days applies scaler, network, and unscaling") {
    const SeriesDataset series = logistic_series(20);
    const TrainedRun run = train_on_series(series, tiny_config(Algorithm::Pso));
    const std::vector<double> days = predict_days(run.model, 3, 2);
    REQUIRE(days.size() == 2);

    const double x3 = run.model.scaler.scale_input(3.0);
    const double y3 = forward(run.model.params, run.model.net, {x3})[0];
    CHECK(days[0] == run.model.scaler.unscale_target(y3));
}

TEST_CASE("a model that generated the data scores a perfect fit") {
    // Build the series FROM a fixed model's own predictions; every metric
    // must then be exact: zero errors and r2 = 1 on both halves.
    ModelRecord model;
    model.algorithm = "ISACL";
    model.net = NetworkSpec{1, 4, 4, 1};
    model.split = SplitPolicy::by_ratio(0.75);
    model.horizon = 12;
    model.series_start = parse_date("2021-01-01");
    model.series_length = 20;
    model.scaler.input_denominator = 15.0 + 12.0;

    Rng rng(31);
    model.params.resize(model.net.dimension());
    for (double& p : model.params) p = rng.uniform(-3.0, 3.0);
    // Zero all output weights but the first, then rescale it so the largest
    // training-half output is exactly the stored target maximum.
    const std::size_t w_out_offset = model.net.dimension() - model.net.hidden2;
    for (std::size_t k = 1; k < model.net.hidden2; ++k) model.params[w_out_offset + k] = 0.0;
    model.params[w_out_offset] = 1.0;
    double max_train_out = 0.0;
    for (int d = 1; d <= 15; ++d) {
        const double x = model.scaler.scale_input(d);
        max_train_out = std::max(max_train_out, forward(model.params, model.net, {x})[0]);
    }
    model.params[w_out_offset] = 1.0 / max_train_out;
    model.scaler.target_max = 5000.0;

    const std::vector<double> counts = predict_days(model, 1, 20);
    std::string csv = "date,cumulative_cases\n";
    char buf[64];
    for (int i = 0; i < 20; ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g", counts[i]);
        csv += format_date(add_days(model.series_start, i)) + "," + buf + "\n";
    }
    const SeriesDataset series = parse_series(csv);

    const EvaluationResult result = evaluate_model(model, series);
    CHECK(result.train.rmse == 0.0);
    CHECK(result.train.mae == 0.0);
    CHECK(result.train.mape == 0.0);
    CHECK(result.train.rmsre == 0.0);
    CHECK(result.train.r2 == 1.0);
    CHECK(result.test.rmse == 0.0);
    CHECK(result.test.r2 == 1.0);
}

TEST_CASE("evaluate_model rejects data that cannot be the training series") {
    const SeriesDataset series = logistic_series(20);
    const TrainedRun run = train_on_series(series, tiny_config(Algorithm::Isa));

    CHECK_NOTHROW(evaluate_model(run.model, series));
    CHECK_THROWS_AS(evaluate_model(run.model, logistic_series(21)), CompatibilityError);
    CHECK_THROWS_AS(evaluate_model(run.model, logistic_series(20, 2000.0)), CompatibilityError);

    SeriesDataset shifted = series;
    shifted.dates.clear();
    Date d = parse_date("2019-01-01");
    for (std::size_t i = 0; i < 20; ++i) {
        shifted.dates.push_back(d);
        d = add_days(d, 1);
    }
    CHECK_THROWS_AS(evaluate_model(run.model, shifted), CompatibilityError);
}

TEST_CASE("forecast_model dates follow the series without gaps") {
    const SeriesDataset series = logistic_series(20);
    const TrainedRun run = train_on_series(series, tiny_config(Algorithm::Sca));

    const std::vector<ForecastRow> rows = forecast_model(run.model, 3);
    REQUIRE(rows.size() == 3);
    CHECK(format_date(rows[0].date) == "2020-03-21");
    CHECK(format_date(rows[2].date) == "2020-03-23");

    const std::vector<double> expect = predict_days(run.model, 21, 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(rows[i].value == expect[i]);

    CHECK_THROWS_AS(forecast_model(run.model, 0), std::invalid_argument);
}

TEST_CASE("every algorithm trains end to end on a short series") {
    const SeriesDataset series = logistic_series(16);
    for (const Algorithm a : kAllAlgorithms) {
        RunConfig cfg = tiny_config(a);
        cfg.iters = 3;
        const TrainedRun run = train_on_series(series, cfg);
        CHECK(run.model.params.size() == cfg.net.dimension());
        CHECK(run.best_per_iter.size() == 3);
        CHECK(std::isfinite(run.model.final_train_mse));
    }
}
