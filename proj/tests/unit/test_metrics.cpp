#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "isacl/errors.hpp"
#include "isacl/metrics.hpp"

using namespace isacl;

TEST_CASE("perfect fit yields zero errors and unit r2") {
    const std::vector<double> v = {3.0, 7.0, 11.0};
    const MetricsReport m = compute_metrics(v, v);
    CHECK(m.rmse == 0.0);
    CHECK(m.mae == 0.0);
    CHECK(m.mape == 0.0);
    CHECK(m.rmsre == 0.0);
    CHECK(m.r2 == 1.0);
}

TEST_CASE("hand-computed indices on a constant model") {
    const std::vector<double> actual = {1.0, 2.0, 3.0};
    const std::vector<double> model = {2.0, 2.0, 2.0};
    const MetricsReport m = compute_metrics(actual, model);
    CHECK(std::fabs(m.rmse - std::sqrt(2.0 / 3.0)) < 1e-9);
    CHECK(std::fabs(m.mae - 2.0 / 3.0) < 1e-9);
    CHECK(std::fabs(m.mape - 1.0 / 3.0) < 1e-9);
    CHECK(std::fabs(m.rmsre - std::sqrt(1.0 / 6.0)) < 1e-9);
    CHECK(std::fabs(m.r2 - 0.0) < 1e-9);
}

TEST_CASE("relative errors can divide by the actual series instead") {
    const std::vector<double> actual = {1.0, 2.0, 3.0};
    const std::vector<double> model = {2.0, 2.0, 2.0};
    const MetricsReport m = compute_metrics(actual, model, RelativeErrorDenominator::Actual);
    // ratios |a - m| / a: 1, 0, 1/3
    CHECK(std::fabs(m.mape - 4.0 / 9.0) < 1e-9);
    CHECK(std::fabs(m.rmsre - std::sqrt(10.0 / 27.0)) < 1e-9);
    // absolute-error indices are unaffected by the denominator choice
    CHECK(std::fabs(m.rmse - std::sqrt(2.0 / 3.0)) < 1e-9);
}

TEST_CASE("zero denominators are reported with the offending index") {
    const std::vector<double> actual = {1.0, 2.0};
    try {
        compute_metrics(actual, {1.0, 0.0});
        FAIL("expected MetricError");
    } catch (const MetricError& e) {
        CHECK(e.index() == "mape");
    }

    // Division by the actual series trips on zero actuals instead.
    CHECK_THROWS_AS(compute_metrics({0.0, 2.0}, {1.0, 2.0}, RelativeErrorDenominator::Actual),
                    MetricError);
    CHECK_NOTHROW(compute_metrics({0.0, 2.0}, {1.0, 2.0}, RelativeErrorDenominator::Model));
}

TEST_CASE("constant actual series makes r2 undefined") {
    try {
        compute_metrics({5.0, 5.0, 5.0}, {4.0, 5.0, 6.0});
        FAIL("expected MetricError");
    } catch (const MetricError& e) {
        CHECK(e.index() == "r2");
    }
}

TEST_CASE("length preconditions") {
    CHECK_THROWS_AS(compute_metrics({1.0, 2.0}, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(compute_metrics({1.0}, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(compute_metrics({}, {}), std::invalid_argument);
}

TEST_CASE("indices are invariant under jointly permuting the pairs") {
    const std::vector<double> actual = {10.0, 20.0, 30.0, 40.0};
    const std::vector<double> model = {12.0, 18.0, 33.0, 39.0};
    const MetricsReport a = compute_metrics(actual, model);
    const MetricsReport b = compute_metrics({40.0, 10.0, 30.0, 20.0}, {39.0, 12.0, 33.0, 18.0});
    CHECK(a.rmse == doctest::Approx(b.rmse).epsilon(1e-12));
    CHECK(a.mae == doctest::Approx(b.mae).epsilon(1e-12));
    CHECK(a.mape == doctest::Approx(b.mape).epsilon(1e-12));
    CHECK(a.rmsre == doctest::Approx(b.rmsre).epsilon(1e-12));
    CHECK(a.r2 == doctest::Approx(b.r2).epsilon(1e-12));
}

TEST_CASE("rmse dominates mae and r2 never exceeds 1") {
    const std::vector<double> actual = {1.0, 4.0, 9.0, 16.0, 25.0};
    const std::vector<double> model = {2.0, 3.0, 10.0, 15.0, 27.0};
    const MetricsReport m = compute_metrics(actual, model);
    CHECK(m.rmse >= m.mae);
    CHECK(m.r2 <= 1.0);
    CHECK(m.mape >= 0.0);
    CHECK(m.rmsre >= 0.0);
}
