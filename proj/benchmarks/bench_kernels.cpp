// Timing harness for the two OpenMP kernels against their serial
// references: the batch dataset MSE and the chaotic-learning phase.
// Build target: isacl_bench. Results are wall-clock; run on an idle
// machine for stable numbers.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "isacl/chaos.hpp"
#include "isacl/isacl.hpp"
#include "isacl/mfnn.hpp"
#include "isacl/parallel.hpp"
#include "isacl/rng.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

isacl::SampleSet make_samples(std::size_t n, std::uint64_t seed) {
    isacl::Rng rng(seed);
    isacl::SampleSet s;
    s.inputs.resize(n);
    s.targets.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        s.inputs[i] = rng.uniform();
        s.targets[i] = std::sin(6.28318530717958648 * s.inputs[i]);
    }
    return s;
}

std::vector<double> random_params(std::size_t dim, std::uint64_t seed) {
    isacl::Rng rng(seed);
    std::vector<double> p(dim);
    for (double& v : p) v = rng.uniform(-2.0, 2.0);
    return p;
}

void bench_dataset_mse() {
    const isacl::NetworkSpec spec{1, 10, 10, 1};
    const isacl::SampleSet samples = make_samples(200000, 7);
    const std::vector<double> params = random_params(spec.dimension(), 11);
    const int reps = 20;

    std::vector<double> serial_out(reps);
    auto t0 = Clock::now();
    for (int r = 0; r < reps; ++r) serial_out[r] = isacl::dataset_mse_serial(params, spec, samples);
    const double serial_ms = ms_since(t0) / reps;

    double residual = 0.0;
    t0 = Clock::now();
    for (int r = 0; r < reps; ++r) {
        const double got = isacl::dataset_mse(params, spec, samples);
        residual = std::max(residual, std::fabs(got - serial_out[r]));
    }
    const double parallel_ms = ms_since(t0) / reps;

    std::printf("%-24s %10.3f %10.3f %8.2fx   (max |diff| %.1e)\n", "dataset_mse 200k", serial_ms,
                parallel_ms, serial_ms / parallel_ms, residual);
}

void bench_chaotic_phase() {
    const isacl::NetworkSpec spec{1, 10, 10, 1};
    const isacl::SampleSet samples = make_samples(20000, 13);
    const auto shared = std::make_shared<isacl::SampleSet>(samples);
    const isacl::ObjectiveFn objective = isacl::make_mse_objective(spec, shared);
    const isacl::SearchSpace space =
        isacl::SearchSpace::uniform_box(spec.dimension(), -10.0, 10.0);
    isacl::Element gbest{random_params(spec.dimension(), 17), 0.0};
    gbest.position = isacl::clamp(std::move(gbest.position), space);
    gbest.fitness = objective(gbest.position);
    const int reps = 50;

    isacl::ChaosState chaos_a = isacl::init_chaos(32, spec.dimension(), 23);
    std::vector<double> serial_out(reps);
    auto t0 = Clock::now();
    for (int r = 0; r < reps; ++r) {
        serial_out[r] = isacl::chaotic_learning_phase_serial(gbest, chaos_a, space,
                                                             isacl::ClWeight{0.5}, objective)
                            .gbest.fitness;
    }
    const double serial_ms = ms_since(t0) / reps;

    // Same seed, so rep r sees the identical chaos state in both loops.
    isacl::ChaosState chaos_b = isacl::init_chaos(32, spec.dimension(), 23);
    double residual = 0.0;
    t0 = Clock::now();
    for (int r = 0; r < reps; ++r) {
        const double got = isacl::chaotic_learning_phase(gbest, chaos_b, space,
                                                         isacl::ClWeight{0.5}, objective)
                               .gbest.fitness;
        residual = std::max(residual, std::fabs(got - serial_out[r]));
    }
    const double parallel_ms = ms_since(t0) / reps;

    std::printf("%-24s %10.3f %10.3f %8.2fx   (max |diff| %.1e)\n", "chaotic phase N=32",
                serial_ms, parallel_ms, serial_ms / parallel_ms, residual);
}

}  // namespace

int main() {
    std::printf("threads available: %d (parallel %s)\n", isacl::parallel::max_threads(),
                isacl::parallel::enabled() ? "on" : "off");
    std::printf("%-24s %10s %10s %9s\n", "kernel", "serial ms", "openmp ms", "speedup");
    bench_dataset_mse();
    bench_chaotic_phase();
    return 0;
}
