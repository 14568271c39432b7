#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "isacl/population.hpp"

namespace isacl {

/// Shape of the two-hidden-layer network: n_inputs -> hidden1 (sigmoid) ->
/// hidden2 (sigmoid) -> n_outputs (linear, no output bias).
struct NetworkSpec {
    std::size_t n_inputs = 1;
    std::size_t hidden1 = 10;
    std::size_t hidden2 = 10;
    std::size_t n_outputs = 1;

    /// Flat decision-vector length: n*N + N + N*M + M + M*H.
    std::size_t dimension() const {
        return n_inputs * hidden1 + hidden1 + hidden1 * hidden2 + hidden2 + hidden2 * n_outputs;
    }

    bool operator==(const NetworkSpec&) const = default;
};

/// Layered view of the parameters. Matrices are row-major with rows =
/// destination neurons: w1 is hidden1 x n_inputs, w2 is hidden2 x hidden1,
/// w_out is n_outputs x hidden2.
struct NetworkParams {
    std::vector<double> w1;
    std::vector<double> b1;
    std::vector<double> w2;
    std::vector<double> b2;
    std::vector<double> w_out;
};

/// Flat layout, in order: [w1 row-major | b1 | w2 row-major | b2 | w_out
/// row-major]. decode validates the length against spec.dimension() and
/// round-trips encode exactly.
std::vector<double> encode(const NetworkParams& params);
NetworkParams decode(const std::vector<double>& flat, const NetworkSpec& spec);

/// Reusable per-thread buffers for the forward pass.
struct ForwardScratch {
    std::vector<double> y;      // hidden1 activations
    std::vector<double> theta;  // hidden2 activations
};

/// Forward pass on flat parameters: hidden pre-activations subtract the
/// bias (sigmoid(sum w*x - b)); the output layer is a plain weighted sum.
/// x has spec.n_inputs entries, out receives spec.n_outputs.
void forward(const std::vector<double>& flat, const NetworkSpec& spec, const double* x,
             double* out, ForwardScratch& scratch);

/// Convenience wrapper returning the output vector.
std::vector<double> forward(const std::vector<double>& flat, const NetworkSpec& spec,
                            const std::vector<double>& x);

/// Training data as flat row-major blocks: inputs is n() x n_inputs,
/// targets is n() x n_outputs.
struct SampleSet {
    std::size_t n_inputs = 1;
    std::size_t n_outputs = 1;
    std::vector<double> inputs;
    std::vector<double> targets;

    std::size_t n() const { return n_inputs == 0 ? 0 : inputs.size() / n_inputs; }
};

/// Mean over samples of the summed squared output error. Sample errors are
/// computed into independent slots and reduced in index order, so the
/// OpenMP path (taken when enabled and n >= parallel::kMinSamplesParallel)
/// is bitwise identical to dataset_mse_serial. Throws std::invalid_argument
/// on an empty sample set.
double dataset_mse(const std::vector<double>& flat, const NetworkSpec& spec,
                   const SampleSet& samples);

/// Reference implementation kept serial for testing and benchmarking.
double dataset_mse_serial(const std::vector<double>& flat, const NetworkSpec& spec,
                          const SampleSet& samples);

/// Full-batch MSE and its analytic gradient with respect to every flat
/// parameter. Returns the MSE; grad is resized to flat.size().
double dataset_mse_gradient(const std::vector<double>& flat, const NetworkSpec& spec,
                            const SampleSet& samples, std::vector<double>& grad);

/// Objective adapter used by every optimizer: fitness(flat) = dataset_mse.
ObjectiveFn make_mse_objective(const NetworkSpec& spec, std::shared_ptr<const SampleSet> samples);

struct BpResult {
    std::vector<double> params;        // best parameters seen over training
    std::vector<double> best_per_epoch;  // running-minimum MSE, one entry per epoch
    double final_mse = 0.0;
};

/// Full-batch gradient-descent training, the non-metaheuristic baseline.
/// Weights start uniform in [-0.5, 0.5] from the seed; the best-so-far
/// parameters are returned. Throws TrainingError (reporting the epoch) if
/// the loss turns non-finite.
BpResult bp_train(const NetworkSpec& spec, const SampleSet& samples, double learning_rate,
                  std::size_t epochs, std::uint64_t seed);

}  // namespace isacl
