#include "isacl/mfnn.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "isacl/errors.hpp"
#include "isacl/parallel.hpp"
#include "isacl/rng.hpp"

namespace isacl {

namespace {

double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

/// Offsets of the parameter blocks inside the flat vector.
struct Layout {
    std::size_t w1, b1, w2, b2, w_out, total;
    explicit Layout(const NetworkSpec& s) {
        w1 = 0;
        b1 = w1 + s.n_inputs * s.hidden1;
        w2 = b1 + s.hidden1;
        b2 = w2 + s.hidden1 * s.hidden2;
        w_out = b2 + s.hidden2;
        total = w_out + s.hidden2 * s.n_outputs;
    }
};

void check_length(const std::vector<double>& flat, const NetworkSpec& spec) {
    if (flat.size() != spec.dimension()) {
        throw std::invalid_argument("parameter vector length does not match the network shape");
    }
}

void forward_impl(const double* p, const Layout& lay, const NetworkSpec& spec, const double* x,
                  double* out, ForwardScratch& scratch) {
    scratch.y.resize(spec.hidden1);
    scratch.theta.resize(spec.hidden2);
    for (std::size_t j = 0; j < spec.hidden1; ++j) {
        double z = -p[lay.b1 + j];
        const double* row = p + lay.w1 + j * spec.n_inputs;
        for (std::size_t i = 0; i < spec.n_inputs; ++i) z += row[i] * x[i];
        scratch.y[j] = sigmoid(z);
    }
    for (std::size_t k = 0; k < spec.hidden2; ++k) {
        double z = -p[lay.b2 + k];
        const double* row = p + lay.w2 + k * spec.hidden1;
        for (std::size_t j = 0; j < spec.hidden1; ++j) z += row[j] * scratch.y[j];
        scratch.theta[k] = sigmoid(z);
    }
    for (std::size_t l = 0; l < spec.n_outputs; ++l) {
        double o = 0.0;
        const double* row = p + lay.w_out + l * spec.hidden2;
        for (std::size_t k = 0; k < spec.hidden2; ++k) o += row[k] * scratch.theta[k];
        out[l] = o;
    }
}

double sample_error(const double* p, const Layout& lay, const NetworkSpec& spec,
                    const SampleSet& samples, std::size_t s, ForwardScratch& scratch,
                    std::vector<double>& out) {
    out.resize(spec.n_outputs);
    forward_impl(p, lay, spec, samples.inputs.data() + s * spec.n_inputs, out.data(), scratch);
    double err = 0.0;
    const double* target = samples.targets.data() + s * spec.n_outputs;
    for (std::size_t l = 0; l < spec.n_outputs; ++l) {
        const double diff = target[l] - out[l];
        err += diff * diff;
    }
    return err;
}

void check_samples(const NetworkSpec& spec, const SampleSet& samples) {
    if (samples.n() == 0) throw std::invalid_argument("sample set is empty");
    if (samples.n_inputs != spec.n_inputs || samples.n_outputs != spec.n_outputs) {
        throw std::invalid_argument("sample shape does not match the network shape");
    }
}

}  // namespace

std::vector<double> encode(const NetworkParams& params) {
    std::vector<double> flat;
    flat.reserve(params.w1.size() + params.b1.size() + params.w2.size() + params.b2.size() +
                 params.w_out.size());
    for (const auto* block : {&params.w1, &params.b1, &params.w2, &params.b2, &params.w_out}) {
        flat.insert(flat.end(), block->begin(), block->end());
    }
    return flat;
}

NetworkParams decode(const std::vector<double>& flat, const NetworkSpec& spec) {
    check_length(flat, spec);
    const Layout lay(spec);
    NetworkParams p;
    p.w1.assign(flat.begin() + lay.w1, flat.begin() + lay.b1);
    p.b1.assign(flat.begin() + lay.b1, flat.begin() + lay.w2);
    p.w2.assign(flat.begin() + lay.w2, flat.begin() + lay.b2);
    p.b2.assign(flat.begin() + lay.b2, flat.begin() + lay.w_out);
    p.w_out.assign(flat.begin() + lay.w_out, flat.end());
    return p;
}

void forward(const std::vector<double>& flat, const NetworkSpec& spec, const double* x,
             double* out, ForwardScratch& scratch) {
    check_length(flat, spec);
    forward_impl(flat.data(), Layout(spec), spec, x, out, scratch);
}

std::vector<double> forward(const std::vector<double>& flat, const NetworkSpec& spec,
                            const std::vector<double>& x) {
    if (x.size() != spec.n_inputs) {
        throw std::invalid_argument("input length does not match the network shape");
    }
    ForwardScratch scratch;
    std::vector<double> out(spec.n_outputs);
    forward(flat, spec, x.data(), out.data(), scratch);
    return out;
}

double dataset_mse(const std::vector<double>& flat, const NetworkSpec& spec,
                   const SampleSet& samples) {
    check_length(flat, spec);
    check_samples(spec, samples);
    const Layout lay(spec);
    const std::size_t n = samples.n();

    if (parallel::enabled() && n >= parallel::kMinSamplesParallel) {
        std::vector<double> errors(n);
#ifdef _OPENMP
#pragma omp parallel
#endif
        {
            ForwardScratch scratch;
            std::vector<double> out;
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
            for (long long s = 0; s < static_cast<long long>(n); ++s) {
                errors[static_cast<std::size_t>(s)] = sample_error(
                    flat.data(), lay, spec, samples, static_cast<std::size_t>(s), scratch, out);
            }
        }
        double total = 0.0;
        for (std::size_t s = 0; s < n; ++s) total += errors[s];
        return total / static_cast<double>(n);
    }

    ForwardScratch scratch;
    std::vector<double> out;
    double total = 0.0;
    for (std::size_t s = 0; s < n; ++s) {
        total += sample_error(flat.data(), lay, spec, samples, s, scratch, out);
    }
    return total / static_cast<double>(n);
}

double dataset_mse_serial(const std::vector<double>& flat, const NetworkSpec& spec,
                          const SampleSet& samples) {
    check_length(flat, spec);
    check_samples(spec, samples);
    const Layout lay(spec);
    ForwardScratch scratch;
    std::vector<double> out;
    double total = 0.0;
    for (std::size_t s = 0; s < samples.n(); ++s) {
        total += sample_error(flat.data(), lay, spec, samples, s, scratch, out);
    }
    return total / static_cast<double>(samples.n());
}

double dataset_mse_gradient(const std::vector<double>& flat, const NetworkSpec& spec,
                            const SampleSet& samples, std::vector<double>& grad) {
    check_length(flat, spec);
    check_samples(spec, samples);
    const Layout lay(spec);
    const double* p = flat.data();
    const std::size_t n = samples.n();

    grad.assign(flat.size(), 0.0);
    ForwardScratch scratch;
    std::vector<double> out(spec.n_outputs);
    std::vector<double> dz2(spec.hidden2);
    std::vector<double> dz1(spec.hidden1);
    double total = 0.0;

    for (std::size_t s = 0; s < n; ++s) {
        const double* x = samples.inputs.data() + s * spec.n_inputs;
        const double* target = samples.targets.data() + s * spec.n_outputs;
        forward_impl(p, lay, spec, x, out.data(), scratch);

        // d(loss)/d(output); the bias enters pre-activations negated, so
        // bias gradients pick up a minus sign below.
        for (std::size_t l = 0; l < spec.n_outputs; ++l) {
            const double diff = target[l] - out[l];
            total += diff * diff;
            out[l] = 2.0 * (out[l] - target[l]);  // reuse as dL/do
        }
        for (std::size_t k = 0; k < spec.hidden2; ++k) {
            double dtheta = 0.0;
            for (std::size_t l = 0; l < spec.n_outputs; ++l) {
                dtheta += out[l] * p[lay.w_out + l * spec.hidden2 + k];
            }
            dz2[k] = dtheta * scratch.theta[k] * (1.0 - scratch.theta[k]);
        }
        for (std::size_t j = 0; j < spec.hidden1; ++j) {
            double dy = 0.0;
            for (std::size_t k = 0; k < spec.hidden2; ++k) {
                dy += dz2[k] * p[lay.w2 + k * spec.hidden1 + j];
            }
            dz1[j] = dy * scratch.y[j] * (1.0 - scratch.y[j]);
        }

        for (std::size_t l = 0; l < spec.n_outputs; ++l) {
            for (std::size_t k = 0; k < spec.hidden2; ++k) {
                grad[lay.w_out + l * spec.hidden2 + k] += out[l] * scratch.theta[k];
            }
        }
        for (std::size_t k = 0; k < spec.hidden2; ++k) {
            for (std::size_t j = 0; j < spec.hidden1; ++j) {
                grad[lay.w2 + k * spec.hidden1 + j] += dz2[k] * scratch.y[j];
            }
            grad[lay.b2 + k] -= dz2[k];
        }
        for (std::size_t j = 0; j < spec.hidden1; ++j) {
            for (std::size_t i = 0; i < spec.n_inputs; ++i) {
                grad[lay.w1 + j * spec.n_inputs + i] += dz1[j] * x[i];
            }
            grad[lay.b1 + j] -= dz1[j];
        }
    }

    const double inv_n = 1.0 / static_cast<double>(n);
    for (double& g : grad) g *= inv_n;
    return total * inv_n;
}

ObjectiveFn make_mse_objective(const NetworkSpec& spec,
                               std::shared_ptr<const SampleSet> samples) {
    check_samples(spec, *samples);
    return [spec, samples = std::move(samples)](const std::vector<double>& flat) {
        return dataset_mse(flat, spec, *samples);
    };
}

BpResult bp_train(const NetworkSpec& spec, const SampleSet& samples, double learning_rate,
                  std::size_t epochs, std::uint64_t seed) {
    check_samples(spec, samples);
    if (learning_rate < 0.0) throw std::invalid_argument("bp_train: learning rate must be >= 0");
    if (epochs < 1) throw std::invalid_argument("bp_train: epochs must be at least 1");

    Rng rng(seed);
    std::vector<double> params(spec.dimension());
    for (double& w : params) w = rng.uniform(-0.5, 0.5);

    BpResult result;
    result.best_per_epoch.reserve(epochs);
    result.params = params;
    double best = dataset_mse(params, spec, samples);
    std::vector<double> grad;
    for (std::size_t epoch = 1; epoch <= epochs; ++epoch) {
        const double mse = dataset_mse_gradient(params, spec, samples, grad);
        if (!std::isfinite(mse)) {
            throw TrainingError("training loss became non-finite", epoch);
        }
        if (mse < best) {
            best = mse;
            result.params = params;
        }
        for (std::size_t d = 0; d < params.size(); ++d) {
            params[d] -= learning_rate * grad[d];
        }
        result.best_per_epoch.push_back(best);
    }
    const double final_mse = dataset_mse(params, spec, samples);
    if (std::isfinite(final_mse) && final_mse < best) {
        best = final_mse;
        result.params = std::move(params);
    }
    result.final_mse = best;
    return result;
}

}  // namespace isacl
