#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "isacl/population.hpp"

namespace isacl {

/// Per-run convergence record. best_per_iter holds the best-so-far fitness
/// after each iteration and is therefore non-increasing; eval_count is the
/// total number of objective calls including initialization.
struct RunTrace {
    std::vector<double> best_per_iter;
    std::size_t eval_count = 0;
    Element final_best;
};

/// A population optimizer expressed as a per-iteration step. Iterations are
/// 1-based: step receives iter in [1, total_iters] so schedules that end at
/// zero reach their terminal value on the final call.
class Optimizer {
public:
    virtual ~Optimizer() = default;

    virtual std::string name() const = 0;

    /// Objective evaluations one step performs, used for budget accounting.
    virtual std::size_t evaluations_per_iteration(std::size_t pop_size) const = 0;

    /// Called once after init_population, before the first step. Optimizers
    /// with internal state (velocities, leaders, chaos) build it here from
    /// the run's generator.
    virtual void prepare(Population& pop, const SearchSpace& space, Rng& rng);

    virtual void step(Population& pop, const SearchSpace& space, std::size_t iter,
                      std::size_t total_iters, Rng& rng, const ObjectiveFn& objective) = 0;
};

/// Drives one seeded run: init, prepare, total_iters steps, recording the
/// best-so-far element after each. All randomness flows from the single
/// generator seeded here, so equal seeds give equal traces.
RunTrace run(Optimizer& opt, const SearchSpace& space, std::size_t pop_size,
             std::size_t total_iters, std::uint64_t seed, const ObjectiveFn& objective);

}  // namespace isacl
