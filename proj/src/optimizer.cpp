#include "isacl/optimizer.hpp"

#include <stdexcept>

namespace isacl {

void Optimizer::prepare(Population&, const SearchSpace&, Rng&) {}

RunTrace run(Optimizer& opt, const SearchSpace& space, std::size_t pop_size,
             std::size_t total_iters, std::uint64_t seed, const ObjectiveFn& objective) {
    if (total_iters < 1) {
        throw std::invalid_argument("run: total_iters must be at least 1");
    }
    Rng rng(seed);
    Population pop = init_population(space, pop_size, rng, objective);
    opt.prepare(pop, space, rng);

    RunTrace trace;
    trace.best_per_iter.reserve(total_iters);
    Element best_so_far = pop.best();
    for (std::size_t iter = 1; iter <= total_iters; ++iter) {
        opt.step(pop, space, iter, total_iters, rng, objective);
        if (pop.best().fitness < best_so_far.fitness) best_so_far = pop.best();
        trace.best_per_iter.push_back(best_so_far.fitness);
    }
    trace.eval_count = pop.evals;
    trace.final_best = std::move(best_so_far);
    return trace;
}

}  // namespace isacl
