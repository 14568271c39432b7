#include "isacl/isacl.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "isacl/parallel.hpp"

namespace isacl {

std::vector<double> experience_point(const std::vector<double>& current,
                                     const std::vector<double>& peer_l, double f_l,
                                     const std::vector<double>& peer_r, double f_r, double r2) {
    std::vector<double> p(current.size());
    // Move from current toward the fitter peer's side of the pair.
    const std::vector<double>& to = f_r < f_l ? peer_r : peer_l;
    const std::vector<double>& from = f_r < f_l ? peer_l : peer_r;
    for (std::size_t d = 0; d < p.size(); ++d) {
        p[d] = current[d] + r2 * (to[d] - from[d]);
    }
    return p;
}

std::vector<double> chaotic_box_point(const SearchSpace& space, const double* chaos_row) {
    std::vector<double> p(space.dim());
    for (std::size_t d = 0; d < p.size(); ++d) {
        p[d] = space.lower()[d] + chaos_row[d] * space.width(d);
    }
    return p;
}

std::vector<double> blend_toward(const std::vector<double>& anchor,
                                 const std::vector<double>& probe, double weight) {
    std::vector<double> p(anchor.size());
    for (std::size_t d = 0; d < p.size(); ++d) {
        p[d] = weight * anchor[d] + (1.0 - weight) * probe[d];
    }
    return p;
}

namespace {

ClPhaseResult run_phase(const Element& gbest, ChaosState& chaos, const SearchSpace& space,
                        ClWeight weight, const ObjectiveFn& objective, bool allow_parallel) {
    advance(chaos);
    const std::size_t n = chaos.rows();
    std::vector<std::vector<double>> candidates(n);
    for (std::size_t j = 0; j < n; ++j) {
        candidates[j] = blend_toward(gbest.position,
                                     chaotic_box_point(space, chaos.current.data() + j * chaos.dim),
                                     weight.value);
    }

    std::vector<double> fitness(n);
    const bool go_parallel =
        allow_parallel && parallel::enabled() && n >= parallel::kMinRowsParallel;
    if (go_parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
        for (long long j = 0; j < static_cast<long long>(n); ++j) {
            fitness[static_cast<std::size_t>(j)] = objective(candidates[static_cast<std::size_t>(j)]);
        }
    } else {
        for (std::size_t j = 0; j < n; ++j) fitness[j] = objective(candidates[j]);
    }

    ClPhaseResult result;
    result.evals = n;
    // Serial lowest-index argmin over the finite values keeps the outcome
    // independent of evaluation order.
    std::size_t best_row = n;
    for (std::size_t j = 0; j < n; ++j) {
        if (!std::isfinite(fitness[j])) {
            ++result.non_finite;
            continue;
        }
        if (best_row == n || fitness[j] < fitness[best_row]) best_row = j;
    }
    if (best_row < n && fitness[best_row] < gbest.fitness) {
        result.gbest = Element{std::move(candidates[best_row]), fitness[best_row]};
        result.improved = true;
    } else {
        result.gbest = gbest;
    }
    return result;
}

}  // namespace

ClPhaseResult chaotic_learning_phase(const Element& gbest, ChaosState& chaos,
                                     const SearchSpace& space, ClWeight weight,
                                     const ObjectiveFn& objective) {
    return run_phase(gbest, chaos, space, weight, objective, true);
}

ClPhaseResult chaotic_learning_phase_serial(const Element& gbest, ChaosState& chaos,
                                            const SearchSpace& space, ClWeight weight,
                                            const ObjectiveFn& objective) {
    return run_phase(gbest, chaos, space, weight, objective, false);
}

IsaclOptimizer::IsaclOptimizer(IsaclConfig cfg) : IsaOptimizer(cfg), cfg_cl_(cfg) {
    if (cfg_cl_.n_maps < 1 || cfg_cl_.cl_inner_iters < 1) {
        throw std::invalid_argument("IsaclConfig: n_maps and cl_inner_iters must be at least 1");
    }
}

void IsaclOptimizer::prepare(Population& pop, const SearchSpace& space, Rng& rng) {
    if (pop.members.size() < 3) {
        throw std::invalid_argument(
            "IsaclOptimizer: population of at least 3 needed for peer-guided composition");
    }
    chaos_ = init_chaos(cfg_cl_.n_maps, space.dim(), rng.raw());
}

std::vector<double> IsaclOptimizer::composition_candidate(const Population& pop, std::size_t i,
                                                          const SearchSpace& space, Rng& rng) {
    (void)space;
    const std::size_t n = pop.members.size();
    std::size_t l = rng.index(n);
    while (l == i) l = rng.index(n);
    std::size_t r = rng.index(n);
    while (r == i || r == l) r = rng.index(n);
    return experience_point(pop.members[i].position, pop.members[l].position,
                            pop.members[l].fitness, pop.members[r].position,
                            pop.members[r].fitness, rng.uniform());
}

void IsaclOptimizer::step(Population& pop, const SearchSpace& space, std::size_t iter,
                          std::size_t total_iters, Rng& rng, const ObjectiveFn& objective) {
    IsaOptimizer::step(pop, space, iter, total_iters, rng, objective);
    const ClWeight weight = ClWeight::at(iter, total_iters);
    for (std::size_t rep = 0; rep < cfg_cl_.cl_inner_iters; ++rep) {
        ClPhaseResult phase =
            chaotic_learning_phase(pop.best(), chaos_, space, weight, objective);
        pop.evals += phase.evals;
        pop.non_finite_rejections += phase.non_finite;
        if (phase.improved) pop.best() = std::move(phase.gbest);
    }
}

}  // namespace isacl
