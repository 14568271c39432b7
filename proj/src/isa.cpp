#include "isacl/isa.hpp"

#include <stdexcept>

namespace isacl {

std::vector<double> composition_random_point(const SearchSpace& space, double r2) {
    std::vector<double> p(space.dim());
    for (std::size_t d = 0; d < p.size(); ++d) {
        p[d] = space.lower()[d] + r2 * space.width(d);
    }
    return p;
}

std::vector<double> mirror_reflect(const std::vector<double>& current,
                                   const std::vector<double>& gbest, double r3) {
    std::vector<double> image(current.size());
    for (std::size_t d = 0; d < current.size(); ++d) {
        const double mirror = r3 * current[d] + (1.0 - r3) * gbest[d];
        image[d] = 2.0 * mirror - current[d];
    }
    return image;
}

std::vector<double> walk_point(const std::vector<double>& gbest, const SearchSpace& space,
                               double fraction, const std::vector<double>& normals) {
    std::vector<double> p(gbest.size());
    for (std::size_t d = 0; d < gbest.size(); ++d) {
        p[d] = gbest[d] + normals[d] * (fraction * space.width(d));
    }
    return p;
}

IsaOptimizer::IsaOptimizer(IsaConfig cfg) : cfg_(cfg) {
    if (cfg_.partition_threshold < 0.0 || cfg_.partition_threshold > 1.0) {
        throw std::invalid_argument("IsaConfig: partition_threshold must lie in [0,1]");
    }
    if (!(cfg_.walk_scale_fraction > 0.0)) {
        throw std::invalid_argument("IsaConfig: walk_scale_fraction must be positive");
    }
}

std::vector<double> IsaOptimizer::composition_candidate(const Population&, std::size_t,
                                                        const SearchSpace& space, Rng& rng) {
    return composition_random_point(space, rng.uniform());
}

void IsaOptimizer::step(Population& pop, const SearchSpace& space, std::size_t /*iter*/,
                        std::size_t /*total_iters*/, Rng& rng, const ObjectiveFn& objective) {
    const std::size_t walker = pop.best_index;
    std::vector<double> normals(space.dim());
    for (std::size_t i = 0; i < pop.members.size(); ++i) {
        std::vector<double> candidate;
        if (i == walker) {
            for (double& n : normals) n = rng.normal();
            candidate = walk_point(pop.members[i].position, space, cfg_.walk_scale_fraction,
                                   normals);
        } else if (rng.uniform() <= cfg_.partition_threshold) {
            candidate = mirror_reflect(pop.members[i].position, pop.best().position,
                                       rng.uniform());
        } else {
            candidate = composition_candidate(pop, i, space, rng);
        }
        pop.greedy_replace(i, clamp(std::move(candidate), space), objective);
    }
}

}  // namespace isacl
