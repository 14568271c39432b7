#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "isacl/optimizer.hpp"

namespace isacl {

struct IsaConfig {
    /// Probability of the mirror branch for non-best elements.
    double partition_threshold = 0.2;
    /// The best element's random-walk step is this fraction of the box
    /// width per dimension.
    double walk_scale_fraction = 0.01;
};

/// Composition move: a fresh uniform point, lower + r2*(upper - lower) with
/// one scalar r2 shared across dimensions.
std::vector<double> composition_random_point(const SearchSpace& space, double r2);

/// Mirror move: place a mirror at r3*current + (1-r3)*gbest and reflect the
/// element through it, giving 2*mirror - current. May leave the box; the
/// caller clamps.
std::vector<double> mirror_reflect(const std::vector<double>& current,
                                   const std::vector<double>& gbest, double r3);

/// Random-walk candidate for the best element: gbest + normals (*)
/// fraction*(upper - lower), componentwise.
std::vector<double> walk_point(const std::vector<double>& gbest, const SearchSpace& space,
                               double fraction, const std::vector<double>& normals);

/// The interior search algorithm. Per iteration, the element that was best
/// at the start of the iteration takes the random walk; every other element
/// draws r1 and takes the mirror branch when r1 <= partition_threshold,
/// otherwise the composition branch. Every candidate is clamped then
/// greedy-selected, so exactly pop_size evaluations happen per step.
///
/// Draw order per iteration, elements in index order: the walking element
/// consumes dim normal draws; any other element consumes r1, then one
/// scalar (r3 for mirror, r2 for composition). The mirror target is the
/// live best, refreshed as replacements are accepted.
class IsaOptimizer : public Optimizer {
public:
    explicit IsaOptimizer(IsaConfig cfg = {});

    std::string name() const override { return "ISA"; }
    std::size_t evaluations_per_iteration(std::size_t pop_size) const override { return pop_size; }
    void step(Population& pop, const SearchSpace& space, std::size_t iter,
              std::size_t total_iters, Rng& rng, const ObjectiveFn& objective) override;

    const IsaConfig& config() const { return cfg_; }

protected:
    /// Candidate for the composition branch of element i; the ISACL
    /// subclass swaps in the experience-guided move.
    virtual std::vector<double> composition_candidate(const Population& pop, std::size_t i,
                                                      const SearchSpace& space, Rng& rng);

    IsaConfig cfg_;
};

}  // namespace isacl
