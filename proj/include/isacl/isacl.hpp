#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "isacl/chaos.hpp"
#include "isacl/isa.hpp"

namespace isacl {

struct IsaclConfig : IsaConfig {
    /// Rows of the chaotic matrix, i.e. candidates per learning phase.
    std::size_t n_maps = 10;
    /// Learning-phase repetitions per outer iteration.
    std::size_t cl_inner_iters = 1;
};

/// Blend weight of the chaotic-learning phase: iter/total, reaching exactly
/// 1 at the final iteration (where the phase becomes a no-op on the best).
struct ClWeight {
    double value = 0.0;
    static ClWeight at(std::size_t iter, std::size_t total) {
        return {static_cast<double>(iter) / static_cast<double>(total)};
    }
};

/// Experience-guided composition: step from current toward the side of the
/// fitter peer, current + r2*(fitter - weaker). The caller clamps and
/// greedy-selects.
std::vector<double> experience_point(const std::vector<double>& current,
                                     const std::vector<double>& peer_l, double f_l,
                                     const std::vector<double>& peer_r, double f_r, double r2);

/// One in-box point from one chaos row: lower + c (*) (upper - lower).
std::vector<double> chaotic_box_point(const SearchSpace& space, const double* chaos_row);

/// Convex blend weight*anchor + (1-weight)*probe, componentwise.
std::vector<double> blend_toward(const std::vector<double>& anchor,
                                 const std::vector<double>& probe, double weight);

struct ClPhaseResult {
    Element gbest;
    std::size_t evals = 0;
    std::size_t non_finite = 0;
    bool improved = false;
};

/// One chaotic-learning phase: advance the chaos state, form its rows()
/// blended candidates around gbest, evaluate them all, and replace gbest
/// when the batch best strictly improves it. Ties and non-finite values
/// keep gbest; result.evals is always chaos.rows().
///
/// Row objective evaluations run under OpenMP when enabled and the row
/// count reaches parallel::kMinRowsParallel; candidates are written to
/// per-row slots and reduced by a serial lowest-index argmin, so results
/// are identical to chaotic_learning_phase_serial at any thread count.
ClPhaseResult chaotic_learning_phase(const Element& gbest, ChaosState& chaos,
                                     const SearchSpace& space, ClWeight weight,
                                     const ObjectiveFn& objective);

/// Reference implementation kept serial for testing and benchmarking.
ClPhaseResult chaotic_learning_phase_serial(const Element& gbest, ChaosState& chaos,
                                            const SearchSpace& space, ClWeight weight,
                                            const ObjectiveFn& objective);

/// ISA with two changes: the composition branch follows the experience of
/// two random distinct peers instead of uniform resampling, and each
/// iteration ends with the chaotic-learning refinement of the best element.
/// Per step this costs pop_size + n_maps*cl_inner_iters evaluations.
///
/// Extra draws per composition element: two peer indices (each redrawn on
/// collision), then scalar r2. prepare() consumes one raw word to seed the
/// chaos state and requires pop_size >= 3.
class IsaclOptimizer : public IsaOptimizer {
public:
    explicit IsaclOptimizer(IsaclConfig cfg = {});

    std::string name() const override { return "ISACL"; }
    std::size_t evaluations_per_iteration(std::size_t pop_size) const override {
        return pop_size + cfg_cl_.n_maps * cfg_cl_.cl_inner_iters;
    }
    void prepare(Population& pop, const SearchSpace& space, Rng& rng) override;
    void step(Population& pop, const SearchSpace& space, std::size_t iter,
              std::size_t total_iters, Rng& rng, const ObjectiveFn& objective) override;

    const ChaosState& chaos() const { return chaos_; }

protected:
    std::vector<double> composition_candidate(const Population& pop, std::size_t i,
                                              const SearchSpace& space, Rng& rng) override;

private:
    IsaclConfig cfg_cl_;
    ChaosState chaos_;
};

}  // namespace isacl
