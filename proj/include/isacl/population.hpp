#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "isacl/rng.hpp"

namespace isacl {

/// Objective to minimize. Must be a pure function of its argument; the
/// comparison grid and the batch kernels call it concurrently.
using ObjectiveFn = std::function<double(const std::vector<double>&)>;

/// Axis-aligned box of feasible positions. Construction validates
/// lower[d] < upper[d] for every dimension.
class SearchSpace {
public:
    SearchSpace(std::vector<double> lower, std::vector<double> upper);

    /// dim copies of the same [lo, hi] interval.
    static SearchSpace uniform_box(std::size_t dim, double lo, double hi);

    std::size_t dim() const { return lower_.size(); }
    const std::vector<double>& lower() const { return lower_; }
    const std::vector<double>& upper() const { return upper_; }
    double width(std::size_t d) const { return upper_[d] - lower_[d]; }

private:
    std::vector<double> lower_;
    std::vector<double> upper_;
};

/// One population member: a feasible position and its cached objective
/// value. fitness always equals objective(position) and is finite.
struct Element {
    std::vector<double> position;
    double fitness = 0.0;
};

/// Componentwise projection onto the box.
std::vector<double> clamp(std::vector<double> position, const SearchSpace& space);

/// Strict-improvement replacement: evaluates the candidate (exactly one
/// objective call) and returns it iff its fitness is strictly below the
/// incumbent's; ties keep the incumbent. A non-finite candidate fitness
/// rejects the candidate and sets *non_finite.
Element greedy_select(const Element& incumbent, std::vector<double> candidate_position,
                      const ObjectiveFn& objective, bool* accepted = nullptr,
                      bool* non_finite = nullptr);

/// The evolving population plus its bookkeeping. evals counts every
/// objective call made through this object; non_finite_rejections counts
/// candidates discarded for producing a non-finite value.
struct Population {
    std::vector<Element> members;
    std::size_t best_index = 0;
    std::size_t evals = 0;
    std::size_t non_finite_rejections = 0;

    Element& best() { return members[best_index]; }
    const Element& best() const { return members[best_index]; }

    /// Recomputes best_index as the fitness argmin (lowest index on ties).
    void refresh_best();

    /// greedy_select on member i; keeps best_index current. Returns whether
    /// the candidate was accepted.
    bool greedy_replace(std::size_t i, std::vector<double> candidate_position,
                        const ObjectiveFn& objective);

    /// Unconditional move of member i to an already-clamped position, as
    /// used by the non-elitist baselines. A non-finite fitness keeps the
    /// old member and counts a rejection. Returns whether the move stuck.
    bool move(std::size_t i, std::vector<double> position, const ObjectiveFn& objective);
};

/// Uniform-in-box initial population, each member evaluated once
/// (evals = pop_size). Draws are member-major, dimension-inner. Throws
/// std::invalid_argument for pop_size < 2 and EvaluationError when the
/// objective returns a non-finite value at initialization.
Population init_population(const SearchSpace& space, std::size_t pop_size, Rng& rng,
                           const ObjectiveFn& objective);

}  // namespace isacl
