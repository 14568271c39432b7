#include "isacl/population.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "isacl/errors.hpp"

namespace isacl {

SearchSpace::SearchSpace(std::vector<double> lower, std::vector<double> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
    if (lower_.empty() || lower_.size() != upper_.size()) {
        throw std::invalid_argument("SearchSpace: bound vectors must be non-empty and equal-length");
    }
    for (std::size_t d = 0; d < lower_.size(); ++d) {
        if (!(lower_[d] < upper_[d])) {
            throw std::invalid_argument("SearchSpace: lower must be strictly below upper in every dimension");
        }
    }
}

SearchSpace SearchSpace::uniform_box(std::size_t dim, double lo, double hi) {
    return SearchSpace(std::vector<double>(dim, lo), std::vector<double>(dim, hi));
}

std::vector<double> clamp(std::vector<double> position, const SearchSpace& space) {
    for (std::size_t d = 0; d < position.size(); ++d) {
        if (position[d] < space.lower()[d]) position[d] = space.lower()[d];
        if (position[d] > space.upper()[d]) position[d] = space.upper()[d];
    }
    return position;
}

Element greedy_select(const Element& incumbent, std::vector<double> candidate_position,
                      const ObjectiveFn& objective, bool* accepted, bool* non_finite) {
    const double f = objective(candidate_position);
    if (accepted) *accepted = false;
    if (non_finite) *non_finite = false;
    if (!std::isfinite(f)) {
        if (non_finite) *non_finite = true;
        return incumbent;
    }
    if (f < incumbent.fitness) {
        if (accepted) *accepted = true;
        return Element{std::move(candidate_position), f};
    }
    return incumbent;
}

void Population::refresh_best() {
    best_index = 0;
    for (std::size_t i = 1; i < members.size(); ++i) {
        if (members[i].fitness < members[best_index].fitness) best_index = i;
    }
}

bool Population::greedy_replace(std::size_t i, std::vector<double> candidate_position,
                                const ObjectiveFn& objective) {
    bool accepted = false;
    bool non_finite = false;
    Element result =
        greedy_select(members[i], std::move(candidate_position), objective, &accepted, &non_finite);
    ++evals;
    if (non_finite) ++non_finite_rejections;
    if (accepted) {
        members[i] = std::move(result);
        if (members[i].fitness < members[best_index].fitness) best_index = i;
    }
    return accepted;
}

bool Population::move(std::size_t i, std::vector<double> position, const ObjectiveFn& objective) {
    const double f = objective(position);
    ++evals;
    if (!std::isfinite(f)) {
        ++non_finite_rejections;
        return false;
    }
    members[i].position = std::move(position);
    members[i].fitness = f;
    return true;
}

Population init_population(const SearchSpace& space, std::size_t pop_size, Rng& rng,
                           const ObjectiveFn& objective) {
    if (pop_size < 2) {
        throw std::invalid_argument("init_population: pop_size must be at least 2");
    }
    Population pop;
    pop.members.resize(pop_size);
    for (std::size_t i = 0; i < pop_size; ++i) {
        Element& e = pop.members[i];
        e.position.resize(space.dim());
        for (std::size_t d = 0; d < space.dim(); ++d) {
            e.position[d] = rng.uniform(space.lower()[d], space.upper()[d]);
        }
        e.fitness = objective(e.position);
        ++pop.evals;
        if (!std::isfinite(e.fitness)) {
            throw EvaluationError("objective returned a non-finite value at initialization",
                                  e.position);
        }
    }
    pop.refresh_best();
    return pop;
}

}  // namespace isacl
