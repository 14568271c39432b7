#include "isacl/baselines.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace isacl {

double linear_schedule(double start, double end, std::size_t iter, std::size_t total) {
    const double f = static_cast<double>(iter) / static_cast<double>(total);
    return (1.0 - f) * start + f * end;
}

PsoOptimizer::PsoOptimizer(PsoConfig cfg) : cfg_(cfg) {
    if (cfg_.w_min > cfg_.w_max) {
        throw std::invalid_argument("PsoConfig: w_min must not exceed w_max");
    }
}

void PsoOptimizer::prepare(Population& pop, const SearchSpace& space, Rng&) {
    velocity_.assign(pop.members.size(), std::vector<double>(space.dim(), 0.0));
    pbest_ = pop.members;
    gbest_ = pop.best();
}

void PsoOptimizer::step(Population& pop, const SearchSpace& space, std::size_t iter,
                        std::size_t total_iters, Rng& rng, const ObjectiveFn& objective) {
    const double w = linear_schedule(cfg_.w_max, cfg_.w_min, iter, total_iters);
    for (std::size_t i = 0; i < pop.members.size(); ++i) {
        std::vector<double> x = pop.members[i].position;
        for (std::size_t d = 0; d < space.dim(); ++d) {
            const double r1 = rng.uniform();
            const double r2 = rng.uniform();
            velocity_[i][d] = w * velocity_[i][d] + cfg_.c1 * r1 * (pbest_[i].position[d] - x[d]) +
                              cfg_.c2 * r2 * (gbest_.position[d] - x[d]);
            x[d] += velocity_[i][d];
        }
        if (pop.move(i, clamp(std::move(x), space), objective)) {
            const Element& moved = pop.members[i];
            if (moved.fitness < pbest_[i].fitness) pbest_[i] = moved;
            if (moved.fitness < gbest_.fitness) gbest_ = moved;
        }
    }
    pop.refresh_best();
}

GaOptimizer::GaOptimizer(GaConfig cfg) : cfg_(cfg) {
    if (cfg_.crossover_prob < 0.0 || cfg_.crossover_prob > 1.0 || cfg_.mutation_prob < 0.0 ||
        cfg_.mutation_prob > 1.0) {
        throw std::invalid_argument("GaConfig: probabilities must lie in [0,1]");
    }
}

void GaOptimizer::step(Population& pop, const SearchSpace& space, std::size_t /*iter*/,
                       std::size_t /*total_iters*/, Rng& rng, const ObjectiveFn& objective) {
    const std::size_t n = pop.members.size();
    const std::size_t elite = pop.best_index;
    // Parents are read from the pre-step generation.
    const std::vector<Element> parents = pop.members;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == elite) continue;
        std::vector<double> child = parents[i].position;
        if (rng.uniform() < cfg_.crossover_prob) {
            const std::size_t m1 = rng.index(n);
            const std::size_t m2 = rng.index(n);
            const std::size_t mate = parents[m2].fitness < parents[m1].fitness ? m2 : m1;
            const double beta = rng.uniform();
            for (std::size_t d = 0; d < child.size(); ++d) {
                child[d] = beta * child[d] + (1.0 - beta) * parents[mate].position[d];
            }
        }
        for (std::size_t d = 0; d < child.size(); ++d) {
            if (rng.uniform() < cfg_.mutation_prob) {
                child[d] = rng.uniform(space.lower()[d], space.upper()[d]);
            }
        }
        pop.move(i, std::move(child), objective);
    }
    pop.refresh_best();
}

GwoOptimizer::GwoOptimizer(GwoConfig cfg) : cfg_(cfg) {}

void GwoOptimizer::prepare(Population& pop, const SearchSpace&, Rng&) {
    if (pop.members.size() < 3) {
        throw std::invalid_argument("GwoOptimizer: population of at least 3 needed for leaders");
    }
    std::vector<std::size_t> order(pop.members.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return pop.members[a].fitness < pop.members[b].fitness;
    });
    for (int p = 0; p < 3; ++p) leaders_[p] = pop.members[order[p]];
}

void GwoOptimizer::step(Population& pop, const SearchSpace& space, std::size_t iter,
                        std::size_t total_iters, Rng& rng, const ObjectiveFn& objective) {
    const double a = linear_schedule(cfg_.a_start, cfg_.a_end, iter, total_iters);
    for (std::size_t i = 0; i < pop.members.size(); ++i) {
        std::vector<double> x(space.dim());
        for (std::size_t d = 0; d < space.dim(); ++d) {
            double sum = 0.0;
            for (const Element& leader : leaders_) {
                const double r1 = rng.uniform();
                const double r2 = rng.uniform();
                const double big_c = 2.0 * r1;
                const double big_a = 2.0 * a * r2 - a;
                const double dist = std::fabs(big_c * leader.position[d] -
                                              pop.members[i].position[d]);
                sum += leader.position[d] - big_a * dist;
            }
            x[d] = sum / 3.0;
        }
        if (pop.move(i, clamp(std::move(x), space), objective)) {
            const Element& moved = pop.members[i];
            if (moved.fitness < leaders_[0].fitness) {
                leaders_[2] = leaders_[1];
                leaders_[1] = leaders_[0];
                leaders_[0] = moved;
            } else if (moved.fitness < leaders_[1].fitness) {
                leaders_[2] = leaders_[1];
                leaders_[1] = moved;
            } else if (moved.fitness < leaders_[2].fitness) {
                leaders_[2] = moved;
            }
        }
    }
    pop.refresh_best();
}

ScaOptimizer::ScaOptimizer(ScaConfig cfg) : cfg_(cfg) {}

void ScaOptimizer::prepare(Population& pop, const SearchSpace&, Rng&) {
    destination_ = pop.best();
}

void ScaOptimizer::step(Population& pop, const SearchSpace& space, std::size_t iter,
                        std::size_t total_iters, Rng& rng, const ObjectiveFn& objective) {
    const double c1 = linear_schedule(cfg_.c1_start, cfg_.c1_end, iter, total_iters);
    for (std::size_t i = 0; i < pop.members.size(); ++i) {
        const double c2 = rng.uniform(0.0, cfg_.c2_max);
        const double c3 = rng.uniform(0.0, cfg_.c3_max);
        const bool sine_branch = rng.uniform() < 0.5;
        const double swing = c1 * (sine_branch ? std::sin(c2) : std::cos(c2));
        std::vector<double> x = pop.members[i].position;
        for (std::size_t d = 0; d < space.dim(); ++d) {
            x[d] += swing * std::fabs(c3 * destination_.position[d] - x[d]);
        }
        if (pop.move(i, clamp(std::move(x), space), objective)) {
            const Element& moved = pop.members[i];
            if (moved.fitness < destination_.fitness) destination_ = moved;
        }
    }
    pop.refresh_best();
}

std::unique_ptr<Optimizer> make_baseline(const BaselineConfig& cfg) {
    switch (cfg.kind) {
        case BaselineKind::Pso: return std::make_unique<PsoOptimizer>(cfg.pso);
        case BaselineKind::Ga: return std::make_unique<GaOptimizer>(cfg.ga);
        case BaselineKind::Gwo: return std::make_unique<GwoOptimizer>(cfg.gwo);
        case BaselineKind::Sca: return std::make_unique<ScaOptimizer>(cfg.sca);
    }
    throw std::invalid_argument("make_baseline: unknown kind");
}

}  // namespace isacl
