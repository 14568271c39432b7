#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "isacl/optimizer.hpp"

namespace isacl {

/// Linear interpolation from start (iter 0) to end (iter = total), exact at
/// both endpoints. Optimizer steps pass 1-based iterations, so schedules
/// reach their terminal value on the final step.
double linear_schedule(double start, double end, std::size_t iter, std::size_t total);

struct PsoConfig {
    double w_min = 0.1;
    double w_max = 0.4;
    double c1 = 2.0;
    double c2 = 2.0;
};

struct GaConfig {
    double crossover_prob = 0.25;
    double mutation_prob = 0.2;
};

struct GwoConfig {
    double a_start = 2.0;
    double a_end = 0.0;
};

struct ScaConfig {
    double c1_start = 1.0;
    double c1_end = 0.0;
    double c2_max = 6.283185307179586476925286766559;  // 2*pi
    double c3_max = 2.0;
};

/// Particle swarm with linearly decaying inertia. Per particle in index
/// order: per dimension, r1 then r2 are drawn and the velocity updated
/// against the particle's personal best and the swarm best-so-far; the
/// clamped move is evaluated, then personal and swarm bests update by
/// strict improvement (the swarm best live within the sweep).
class PsoOptimizer : public Optimizer {
public:
    explicit PsoOptimizer(PsoConfig cfg = {});
    std::string name() const override { return "PSO"; }
    std::size_t evaluations_per_iteration(std::size_t pop_size) const override { return pop_size; }
    void prepare(Population& pop, const SearchSpace& space, Rng& rng) override;
    void step(Population& pop, const SearchSpace& space, std::size_t iter,
              std::size_t total_iters, Rng& rng, const ObjectiveFn& objective) override;

private:
    PsoConfig cfg_;
    std::vector<std::vector<double>> velocity_;
    std::vector<Element> pbest_;
    Element gbest_;
};

/// Generational GA with elitism. Each non-elite slot i breeds a child from
/// member i: with probability crossover_prob it is arithmetically blended
/// with a tournament-of-2 mate (draws: mate index twice, then the blend
/// weight), then every gene mutates to a fresh uniform value with
/// probability mutation_prob. Children replace their slot unconditionally;
/// the elite slot is carried unchanged, so pop_size - 1 evaluations per
/// step and the best fitness never worsens.
class GaOptimizer : public Optimizer {
public:
    explicit GaOptimizer(GaConfig cfg = {});
    std::string name() const override { return "GA"; }
    std::size_t evaluations_per_iteration(std::size_t pop_size) const override {
        return pop_size - 1;
    }
    void step(Population& pop, const SearchSpace& space, std::size_t iter,
              std::size_t total_iters, Rng& rng, const ObjectiveFn& objective) override;

private:
    GaConfig cfg_;
};

/// Grey wolf optimizer. Three leader positions persist across iterations
/// and update by the strict-improvement cascade after every wolf move. Per
/// wolf, per dimension, per leader (alpha, beta, delta): r1 then r2 are
/// drawn, C = 2 r1, A = 2 a r2 - a, and the wolf moves to the mean of the
/// three leader attractors, clamped.
class GwoOptimizer : public Optimizer {
public:
    explicit GwoOptimizer(GwoConfig cfg = {});
    std::string name() const override { return "GWO"; }
    std::size_t evaluations_per_iteration(std::size_t pop_size) const override { return pop_size; }
    void prepare(Population& pop, const SearchSpace& space, Rng& rng) override;
    void step(Population& pop, const SearchSpace& space, std::size_t iter,
              std::size_t total_iters, Rng& rng, const ObjectiveFn& objective) override;

private:
    GwoConfig cfg_;
    Element leaders_[3];  // alpha, beta, delta
};

/// Sine cosine algorithm steered by the best-so-far destination. Per
/// element per iteration one (c2, c3, r) triple is drawn and shared across
/// dimensions; r < 0.5 selects the sine branch, otherwise cosine. The
/// destination updates by strict improvement after each move.
class ScaOptimizer : public Optimizer {
public:
    explicit ScaOptimizer(ScaConfig cfg = {});
    std::string name() const override { return "SCA"; }
    std::size_t evaluations_per_iteration(std::size_t pop_size) const override { return pop_size; }
    void prepare(Population& pop, const SearchSpace& space, Rng& rng) override;
    void step(Population& pop, const SearchSpace& space, std::size_t iter,
              std::size_t total_iters, Rng& rng, const ObjectiveFn& objective) override;

private:
    ScaConfig cfg_;
    Element destination_;
};

enum class BaselineKind { Pso, Ga, Gwo, Sca };

struct BaselineConfig {
    BaselineKind kind = BaselineKind::Pso;
    PsoConfig pso;
    GaConfig ga;
    GwoConfig gwo;
    ScaConfig sca;
};

std::unique_ptr<Optimizer> make_baseline(const BaselineConfig& cfg);

}  // namespace isacl
