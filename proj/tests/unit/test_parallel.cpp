#include <doctest.h>

#include <vector>

#include "isacl/chaos.hpp"
#include "isacl/isacl.hpp"
#include "isacl/mfnn.hpp"
#include "isacl/parallel.hpp"
#include "isacl/rng.hpp"
#include "support/test_functions.hpp"

using namespace isacl;

namespace {

/// Restores the process-wide switch on scope exit.
struct ParallelGuard {
    bool saved = parallel::enabled();
    ~ParallelGuard() { parallel::set_enabled(saved); }
};

}  // namespace

TEST_CASE("the parallel switch round-trips where supported") {
    ParallelGuard guard;
    CHECK(parallel::max_threads() >= 1);

    parallel::set_enabled(false);
    CHECK_FALSE(parallel::enabled());
    parallel::set_enabled(true);
#ifdef _OPENMP
    CHECK(parallel::enabled());
#else
    CHECK_FALSE(parallel::enabled());
#endif
}

TEST_CASE("dataset_mse is identical with the switch on and off") {
    ParallelGuard guard;
    const NetworkSpec spec{1, 10, 10, 1};
    Rng rng(15);
    std::vector<double> flat(spec.dimension());
    for (double& v : flat) v = rng.uniform(-2.0, 2.0);

    SampleSet s;
    for (int i = 0; i < 1000; ++i) {
        s.inputs.push_back(i / 1000.0);
        s.targets.push_back(0.3 * i / 1000.0);
    }

    parallel::set_enabled(true);
    const double on = dataset_mse(flat, spec, s);
    parallel::set_enabled(false);
    const double off = dataset_mse(flat, spec, s);
    CHECK(on == off);
    CHECK(on == dataset_mse_serial(flat, spec, s));
}

TEST_CASE("the chaotic phase is identical with the switch on and off") {
    ParallelGuard guard;
    const SearchSpace box = SearchSpace::uniform_box(5, -4.0, 4.0);
    ChaosState a = init_chaos(12, 5, 8);
    ChaosState b = a;
    const Element gbest{{2.0, 2.0, 2.0, 2.0, 2.0}, testfn::sphere({2.0, 2.0, 2.0, 2.0, 2.0})};

    parallel::set_enabled(true);
    const ClPhaseResult on = chaotic_learning_phase(gbest, a, box, ClWeight{0.4}, testfn::sphere);
    parallel::set_enabled(false);
    const ClPhaseResult off = chaotic_learning_phase(gbest, b, box, ClWeight{0.4}, testfn::sphere);

    CHECK(on.gbest.position == off.gbest.position);
    CHECK(on.gbest.fitness == off.gbest.fitness);
    CHECK(on.improved == off.improved);
    CHECK(a.current == b.current);
}
