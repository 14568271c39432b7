#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "isacl/chaos.hpp"

using namespace isacl;

TEST_CASE("init_chaos builds an n_maps x dim state inside the open interval") {
    const ChaosState state = init_chaos(10, 140, 42);
    CHECK(state.rows() == 10);
    CHECK(state.dim == 140);
    CHECK(state.current.size() == 10 * 140);
    for (const double v : state.current) {
        CHECK(v > 0.0);
        CHECK(v < 1.0);
    }
}

TEST_CASE("init_chaos is deterministic in the seed") {
    const ChaosState a = init_chaos(1, 1, 1234);
    const ChaosState b = init_chaos(1, 1, 1234);
    CHECK(a.current == b.current);
    CHECK(a.map_kinds == b.map_kinds);

    const ChaosState c = init_chaos(1, 1, 1235);
    CHECK(a.current != c.current);
}

TEST_CASE("init_chaos rejects empty shapes") {
    CHECK_THROWS_AS(init_chaos(0, 5, 1), std::invalid_argument);
    CHECK_THROWS_AS(init_chaos(5, 0, 1), std::invalid_argument);
}

TEST_CASE("map kinds cycle through the ten maps in order") {
    const ChaosState state = init_chaos(23, 2, 7);
    for (std::size_t j = 0; j < state.rows(); ++j) {
        CHECK(state.map_kinds[j] == static_cast<ChaosMap>(j % kNumChaosMaps));
    }
}

TEST_CASE("logistic iterates match direct arithmetic") {
    CHECK(chaos_step(ChaosMap::Logistic, 0.2) == doctest::Approx(0.64).epsilon(1e-12));
    CHECK(chaos_step(ChaosMap::Logistic, 0.64) == doctest::Approx(0.9216).epsilon(1e-12));
    // 0.75 is a fixed point, which is exactly why it is a forbidden seed.
    CHECK(chaos_step(ChaosMap::Logistic, 0.75) == doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("degenerate seeds are recognized per map") {
    for (const double v : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        CHECK(is_degenerate_seed(ChaosMap::Logistic, v));
    }
    CHECK_FALSE(is_degenerate_seed(ChaosMap::Logistic, 0.2));
    CHECK(is_degenerate_seed(ChaosMap::Tent, 0.7));
    CHECK(is_degenerate_seed(ChaosMap::Iterative, 0.5));
    CHECK(is_degenerate_seed(ChaosMap::Sine, 0.5));
    for (std::size_t m = 0; m < kNumChaosMaps; ++m) {
        CHECK(is_degenerate_seed(static_cast<ChaosMap>(m), 0.0));
        CHECK(is_degenerate_seed(static_cast<ChaosMap>(m), 1.0));
    }
}

TEST_CASE("advance applies each row's own map elementwise") {
    ChaosState state = init_chaos(10, 4, 99);
    const ChaosState before = state;
    advance(state);
    for (std::size_t j = 0; j < state.rows(); ++j) {
        for (std::size_t d = 0; d < state.dim; ++d) {
            CHECK(state.at(j, d) == chaos_step(before.map_kinds[j], before.at(j, d)));
        }
    }
}

TEST_CASE("advance stays inside the open interval for every map") {
    ChaosState state = init_chaos(10, 4, 5);
    for (int k = 0; k < 2000; ++k) {
        advance(state);
        for (const double v : state.current) {
            CHECK(v > 0.0);
            CHECK(v < 1.0);
        }
    }
}

TEST_CASE("equal seeds stay bitwise equal under equal advance counts") {
    ChaosState a = init_chaos(10, 8, 77);
    ChaosState b = init_chaos(10, 8, 77);
    for (int k = 0; k < 50; ++k) {
        advance(a);
        advance(b);
    }
    CHECK(a.current == b.current);
}

TEST_CASE("every map has a distinct printable name") {
    for (std::size_t m = 0; m < kNumChaosMaps; ++m) {
        for (std::size_t o = m + 1; o < kNumChaosMaps; ++o) {
            CHECK(chaos_map_name(static_cast<ChaosMap>(m)) !=
                  chaos_map_name(static_cast<ChaosMap>(o)));
        }
    }
}
