#include "isacl/chaos.hpp"

#include <cmath>
#include <stdexcept>

#include "isacl/rng.hpp"

namespace isacl {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;

double clamp_unit(double x) {
    if (x < kChaosEpsilon) return kChaosEpsilon;
    if (x > 1.0 - kChaosEpsilon) return 1.0 - kChaosEpsilon;
    return x;
}

double step_raw(ChaosMap map, double x) {
    switch (map) {
        case ChaosMap::Logistic:
            return 4.0 * x * (1.0 - x);
        case ChaosMap::Sine:
            return std::sin(kPi * x);
        case ChaosMap::Tent:
            return x < 0.7 ? x / 0.7 : (10.0 / 3.0) * (1.0 - x);
        case ChaosMap::Chebyshev: {
            // Degree-4 Chebyshev on [-1,1], conjugated to (0,1).
            const double z = 2.0 * x - 1.0;
            return 0.5 * (std::cos(4.0 * std::acos(z)) + 1.0);
        }
        case ChaosMap::Circle: {
            const double a = 0.5, b = 0.2;
            const double y = x + b - (a / (2.0 * kPi)) * std::sin(2.0 * kPi * x);
            return y - std::floor(y);
        }
        case ChaosMap::GaussMouse:
            return x == 0.0 ? 0.0 : 1.0 / x - std::floor(1.0 / x);
        case ChaosMap::Iterative: {
            // sin(a*pi/z) on (-1,1), conjugated to (0,1); z = 0 (x = 0.5)
            // is undefined and rejected as a seed, the nudge covers a
            // mid-orbit exact hit.
            double z = 2.0 * x - 1.0;
            if (z == 0.0) z = kChaosEpsilon;
            return 0.5 * (std::sin(0.7 * kPi / z) + 1.0);
        }
        case ChaosMap::Piecewise: {
            const double p = 0.4;
            if (x < p) return x / p;
            if (x < 0.5) return (x - p) / (0.5 - p);
            if (x < 1.0 - p) return (1.0 - p - x) / (0.5 - p);
            return (1.0 - x) / p;
        }
        case ChaosMap::Singer: {
            const double mu = 1.07;
            return mu * (7.86 * x - 23.31 * x * x + 28.75 * x * x * x -
                         13.302875 * x * x * x * x);
        }
        case ChaosMap::Sinusoidal:
            return 2.3 * x * x * std::sin(kPi * x);
    }
    return x;
}

}  // namespace

std::string chaos_map_name(ChaosMap map) {
    switch (map) {
        case ChaosMap::Logistic: return "logistic";
        case ChaosMap::Sine: return "sine";
        case ChaosMap::Tent: return "tent";
        case ChaosMap::Chebyshev: return "chebyshev";
        case ChaosMap::Circle: return "circle";
        case ChaosMap::GaussMouse: return "gauss-mouse";
        case ChaosMap::Iterative: return "iterative";
        case ChaosMap::Piecewise: return "piecewise";
        case ChaosMap::Singer: return "singer";
        case ChaosMap::Sinusoidal: return "sinusoidal";
    }
    return "unknown";
}

double chaos_step(ChaosMap map, double x) { return clamp_unit(step_raw(map, x)); }

bool is_degenerate_seed(ChaosMap map, double x) {
    if (x <= 0.0 || x >= 1.0) return true;
    switch (map) {
        case ChaosMap::Logistic:
            // 0.5 -> 1 -> 0, 0.25 -> 0.75 -> 0.75 (fixed).
            return x == 0.25 || x == 0.5 || x == 0.75;
        case ChaosMap::Sine:
            return x == 0.5;  // -> 1 -> (clamped) near-zero crawl
        case ChaosMap::Tent:
            return x == 0.7;  // -> 1 -> 0
        case ChaosMap::Iterative:
            return x == 0.5;  // conjugate z = 0, map undefined
        default:
            return false;
    }
}

ChaosState init_chaos(std::size_t n_maps, std::size_t dim, std::uint64_t seed) {
    if (n_maps == 0 || dim == 0) {
        throw std::invalid_argument("init_chaos: n_maps and dim must be positive");
    }
    ChaosState state;
    state.dim = dim;
    state.map_kinds.reserve(n_maps);
    for (std::size_t j = 0; j < n_maps; ++j) {
        state.map_kinds.push_back(static_cast<ChaosMap>(j % kNumChaosMaps));
    }
    state.current.resize(n_maps * dim);
    Rng rng(seed);
    for (std::size_t j = 0; j < n_maps; ++j) {
        for (std::size_t d = 0; d < dim; ++d) {
            double v = rng.uniform();
            while (is_degenerate_seed(state.map_kinds[j], v)) v = rng.uniform();
            state.current[j * dim + d] = v;
        }
    }
    return state;
}

void advance(ChaosState& state) {
    for (std::size_t j = 0; j < state.rows(); ++j) {
        const ChaosMap map = state.map_kinds[j];
        double* row = state.current.data() + j * state.dim;
        for (std::size_t d = 0; d < state.dim; ++d) {
            row[d] = chaos_step(map, row[d]);
        }
    }
}

}  // namespace isacl
