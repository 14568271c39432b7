#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace isacl {

/// The ten classic one-dimensional chaotic recurrences used as structured
/// pseudo-random sources. All are kept on the open interval (0,1); the two
/// maps whose natural domain is (-1,1) (Chebyshev, iterative) are conjugated
/// through y = (x+1)/2 so ChaosState holds a single invariant.
enum class ChaosMap {
    Logistic,
    Sine,
    Tent,
    Chebyshev,
    Circle,
    GaussMouse,
    Iterative,
    Piecewise,
    Singer,
    Sinusoidal,
};

inline constexpr std::size_t kNumChaosMaps = 10;

/// Post-step clamp bound: iterates that land on 0 or 1 exactly are pulled
/// back to [eps, 1-eps] so every orbit stays strictly interior.
inline constexpr double kChaosEpsilon = 1e-12;

std::string chaos_map_name(ChaosMap map);

/// One iterate of the given map, clamped to [eps, 1-eps].
double chaos_step(ChaosMap map, double x);

/// True for seeds whose orbit degenerates immediately: fixed points and
/// their exactly-representable finite pre-images (e.g. 0, 0.25, 0.5, 0.75,
/// 1 for the logistic map). init_chaos redraws such seeds.
bool is_degenerate_seed(ChaosMap map, double x);

/// N rows of chaotic values, row j evolving under map_kinds[j]. Plain value
/// type: advancing is a pure function of the state, safe to copy across
/// threads.
struct ChaosState {
    std::vector<ChaosMap> map_kinds;
    std::vector<double> current;  // row-major rows() x dim
    std::size_t dim = 0;

    std::size_t rows() const { return map_kinds.size(); }
    double at(std::size_t row, std::size_t col) const { return current[row * dim + col]; }
};

/// Builds an n_maps x dim state. Map kinds cycle through the ten maps in
/// enum order. Entries are drawn uniform in (0,1) from a generator seeded
/// with `seed`, row-major, redrawing degenerate seeds; equal seeds give
/// identical states. Throws std::invalid_argument when n_maps or dim is 0.
ChaosState init_chaos(std::size_t n_maps, std::size_t dim, std::uint64_t seed);

/// Advances every entry one step under its row's map.
void advance(ChaosState& state);

}  // namespace isacl
