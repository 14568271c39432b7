#pragma once

#include <cstddef>

namespace isacl::parallel {

/// Work below these sizes runs serially; the fork/join overhead on small
/// problems costs more than the loop body.
inline constexpr std::size_t kMinSamplesParallel = 256;
inline constexpr std::size_t kMinRowsParallel = 8;

/// Process-wide switch for the OpenMP code paths. Defaults to on when built
/// with OpenMP support, permanently off otherwise. The parallel kernels fill
/// independent per-item slots and reduce serially, so toggling this never
/// changes results, only timing.
bool enabled();
void set_enabled(bool on);

/// Number of threads OpenMP would use, 1 in serial builds.
int max_threads();

}  // namespace isacl::parallel
