#include "isacl/parallel.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace isacl::parallel {

namespace {
std::atomic<bool> g_enabled{
#ifdef _OPENMP
    true
#else
    false
#endif
};
}  // namespace

bool enabled() {
#ifdef _OPENMP
    return g_enabled.load(std::memory_order_relaxed);
#else
    return false;
#endif
}

void set_enabled(bool on) {
#ifdef _OPENMP
    g_enabled.store(on, std::memory_order_relaxed);
#else
    (void)on;
#endif
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace isacl::parallel
