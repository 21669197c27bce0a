#include "adic/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace adic {

namespace {

std::atomic<int> g_enabled{-1}; // -1 = not yet decided

bool decide_from_env() {
    const char* v = std::getenv("ADIC_LAB_PARALLEL");
    if (v && (std::strcmp(v, "0") == 0 || std::strcmp(v, "off") == 0))
        return false;
    return true;
}

} // namespace

bool parallel_enabled() {
    int s = g_enabled.load(std::memory_order_relaxed);
    if (s < 0) {
        s = decide_from_env() ? 1 : 0;
        g_enabled.store(s, std::memory_order_relaxed);
    }
    return s == 1;
}

void set_parallel_enabled(bool on) {
    g_enabled.store(on ? 1 : 0, std::memory_order_relaxed);
}

int parallel_threads() {
#ifdef _OPENMP
    return parallel_enabled() ? omp_get_max_threads() : 1;
#else
    return 1;
#endif
}

} // namespace adic
