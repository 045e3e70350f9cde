#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <vector>

namespace parabraid {

/// Thread budget for sweeps. threads == 0 means PARABRAID_THREADS or all cores.
struct Execution {
    int threads = 0;

    int resolved_threads() const;
    static Execution serial() { return Execution{1}; }
};

/// Plain loop; the reference every parallel sweep is tested against.
template <class T>
std::vector<T> serial_map(std::size_t n, const std::function<T(std::size_t)>& fn) {
    std::vector<T> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(fn(i));
    return out;
}

namespace detail {
// Runs body(i) for i in [0,n) on an OpenMP team; rethrows the first exception.
void omp_for(std::size_t n, int threads, const std::function<void(std::size_t)>& body);
}  // namespace detail

/// Results are written into slot i, so output order never depends on scheduling.
template <class T>
std::vector<T> parallel_map(const Execution& exec, std::size_t n,
                            const std::function<T(std::size_t)>& fn) {
    int threads = exec.resolved_threads();
    if (threads <= 1 || n < 2) return serial_map<T>(n, fn);
    std::vector<T> out(n);
    detail::omp_for(n, threads, [&](std::size_t i) { out[i] = fn(i); });
    return out;
}

}  // namespace parabraid
