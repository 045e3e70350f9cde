#include "parabraid/parallel.hpp"

#include "parabraid/error.hpp"

#include <omp.h>

#include <cstdlib>
#include <mutex>
#include <string>

namespace parabraid {

int Execution::resolved_threads() const {
    if (threads > 0) return threads;
    if (const char* env = std::getenv("PARABRAID_THREADS")) {
        try {
            int t = std::stoi(env);
            if (t > 0) return t;
        } catch (const std::exception&) {
        }
        throw Error("cli.threads", std::string("PARABRAID_THREADS must be a positive integer, got '") +
                                       env + "'");
    }
    return omp_get_max_threads();
}

namespace detail {

void omp_for(std::size_t n, int threads, const std::function<void(std::size_t)>& body) {
    std::exception_ptr first;
    std::once_flag once;
    const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
    for (long long i = 0; i < count; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
            std::call_once(once, [&] { first = std::current_exception(); });
        }
    }
    if (first) std::rethrow_exception(first);
}

}  // namespace detail

}  // namespace parabraid
