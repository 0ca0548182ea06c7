#pragma once

// Grid evaluation kernels. Every plotted curve in the engine is a map of an
// independent point function over a grid; `parallel_map` runs it under
// OpenMP and `serial_map` is the reference the tests compare against. The
// point function must be pure so both produce bit-identical output.

#include <cstddef>
#include <exception>
#include <span>
#include <vector>

namespace emcad {

template <class F>
std::vector<double> serial_map(std::span<const double> xs, F&& f) {
    std::vector<double> out(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) out[i] = f(xs[i]);
    return out;
}

template <class F>
std::vector<double> parallel_map(std::span<const double> xs, F&& f) {
    std::vector<double> out(xs.size());
    std::exception_ptr failure;
    const auto n = static_cast<std::ptrdiff_t>(xs.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = f(xs[static_cast<std::size_t>(i)]);
        } catch (...) {
#pragma omp critical(emcad_parallel_map_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

enum class Execution { serial, parallel };

template <class F>
std::vector<double> map_grid(Execution exec, std::span<const double> xs, F&& f) {
    return exec == Execution::parallel ? parallel_map(xs, f) : serial_map(xs, f);
}

}  // namespace emcad
