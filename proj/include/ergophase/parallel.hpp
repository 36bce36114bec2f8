// parallel.hpp — OpenMP-backed map kernel with a serial reference path, and
// deterministic pairwise summation used by every quadrature and time average.
//
// The parallel and serial paths call the same per-element function, and all
// reductions run over the precomputed element buffer with a fixed tree, so
// results are bit-identical regardless of thread count.

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#ifdef ERGOPHASE_HAVE_OPENMP
#include <omp.h>
#endif

namespace ergophase::parallel {

inline bool& force_serial_flag() {
    static bool flag = false;
    return flag;
}

inline void set_force_serial(bool v) { force_serial_flag() = v; }

inline bool openmp_enabled() {
#ifdef ERGOPHASE_HAVE_OPENMP
    return !force_serial_flag();
#else
    return false;
#endif
}

inline int max_threads() {
#ifdef ERGOPHASE_HAVE_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

// out[i] = fn(i), serial reference path
template <typename T, typename F>
void map_indexed_serial(std::size_t n, F&& fn, std::vector<T>& out) {
    out.resize(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
}

// out[i] = fn(i), parallel when OpenMP is available
template <typename T, typename F>
void map_indexed(std::size_t n, F&& fn, std::vector<T>& out) {
    out.resize(n);
#ifdef ERGOPHASE_HAVE_OPENMP
    if (!force_serial_flag() && n >= 64) {
        const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < count; ++i)
            out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
        return;
    }
#endif
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
}

template <typename T>
T pairwise_sum(std::span<const T> values) {
    const std::size_t n = values.size();
    if (n == 0) return T{};
    if (n <= 8) {
        T acc = values[0];
        for (std::size_t i = 1; i < n; ++i) acc += values[i];
        return acc;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(values.subspan(0, half)) + pairwise_sum(values.subspan(half));
}

inline double pairwise_sum(const std::vector<double>& v) {
    return pairwise_sum(std::span<const double>(v));
}

inline std::complex<double> pairwise_sum(const std::vector<std::complex<double>>& v) {
    return pairwise_sum(std::span<const std::complex<double>>(v));
}

}  // namespace ergophase::parallel
