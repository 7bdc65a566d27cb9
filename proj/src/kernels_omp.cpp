#include "kernel_terms.hpp"
#include "rabi/kernels.hpp"

namespace rabi::kernels {

void rabi_series_omp(std::span<const double> amp, std::span<const double> freq,
                     std::span<const double> times, std::span<double> out) {
    detail::check_sizes(amp.size(), freq.size(), times.size(), out.size());
    const auto count = static_cast<long>(times.size());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < count; ++i) {
        const auto k = static_cast<std::size_t>(i);
        out[k] = detail::rabi_point(amp, freq, times[k]);
    }
}

void cosine_series_omp(std::span<const double> offset, std::span<const double> amp,
                       std::span<const double> freq, std::span<const double> times,
                       std::span<double> out) {
    detail::check_sizes(offset.size(), amp.size(), times.size(), out.size());
    detail::check_sizes(amp.size(), freq.size(), times.size(), out.size());
    const auto count = static_cast<long>(times.size());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < count; ++i) {
        const auto k = static_cast<std::size_t>(i);
        out[k] = detail::cosine_point(offset, amp, freq, times[k]);
    }
}

}  // namespace rabi::kernels
