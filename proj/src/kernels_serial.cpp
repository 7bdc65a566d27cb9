#include "kernel_terms.hpp"
#include "rabi/kernels.hpp"

namespace rabi::kernels {

void rabi_series_serial(std::span<const double> amp, std::span<const double> freq,
                        std::span<const double> times, std::span<double> out) {
    detail::check_sizes(amp.size(), freq.size(), times.size(), out.size());
    for (std::size_t i = 0; i < times.size(); ++i) out[i] = detail::rabi_point(amp, freq, times[i]);
}

void cosine_series_serial(std::span<const double> offset, std::span<const double> amp,
                          std::span<const double> freq, std::span<const double> times,
                          std::span<double> out) {
    detail::check_sizes(offset.size(), amp.size(), times.size(), out.size());
    detail::check_sizes(amp.size(), freq.size(), times.size(), out.size());
    for (std::size_t i = 0; i < times.size(); ++i)
        out[i] = detail::cosine_point(offset, amp, freq, times[i]);
}

}  // namespace rabi::kernels
