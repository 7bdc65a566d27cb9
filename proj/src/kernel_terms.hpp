#pragma once

// Per-time-point bodies shared by the serial and OpenMP kernels.

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>

#include "rabi/summation.hpp"

namespace rabi::kernels::detail {

inline double rabi_point(std::span<const double> amp, std::span<const double> freq, double t) {
    NeumaierSum acc;
    for (std::size_t n = 0; n < amp.size(); ++n) {
        const double s = std::sin(0.5 * freq[n] * t);
        acc.add(amp[n] * (2.0 * s * s));
    }
    return acc.value();
}

inline double cosine_point(std::span<const double> offset, std::span<const double> amp,
                           std::span<const double> freq, double t) {
    NeumaierSum acc;
    for (std::size_t n = 0; n < amp.size(); ++n) acc.add(offset[n] + amp[n] * std::cos(freq[n] * t));
    return acc.value();
}

inline void check_sizes(std::size_t a, std::size_t b, std::size_t times, std::size_t out) {
    if (a != b) throw std::invalid_argument("kernel: coefficient arrays differ in length");
    if (times != out) throw std::invalid_argument("kernel: output length differs from time grid");
}

}  // namespace rabi::kernels::detail
