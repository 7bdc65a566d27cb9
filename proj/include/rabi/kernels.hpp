#pragma once

// Time-grid kernels behind the coherent-state sums. Each kernel exists as a
// plain serial loop (the reference) and an OpenMP loop over time points.
// Every time point sums over N in the same fixed order with compensated
// accumulation, so both versions return bitwise-identical results for any
// thread count or schedule.

#include <span>

namespace rabi::kernels {

enum class Exec { Serial, Parallel };

// out[i] = sum_N amp[N] * (1 - cos(freq[N] * times[i])), evaluated as
// 2 sin^2(freq t / 2) so every term is >= 0 and exactly 0 at t = 0.
void rabi_series_serial(std::span<const double> amp, std::span<const double> freq,
                        std::span<const double> times, std::span<double> out);
void rabi_series_omp(std::span<const double> amp, std::span<const double> freq,
                     std::span<const double> times, std::span<double> out);

// out[i] = sum_N (offset[N] + amp[N] * cos(freq[N] * times[i]))
void cosine_series_serial(std::span<const double> offset, std::span<const double> amp,
                          std::span<const double> freq, std::span<const double> times,
                          std::span<double> out);
void cosine_series_omp(std::span<const double> offset, std::span<const double> amp,
                       std::span<const double> freq, std::span<const double> times,
                       std::span<double> out);

inline void rabi_series(Exec exec, std::span<const double> amp, std::span<const double> freq,
                        std::span<const double> times, std::span<double> out) {
    exec == Exec::Serial ? rabi_series_serial(amp, freq, times, out)
                         : rabi_series_omp(amp, freq, times, out);
}

inline void cosine_series(Exec exec, std::span<const double> offset, std::span<const double> amp,
                          std::span<const double> freq, std::span<const double> times,
                          std::span<double> out) {
    exec == Exec::Serial ? cosine_series_serial(offset, amp, freq, times, out)
                         : cosine_series_omp(offset, amp, freq, times, out);
}

}  // namespace rabi::kernels
