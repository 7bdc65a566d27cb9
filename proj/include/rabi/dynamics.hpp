#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rabi/kernels.hpp"
#include "rabi/model.hpp"
#include "rabi/special.hpp"

namespace rabi {

// Strictly increasing time grid plus named value channels of equal length.
class TimeSeries {
public:
    TimeSeries() = default;
    explicit TimeSeries(std::vector<double> times);

    const std::vector<double>& times() const noexcept { return times_; }
    std::size_t size() const noexcept { return times_.size(); }

    // Throws DomainError on length mismatch, duplicate name or non-finite value.
    void add_channel(std::string name, std::vector<double> values);
    bool has_channel(std::string_view name) const noexcept;
    const std::vector<double>& channel(std::string_view name) const;
    const std::vector<std::pair<std::string, std::vector<double>>>& channels() const noexcept {
        return channels_;
    }

private:
    std::vector<double> times_;
    std::vector<std::pair<std::string, std::vector<double>>> channels_;
};

// `points` equally spaced times covering [start, stop] inclusive.
std::vector<double> uniform_grid(double start, double stop, std::size_t points);

// Throws DomainError unless finite and strictly increasing.
void validate_times(std::span<const double> times);

// Coherent-state-averaged transition probability
//   T(t) = sum_N p(N) w_N (1 - cos(rabi_freq_N t)),
// with w_N the stable branch weight of aa_row. Channel "T", values in [0, 1/4].
TimeSeries transition_prob(const ModelParams& p, std::span<const double> times,
                           double tail_tol = kDefaultTailTol,
                           kernels::Exec exec = kernels::Exec::Parallel);

// Channel "P_stay" = 1 - 2 T(t).
TimeSeries survival_prob(const ModelParams& p, std::span<const double> times,
                         double tail_tol = kDefaultTailTol,
                         kernels::Exec exec = kernels::Exec::Parallel);

// Jaynes-Cummings inversion for an initially excited atom and coherent field:
//   W(t) = sum_N p(N) [delta^2 + 4 g^2 (N+1) cos(W_N t)] / W_N^2.
// corrected: W_N = sqrt(delta^2 + 4 g^2 (N+1)).
// literal:   W_N = delta^2 + 4 g (N+1), kept for comparison only.
// Channel "W".
TimeSeries jc_inversion(double delta, double g, double alpha_sq, std::span<const double> times,
                        double tail_tol = kDefaultTailTol, bool corrected = true,
                        kernels::Exec exec = kernels::Exec::Parallel);

struct BranchCheck {
    // max_t |P_transfer(t) - w_N (1 - cos(rabi_freq_N t))|
    double max_abs_residual = 0.0;
    // max_t |P_transfer(t) - 2 w_N (1 - cos(rabi_freq_N t))|
    double max_abs_residual_doubled = 0.0;
    // max_t P_transfer(t)
    double max_transfer = 0.0;
};

// Evolves the |1,1>|N_1> amplitude sum_{+-} (Y_{N,+-}/L^2_{N,+-}) exp(-i e_{+-} t)
// of the two AA branches directly and compares the resulting population with
// the closed-form weighted term. Throws DegenerateRowError when Omega_1N == 0.
BranchCheck two_branch_interference_check(unsigned n, const ModelParams& p,
                                          std::span<const double> times);

}  // namespace rabi
