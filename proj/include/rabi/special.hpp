#pragma once

#include <cstddef>
#include <vector>

namespace rabi {

inline constexpr double kDefaultTailTol = 1e-12;
inline constexpr unsigned kMaxLaguerreOrder = 1'000'000;

// Laguerre polynomial L_N(x) by upward three-term recurrence with
// long-double accumulation. Throws DomainError for x < 0, non-finite x,
// or N > kMaxLaguerreOrder.
double laguerre(unsigned n, double x);

// <N| D(d) |N> = exp(-d^2/2) L_N(d^2), the overlap of two number states
// displaced relative to each other by a real amount d.
double displaced_overlap(unsigned n, double d);

// Log Poisson masses log p(N) = -a + N log a - log N! for N = 0..size()-1,
// truncated once the cumulative mass reaches 1 - tail_tol.
class LogWeightTable {
public:
    LogWeightTable(double alpha_sq, double tail_tol, std::vector<double> log_p, double mass);

    double alpha_sq() const noexcept { return alpha_sq_; }
    double tail_tol() const noexcept { return tail_tol_; }
    std::size_t size() const noexcept { return log_p_.size(); }
    const std::vector<double>& log_p() const noexcept { return log_p_; }
    double log_weight(std::size_t n) const { return log_p_.at(n); }
    double weight(std::size_t n) const;
    // Cumulative mass of the retained terms.
    double mass() const noexcept { return mass_; }

private:
    double alpha_sq_;
    double tail_tol_;
    std::vector<double> log_p_;
    double mass_;
};

// Throws DomainError for negative or non-finite alpha_sq, or tail_tol
// outside (0, 1e-6].
LogWeightTable poisson_logweights(double alpha_sq, double tail_tol = kDefaultTailTol);

}  // namespace rabi
