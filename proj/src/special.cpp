#include "rabi/special.hpp"

#include <cmath>
#include <string>

#include "rabi/errors.hpp"
#include "rabi/summation.hpp"

namespace rabi {

double laguerre(unsigned n, double x) {
    if (!std::isfinite(x)) throw DomainError("laguerre: argument must be finite");
    if (x < 0.0) throw DomainError("laguerre: argument must be non-negative");
    if (n > kMaxLaguerreOrder)
        throw DomainError("laguerre: order " + std::to_string(n) + " exceeds supported bound");

    long double prev = 1.0L;  // L_0
    if (n == 0) return 1.0;
    const long double xl = x;
    long double cur = 1.0L - xl;  // L_1
    for (unsigned k = 1; k < n; ++k) {
        const long double next = ((2.0L * k + 1.0L - xl) * cur - k * prev) / (k + 1.0L);
        prev = cur;
        cur = next;
    }
    return static_cast<double>(cur);
}

double displaced_overlap(unsigned n, double d) {
    if (!std::isfinite(d)) throw DomainError("displaced_overlap: displacement must be finite");
    const double d2 = d * d;
    return std::exp(-0.5 * d2) * laguerre(n, d2);
}

LogWeightTable::LogWeightTable(double alpha_sq, double tail_tol, std::vector<double> log_p,
                               double mass)
    : alpha_sq_(alpha_sq), tail_tol_(tail_tol), log_p_(std::move(log_p)), mass_(mass) {}

double LogWeightTable::weight(std::size_t n) const { return std::exp(log_p_.at(n)); }

LogWeightTable poisson_logweights(double alpha_sq, double tail_tol) {
    if (!std::isfinite(alpha_sq) || alpha_sq < 0.0)
        throw DomainError("poisson_logweights: alpha_sq must be finite and non-negative");
    if (!(tail_tol > 0.0 && tail_tol <= 1e-6))
        throw DomainError("poisson_logweights: tail_tol must lie in (0, 1e-6]");

    if (alpha_sq == 0.0) return LogWeightTable(0.0, tail_tol, {0.0}, 1.0);

    const double log_a = std::log(alpha_sq);
    // Hard stop far beyond any tail the tolerance range can request.
    const auto hard_cap =
        static_cast<std::size_t>(alpha_sq + 60.0 * std::sqrt(alpha_sq + 1.0) + 200.0);

    std::vector<double> log_p;
    log_p.reserve(static_cast<std::size_t>(alpha_sq + 12.0 * std::sqrt(alpha_sq + 1.0)) + 16);
    NeumaierSum mass;
    for (std::size_t n = 0; n < hard_cap; ++n) {
        const double nd = static_cast<double>(n);
        const double lp = -alpha_sq + nd * log_a - std::lgamma(nd + 1.0);
        log_p.push_back(lp);
        mass.add(std::exp(lp));
        // Stop only past the mode so the upper tail is what gets discarded.
        if (nd >= alpha_sq && mass.value() >= 1.0 - tail_tol) break;
    }
    return LogWeightTable(alpha_sq, tail_tol, std::move(log_p), mass.value());
}

}  // namespace rabi
