#include "rabi/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "rabi/aa_spectrum.hpp"
#include "rabi/errors.hpp"

namespace rabi {

TimeSeries::TimeSeries(std::vector<double> times) : times_(std::move(times)) {
    validate_times(times_);
}

void TimeSeries::add_channel(std::string name, std::vector<double> values) {
    if (values.size() != times_.size())
        throw DomainError("channel '" + name + "' length differs from time grid");
    if (has_channel(name)) throw DomainError("duplicate channel '" + name + "'");
    for (double v : values)
        if (!std::isfinite(v)) throw DomainError("channel '" + name + "' has a non-finite value");
    channels_.emplace_back(std::move(name), std::move(values));
}

bool TimeSeries::has_channel(std::string_view name) const noexcept {
    return std::any_of(channels_.begin(), channels_.end(),
                       [&](const auto& c) { return c.first == name; });
}

const std::vector<double>& TimeSeries::channel(std::string_view name) const {
    for (const auto& c : channels_)
        if (c.first == name) return c.second;
    throw std::out_of_range("no channel '" + std::string(name) + "'");
}

std::vector<double> uniform_grid(double start, double stop, std::size_t points) {
    if (!std::isfinite(start) || !std::isfinite(stop) || !(stop > start))
        throw DomainError("uniform_grid: need finite start < stop");
    if (points < 2) throw DomainError("uniform_grid: need at least two points");
    std::vector<double> t(points);
    const double step = (stop - start) / static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) t[i] = start + step * static_cast<double>(i);
    t.back() = stop;
    return t;
}

void validate_times(std::span<const double> times) {
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (!std::isfinite(times[i])) throw DomainError("time grid contains a non-finite value");
        if (i > 0 && !(times[i] > times[i - 1]))
            throw DomainError("time grid must be strictly increasing");
    }
}

namespace {

struct RabiTerms {
    std::vector<double> amp;
    std::vector<double> freq;
};

RabiTerms coherent_rabi_terms(const ModelParams& p, double tail_tol) {
    p.validate();
    const LogWeightTable table = poisson_logweights(p.alpha_sq, tail_tol);
    RabiTerms terms;
    terms.amp.resize(table.size());
    terms.freq.resize(table.size());
    for (std::size_t n = 0; n < table.size(); ++n) {
        const AASpectrumRow row = aa_row(static_cast<unsigned>(n), p);
        terms.amp[n] = table.weight(n) * row.weight;
        terms.freq[n] = row.rabi_freq;
    }
    return terms;
}

}  // namespace

TimeSeries transition_prob(const ModelParams& p, std::span<const double> times, double tail_tol,
                           kernels::Exec exec) {
    TimeSeries series({times.begin(), times.end()});
    const RabiTerms terms = coherent_rabi_terms(p, tail_tol);
    std::vector<double> values(times.size());
    kernels::rabi_series(exec, terms.amp, terms.freq, times, values);
    series.add_channel("T", std::move(values));
    return series;
}

TimeSeries survival_prob(const ModelParams& p, std::span<const double> times, double tail_tol,
                         kernels::Exec exec) {
    const TimeSeries t = transition_prob(p, times, tail_tol, exec);
    std::vector<double> stay(t.size());
    const auto& tv = t.channel("T");
    std::transform(tv.begin(), tv.end(), stay.begin(), [](double x) { return 1.0 - 2.0 * x; });
    TimeSeries series({times.begin(), times.end()});
    series.add_channel("P_stay", std::move(stay));
    return series;
}

TimeSeries jc_inversion(double delta, double g, double alpha_sq, std::span<const double> times,
                        double tail_tol, bool corrected, kernels::Exec exec) {
    if (!std::isfinite(delta)) throw DomainError("jc_inversion: delta must be finite");
    if (!std::isfinite(g) || !(g > 0.0)) throw DomainError("jc_inversion: g must be positive");
    TimeSeries series({times.begin(), times.end()});
    const LogWeightTable table = poisson_logweights(alpha_sq, tail_tol);

    const double d2 = delta * delta;
    std::vector<double> offset(table.size()), amp(table.size()), freq(table.size());
    for (std::size_t n = 0; n < table.size(); ++n) {
        const double np1 = static_cast<double>(n) + 1.0;
        const double coupling = 4.0 * g * g * np1;
        const double w = corrected ? std::sqrt(d2 + coupling) : d2 + 4.0 * g * np1;
        const double w2 = w * w;
        const double pn = table.weight(n);
        offset[n] = pn * d2 / w2;
        amp[n] = pn * coupling / w2;
        freq[n] = w;
    }
    std::vector<double> values(times.size());
    kernels::cosine_series(exec, offset, amp, freq, times, values);
    series.add_channel("W", std::move(values));
    return series;
}

BranchCheck two_branch_interference_check(unsigned n, const ModelParams& p,
                                          std::span<const double> times) {
    const AASpectrumRow row = aa_row(n, p);
    if (!row.has_mixing())
        throw DegenerateRowError("two_branch_interference_check: Omega_1N = 0 at N = " +
                                 std::to_string(n));
    validate_times(times);

    const double a_plus = *row.y_plus / *row.l2_plus;
    const double a_minus = *row.y_minus / *row.l2_minus;

    BranchCheck out;
    for (double t : times) {
        // Common phase exp(-i e_- t) dropped; e_+ - e_- = rabi_freq.
        const std::complex<double> amp = a_plus * std::polar(1.0, -row.rabi_freq * t) + a_minus;
        const double transfer = std::norm(amp);
        const double s = std::sin(0.5 * row.rabi_freq * t);
        const double term = row.weight * 2.0 * s * s;
        out.max_abs_residual = std::max(out.max_abs_residual, std::abs(transfer - term));
        out.max_abs_residual_doubled =
            std::max(out.max_abs_residual_doubled, std::abs(transfer - 2.0 * term));
        out.max_transfer = std::max(out.max_transfer, transfer);
    }
    return out;
}

}  // namespace rabi
