#include "rabi/scan.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numeric>
#include <string>

#include "rabi/dynamics.hpp"
#include "rabi/errors.hpp"

namespace rabi {

std::string_view to_string(ScanAxis a) {
    switch (a) {
        case ScanAxis::Beta: return "beta";
        case ScanAxis::AlphaSq: return "alpha_sq";
        case ScanAxis::Kappa0: return "kappa0";
        case ScanAxis::RatioR: return "ratio_r";
    }
    return "?";
}

ScanAxis scan_axis_from_string(std::string_view s) {
    if (s == "beta") return ScanAxis::Beta;
    if (s == "alpha_sq") return ScanAxis::AlphaSq;
    if (s == "kappa0") return ScanAxis::Kappa0;
    if (s == "ratio_r") return ScanAxis::RatioR;
    throw ConfigError("unknown scan axis '" + std::string(s) + "'");
}

std::size_t ScanSpec::grid_size() const noexcept {
    std::size_t n = 1;
    for (const auto& [axis, r] : ranges) n *= r.steps;
    return n;
}

std::vector<ScanAxis> ScanSpec::axes() const {
    std::vector<ScanAxis> out;
    for (const auto& [axis, r] : ranges) out.push_back(axis);
    return out;
}

void ScanSpec::validate() const {
    fixed.validate();
    if (!std::isfinite(horizon) || !(horizon > 0.0)) throw DomainError("scan: horizon must be > 0");
    if (time_points < 2) throw DomainError("scan: need at least two time points");
    for (std::size_t i = 0; i < ranges.size(); ++i) {
        const auto& [axis, r] = ranges[i];
        for (std::size_t j = 0; j < i; ++j)
            if (ranges[j].first == axis)
                throw DomainError("scan: axis '" + std::string(to_string(axis)) + "' listed twice");
        if (!std::isfinite(r.min) || !std::isfinite(r.max) || !(r.max > r.min))
            throw DomainError("scan: axis '" + std::string(to_string(axis)) + "' needs min < max");
        if (r.steps < 2)
            throw DomainError("scan: axis '" + std::string(to_string(axis)) + "' needs steps >= 2");
        if (axis == ScanAxis::AlphaSq && r.min < 0.0)
            throw DomainError("scan: alpha_sq range must be non-negative");
    }
    if (grid_size() > max_grid)
        throw CapacityError("scan: grid of " + std::to_string(grid_size()) +
                            " points exceeds ceiling " + std::to_string(max_grid));
}

double objective(const ModelParams& p, double horizon, std::size_t time_points, double tail_tol,
                 kernels::Exec exec) {
    const std::vector<double> times = uniform_grid(0.0, horizon, time_points);
    const TimeSeries t = transition_prob(p, times, tail_tol, exec);
    const auto& v = t.channel("T");
    return *std::max_element(v.begin(), v.end());
}

ModelParams with_coords(const ModelParams& base, std::span<const ScanAxis> axes,
                        std::span<const double> coords) {
    if (axes.size() != coords.size()) throw DomainError("with_coords: axis/coordinate mismatch");
    ModelParams p = base;
    for (std::size_t i = 0; i < axes.size(); ++i) {
        switch (axes[i]) {
            case ScanAxis::Beta: p.beta = coords[i]; break;
            case ScanAxis::AlphaSq: p.alpha_sq = coords[i]; break;
            case ScanAxis::Kappa0: p.kappa0 = coords[i]; break;
            case ScanAxis::RatioR: p.ratio_r = coords[i]; break;
        }
    }
    return p;
}

namespace {

double axis_value(const AxisRange& r, unsigned i) {
    if (i + 1 == r.steps) return r.max;
    return r.min + (r.max - r.min) * static_cast<double>(i) / static_cast<double>(r.steps - 1);
}

}  // namespace

ScanResult grid_scan(const ScanSpec& spec) {
    spec.validate();
    ScanResult result;
    result.axes = spec.axes();
    const std::size_t total = spec.grid_size();
    result.grid.resize(total);

    std::exception_ptr failure;
    const auto count = static_cast<long>(total);
    // Row-major over ranges: the last axis varies fastest.
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
        try {
            auto rem = static_cast<std::size_t>(i);
            std::vector<double> coords(spec.ranges.size());
            for (std::size_t a = spec.ranges.size(); a-- > 0;) {
                const auto& r = spec.ranges[a].second;
                coords[a] = axis_value(r, static_cast<unsigned>(rem % r.steps));
                rem /= r.steps;
            }
            const ModelParams p = with_coords(spec.fixed, result.axes, coords);
            auto& slot = result.grid[static_cast<std::size_t>(i)];
            slot.objective =
                objective(p, spec.horizon, spec.time_points, spec.tail_tol, kernels::Exec::Serial);
            slot.coords = std::move(coords);
        } catch (...) {
#pragma omp critical(rabi_scan_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    // First minimum in grid order, independent of evaluation order.
    const auto best = std::min_element(result.grid.begin(), result.grid.end(),
                                       [](const auto& a, const auto& b) { return a.objective < b.objective; });
    result.best = *best;
    result.trace.push_back(result.best);
    result.evaluations = static_cast<unsigned>(total);
    result.converged = true;
    return result;
}

ScanResult refine_objective(const ObjectiveFn& f, std::span<const double> start,
                            std::span<const double> lower, std::span<const double> upper,
                            const RefineOptions& opts) {
    const std::size_t dim = start.size();
    if (lower.size() != dim || upper.size() != dim)
        throw DomainError("refine: bounds dimension mismatch");
    for (std::size_t i = 0; i < dim; ++i)
        if (!(start[i] >= lower[i] && start[i] <= upper[i]))
            throw DomainError("refine: start point outside bounds");
    if (!opts.step_scales.empty() && opts.step_scales.size() != dim)
        throw DomainError("refine: step_scales dimension mismatch");

    using Point = std::vector<double>;
    std::vector<double> steps(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        steps[i] = opts.step_scales.empty() ? 0.1 * (upper[i] - lower[i]) : opts.step_scales[i];
        if (!(steps[i] > 0.0)) throw DomainError("refine: step scales must be positive");
    }

    ScanResult result;
    const auto clamp = [&](const Point& x) {
        Point c(dim);
        for (std::size_t i = 0; i < dim; ++i) c[i] = std::clamp(x[i], lower[i], upper[i]);
        return c;
    };
    // Penalized value seen by the simplex; the trace only records clamped points.
    const auto eval = [&](const Point& x) {
        const Point c = clamp(x);
        const double fc = f(c);
        ++result.evaluations;
        if (result.trace.empty() || fc < result.trace.back().objective) result.trace.push_back({c, fc});
        double penalty = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            const double d = (x[i] - c[i]) / steps[i];
            penalty += d * d;
        }
        return fc + penalty;
    };

    Point x0(start.begin(), start.end());
    if (dim == 0) {
        eval(x0);
        result.best = result.trace.back();
        result.converged = true;
        return result;
    }

    std::vector<Point> simplex{x0};
    for (std::size_t i = 0; i < dim; ++i) {
        Point v = x0;
        v[i] += (v[i] + steps[i] <= upper[i]) ? steps[i] : -steps[i];
        simplex.push_back(std::move(v));
    }
    std::vector<double> fv;
    for (const auto& v : simplex) fv.push_back(eval(v));

    const auto combine = [dim](const Point& a, const Point& b, double t) {
        // a + t (b - a)
        Point r(dim);
        for (std::size_t i = 0; i < dim; ++i) r[i] = a[i] + t * (b[i] - a[i]);
        return r;
    };

    std::vector<std::size_t> order(dim + 1);
    while (result.iterations < opts.max_iters) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return fv[a] < fv[b]; });
        const std::size_t lo = order.front(), hi = order.back(), second = order[dim - 1];
        const double spread = std::abs(fv[hi] - fv[lo]);
        if (2.0 * spread <= opts.ftol * (std::abs(fv[hi]) + std::abs(fv[lo])) + 1e-300) {
            result.converged = true;
            break;
        }
        ++result.iterations;

        Point centroid(dim, 0.0);
        for (std::size_t k = 0; k <= dim; ++k) {
            if (k == hi) continue;
            for (std::size_t i = 0; i < dim; ++i) centroid[i] += simplex[k][i] / static_cast<double>(dim);
        }
        const Point reflected = combine(centroid, simplex[hi], -1.0);
        const double fr = eval(reflected);
        if (fr < fv[lo]) {
            const Point expanded = combine(centroid, simplex[hi], -2.0);
            const double fe = eval(expanded);
            if (fe < fr) {
                simplex[hi] = expanded;
                fv[hi] = fe;
            } else {
                simplex[hi] = reflected;
                fv[hi] = fr;
            }
            continue;
        }
        if (fr < fv[second]) {
            simplex[hi] = reflected;
            fv[hi] = fr;
            continue;
        }
        const bool outside = fr < fv[hi];
        const Point contracted = outside ? combine(centroid, reflected, 0.5)
                                         : combine(centroid, simplex[hi], 0.5);
        const double fc = eval(contracted);
        if (fc < (outside ? fr : fv[hi])) {
            simplex[hi] = contracted;
            fv[hi] = fc;
            continue;
        }
        for (std::size_t k = 0; k <= dim; ++k) {
            if (k == lo) continue;
            simplex[k] = combine(simplex[lo], simplex[k], 0.5);
            fv[k] = eval(simplex[k]);
        }
    }
    result.best = result.trace.back();
    return result;
}

ScanResult refine(const ScanSpec& spec, std::span<const double> start, const RefineOptions& opts) {
    spec.validate();
    const std::vector<ScanAxis> axes = spec.axes();
    std::vector<double> lower, upper;
    for (const auto& [axis, r] : spec.ranges) {
        lower.push_back(r.min);
        upper.push_back(r.max);
    }
    const ObjectiveFn f = [&](std::span<const double> x) {
        return objective(with_coords(spec.fixed, axes, x), spec.horizon, spec.time_points,
                         spec.tail_tol);
    };
    ScanResult result = refine_objective(f, start, lower, upper, opts);
    result.axes = axes;
    return result;
}

}  // namespace rabi
