#pragma once

// Parameter-space search for regimes with small worst-case transition
// probability: exhaustive grid scans plus a bounded Nelder-Mead refinement.

#include <cstddef>
#include <functional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "rabi/kernels.hpp"
#include "rabi/model.hpp"
#include "rabi/special.hpp"

namespace rabi {

enum class ScanAxis { Beta, AlphaSq, Kappa0, RatioR };

std::string_view to_string(ScanAxis a);
ScanAxis scan_axis_from_string(std::string_view s);

struct AxisRange {
    double min = 0.0;
    double max = 0.0;
    unsigned steps = 2;
};

struct ScanSpec {
    ModelParams fixed;
    std::vector<std::pair<ScanAxis, AxisRange>> ranges;
    double horizon = 1000.0;
    std::size_t time_points = 2000;
    double tail_tol = kDefaultTailTol;
    std::size_t max_grid = 100'000;

    // Throws DomainError on bad ranges/horizon, CapacityError if the grid is too large.
    void validate() const;
    std::size_t grid_size() const noexcept;
    std::vector<ScanAxis> axes() const;
};

struct ScanPoint {
    std::vector<double> coords;  // one per swept axis, in ScanSpec::ranges order
    double objective = 0.0;
};

struct ScanResult {
    std::vector<ScanAxis> axes;
    std::vector<ScanPoint> grid;
    ScanPoint best;
    std::vector<ScanPoint> trace;  // strictly decreasing objective
    bool converged = false;
    unsigned iterations = 0;
    unsigned evaluations = 0;
};

// max over a uniform grid on [0, horizon] of transition_prob.
double objective(const ModelParams& p, double horizon, std::size_t time_points,
                 double tail_tol = kDefaultTailTol, kernels::Exec exec = kernels::Exec::Parallel);

ModelParams with_coords(const ModelParams& base, std::span<const ScanAxis> axes,
                        std::span<const double> coords);

ScanResult grid_scan(const ScanSpec& spec);

struct RefineOptions {
    std::vector<double> step_scales;  // empty: 10% of each axis range
    unsigned max_iters = 200;
    double ftol = 1e-8;
};

using ObjectiveFn = std::function<double(std::span<const double>)>;

// Nelder-Mead on an arbitrary objective inside [lower, upper]. Points outside
// the box are evaluated at their clamped image plus a quadratic penalty.
ScanResult refine_objective(const ObjectiveFn& f, std::span<const double> start,
                            std::span<const double> lower, std::span<const double> upper,
                            const RefineOptions& opts);

// Refinement of objective() over the swept axes of spec, bounded by their ranges.
ScanResult refine(const ScanSpec& spec, std::span<const double> start, const RefineOptions& opts);

}  // namespace rabi
