#include "rabi/aa_spectrum.hpp"

#include <cmath>

#include "rabi/errors.hpp"
#include "rabi/special.hpp"

namespace rabi {

double omega_1N(unsigned n, const ModelParams& p) {
    return -(p.ratio_r / std::sqrt(2.0)) * displaced_overlap(n, p.beta);
}

double omega_2N(unsigned n, const ModelParams& p) {
    return -effective_kappa(p) * displaced_overlap(n, 2.0 * p.beta);
}

AASpectrumRow aa_row(unsigned n, const ModelParams& p) {
    p.validate();
    const double kappa = effective_kappa(p);
    const double beta_sq = p.beta * p.beta;
    const double nd = static_cast<double>(n);

    AASpectrumRow row;
    row.n = n;
    row.omega1N = omega_1N(n, p);
    row.omega2N = omega_2N(n, p);
    row.t0tilde = -beta_sq + kappa + row.omega2N;

    const double o1 = row.omega1N;
    const double t0 = row.t0tilde;
    const double disc = t0 * t0 + 8.0 * o1 * o1;
    const double root = std::sqrt(disc);

    row.e0 = nd - beta_sq - row.omega2N;
    row.eplus = nd - kappa + 0.5 * (t0 + root);
    row.eminus = nd - kappa + 0.5 * (t0 - root);
    row.rabi_freq = root;

    if (o1 != 0.0) {
        // One root of Y^2 + (t0/o1) Y - 2 = 0 by the direct formula, the other
        // from Y+ Y- = -2, so neither suffers cancellation.
        // The eplus branch is (-t0 + root)/(2 o1).
        const bool big_is_plus = (t0 <= 0.0);
        const double big = (-t0 + (big_is_plus ? root : -root)) / (2.0 * o1);
        const double small = -2.0 / big;
        row.y_plus = big_is_plus ? big : small;
        row.y_minus = big_is_plus ? small : big;
        row.l2_plus = *row.y_plus * *row.y_plus + 2.0;
        row.l2_minus = *row.y_minus * *row.y_minus + 2.0;
        row.weight = (o1 * o1) / disc;
    } else if (t0 != 0.0) {
        row.weight = 0.0;
    } else {
        row.weight = 0.0;
        row.degenerate = true;
    }
    return row;
}

std::vector<AASpectrumRow> aa_rows(unsigned n_min, unsigned n_max, const ModelParams& p) {
    if (n_max < n_min) throw DomainError("aa_rows: n_max < n_min");
    p.validate();
    const auto count = static_cast<long>(n_max - n_min) + 1;
    std::vector<AASpectrumRow> rows(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(static)
    for (long i = 0; i < count; ++i) {
        rows[static_cast<std::size_t>(i)] = aa_row(n_min + static_cast<unsigned>(i), p);
    }
    return rows;
}

}  // namespace rabi
