#pragma once

// Adiabatic-approximation spectrum of the two-qubit Rabi model.
//
// Within a fixed photon number N the perturbation couples only the three
// displaced states |1,1>|N_1>, |1,-1>|N_-1>, |1,0>|N_0>. The antisymmetric
// combination of the first two decouples with energy e0; the symmetric one
// mixes with |1,0>|N_0> through sqrt(2)*Omega_1N, giving the two branches
// eplus/eminus whose |1,0> amplitudes are Y_{N,+-} / L_{N,+-}.

#include <optional>
#include <vector>

#include "rabi/model.hpp"

namespace rabi {

struct AASpectrumRow {
    unsigned n = 0;
    double omega1N = 0.0;
    double omega2N = 0.0;
    double t0tilde = 0.0;
    double e0 = 0.0;
    double eplus = 0.0;
    double eminus = 0.0;
    // Absent when omega1N == 0 (one root runs off to infinity).
    std::optional<double> y_plus;
    std::optional<double> y_minus;
    std::optional<double> l2_plus;
    std::optional<double> l2_minus;
    // Y_+^2 / L_+^4, evaluated as omega1N^2 / (t0tilde^2 + 8 omega1N^2).
    double weight = 0.0;
    // eplus - eminus = sqrt(t0tilde^2 + 8 omega1N^2).
    double rabi_freq = 0.0;
    // omega1N == 0 and t0tilde == 0: branches coincide, weight forced to 0.
    bool degenerate = false;

    bool has_mixing() const noexcept { return y_plus.has_value(); }
};

// -(ratio_r / sqrt 2) exp(-beta^2/2) L_N(beta^2)
double omega_1N(unsigned n, const ModelParams& p);

// -kappa_eff exp(-2 beta^2) L_N(4 beta^2)
double omega_2N(unsigned n, const ModelParams& p);

AASpectrumRow aa_row(unsigned n, const ModelParams& p);

// Rows for n_min..n_max inclusive, computed in parallel over N.
std::vector<AASpectrumRow> aa_rows(unsigned n_min, unsigned n_max, const ModelParams& p);

}  // namespace rabi
