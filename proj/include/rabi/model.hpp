#pragma once

// Physical parameters of the two-qubit extended Rabi model and the composite
// two-qubit basis. Units: hbar = 1, oscillator frequency omega = 1, so every
// energy is E/(hbar*omega) and every time is omega*t.

#include <array>
#include <string>
#include <string_view>

namespace rabi {

// How the inter-qubit coupling enters the adiabatic formulas.
//   Omega0Scaled: kappa0 is kappa/(hbar*omega0); kappa/(hbar*omega) = kappa0 * ratio_r.
//   OmegaScaled:  kappa0 is used directly as kappa/(hbar*omega).
enum class KappaConvention { Omega0Scaled, OmegaScaled };

std::string_view to_string(KappaConvention c);
KappaConvention kappa_convention_from_string(std::string_view s);

struct ModelParams {
    static constexpr double omega = 1.0;

    double ratio_r = 0.1;   // omega0 / omega
    double beta = 0.0;      // qubit-oscillator coupling (real)
    double kappa0 = 0.0;    // inter-qubit coupling in the kappa_convention units
    KappaConvention kappa_convention = KappaConvention::Omega0Scaled;
    double alpha_sq = 0.0;  // mean photon number of the initial coherent state

    // Throws DomainError on non-finite fields or alpha_sq < 0.
    void validate() const;

    // True inside 0 < ratio_r < 1, the large-detuning regime the adiabatic
    // approximation assumes. Values outside are allowed but should be flagged.
    bool large_detuning() const noexcept { return ratio_r > 0.0 && ratio_r < 1.0; }
};

// Value substituted wherever the adiabatic formulas use kappa/(hbar*omega).
double effective_kappa(const ModelParams& p) noexcept;

// Composite two-qubit states |j,m>. Index order is the basis order used by
// the exact-diagonalization oracle.
enum class SpinState : int {
    J1M1 = 0,   // |1,1>  = |uu>
    J1Mm1 = 1,  // |1,-1> = |dd>
    J1M0 = 2,   // |1,0>  = (|ud> + |du>)/sqrt(2)
    J0M0 = 3,   // |0,0>  = (|ud> - |du>)/sqrt(2)
};

inline constexpr std::array<SpinState, 4> kSpinStates{SpinState::J1M1, SpinState::J1Mm1,
                                                      SpinState::J1M0, SpinState::J0M0};

constexpr int index(SpinState s) noexcept { return static_cast<int>(s); }

// Eigenvalue m of (sigma_z1 + sigma_z2)/2.
constexpr int magnetic_number(SpinState s) noexcept {
    switch (s) {
        case SpinState::J1M1: return 1;
        case SpinState::J1Mm1: return -1;
        default: return 0;
    }
}

std::string_view label(SpinState s);

// Amplitudes of a composite state in the product basis (|uu>, |ud>, |du>, |dd>).
std::array<double, 4> product_amplitudes(SpinState s) noexcept;

}  // namespace rabi
