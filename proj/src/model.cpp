#include "rabi/model.hpp"

#include <cmath>

#include "rabi/errors.hpp"

namespace rabi {

std::string_view to_string(KappaConvention c) {
    return c == KappaConvention::Omega0Scaled ? "omega0_scaled" : "omega_scaled";
}

KappaConvention kappa_convention_from_string(std::string_view s) {
    if (s == "omega0_scaled") return KappaConvention::Omega0Scaled;
    if (s == "omega_scaled") return KappaConvention::OmegaScaled;
    throw ConfigError("unknown kappa_convention '" + std::string(s) +
                      "' (expected omega0_scaled or omega_scaled)");
}

void ModelParams::validate() const {
    if (!std::isfinite(ratio_r)) throw DomainError("ratio_r must be finite");
    if (!std::isfinite(beta)) throw DomainError("beta must be finite");
    if (!std::isfinite(kappa0)) throw DomainError("kappa0 must be finite");
    if (!std::isfinite(alpha_sq) || alpha_sq < 0.0)
        throw DomainError("alpha_sq must be finite and non-negative");
}

double effective_kappa(const ModelParams& p) noexcept {
    return p.kappa_convention == KappaConvention::Omega0Scaled ? p.kappa0 * p.ratio_r : p.kappa0;
}

std::string_view label(SpinState s) {
    switch (s) {
        case SpinState::J1M1: return "|1,1>";
        case SpinState::J1Mm1: return "|1,-1>";
        case SpinState::J1M0: return "|1,0>";
        case SpinState::J0M0: return "|0,0>";
    }
    return "?";
}

std::array<double, 4> product_amplitudes(SpinState s) noexcept {
    const double h = 1.0 / std::sqrt(2.0);
    switch (s) {
        case SpinState::J1M1: return {1.0, 0.0, 0.0, 0.0};
        case SpinState::J1Mm1: return {0.0, 0.0, 0.0, 1.0};
        case SpinState::J1M0: return {0.0, h, h, 0.0};
        case SpinState::J0M0: return {0.0, h, -h, 0.0};
    }
    return {};
}

}  // namespace rabi
