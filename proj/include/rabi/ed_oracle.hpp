#pragma once

// Exact diagonalization of the full two-qubit Rabi Hamiltonian in a
// truncated Fock space. Serves as ground truth for the adiabatic formulas.
//
// Basis ordering: index = spin * (n_max + 1) + n, spin in SpinState order
// (|1,1>, |1,-1>, |1,0>, |0,0>), n the Fock number.

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "rabi/dynamics.hpp"
#include "rabi/model.hpp"

namespace rabi {

// Operator multiplying beta (a + a^dagger).
//   PauliSum: sigma_z1 + sigma_z2, eigenvalues {-2, 0, 2}.
//   HalfSum:  (sigma_z1 + sigma_z2)/2, eigenvalues {-1, 0, 1}; displacements of
//             -m*beta between adjacent sectors, matching the AA overlaps.
enum class HamiltonianVariant { PauliSum, HalfSum };

std::string_view to_string(HamiltonianVariant v);
HamiltonianVariant hamiltonian_variant_from_string(std::string_view s);

struct EDConfig {
    unsigned n_max = 80;
    HamiltonianVariant variant = HamiltonianVariant::HalfSum;
    std::size_t max_dimension = 4000;

    std::size_t dimension() const noexcept { return 4 * (static_cast<std::size_t>(n_max) + 1); }

    // Smallest cutoff that holds a coherent state of the given mean photon number.
    static unsigned min_cutoff(double alpha_sq);
};

// Dense real symmetric H. Throws CapacityError above config.max_dimension.
Eigen::MatrixXd build_hamiltonian(const ModelParams& p, const EDConfig& config);

struct Eigensystem {
    Eigen::VectorXd values;   // ascending
    Eigen::MatrixXd vectors;  // orthonormal columns
};

// Throws DomainError if h is not symmetric, ConvergenceError on solver failure.
Eigensystem eigendecompose(const Eigen::MatrixXd& h);

struct InitialState {
    enum class Kind {
        Bell10Coherent,  // |1,0> (x) |alpha>, alpha = sqrt(alpha_sq)
        Singlet00Fock,   // |0,0> (x) |fock_n>
    };
    Kind kind = Kind::Bell10Coherent;
    unsigned fock_n = 0;
};

// Fock amplitudes of a real coherent state, truncated at n_max.
std::vector<double> coherent_amplitudes(double alpha_sq, unsigned n_max);

Eigen::VectorXd initial_vector(const ModelParams& p, const EDConfig& config,
                               const InitialState& init);

// Spectral time evolution of a fixed initial vector.
class Evolution {
public:
    Evolution(Eigen::MatrixXd hamiltonian, const Eigen::VectorXd& psi0);

    const Eigen::MatrixXd& hamiltonian() const noexcept { return h_; }
    const Eigensystem& eigensystem() const noexcept { return eig_; }
    std::size_t fock_dim() const noexcept { return static_cast<std::size_t>(h_.rows()) / 4; }

    Eigen::VectorXcd state_at(double t) const;

private:
    Eigen::MatrixXd h_;
    Eigensystem eig_;
    Eigen::VectorXd coeffs_;
};

// Populations of the four spin sectors, in SpinState order.
std::array<double, 4> spin_populations(const Eigen::VectorXcd& psi, std::size_t fock_dim);

// Two-qubit density matrix in the product basis (|uu>, |ud>, |du>, |dd>),
// oscillator traced out.
Eigen::Matrix4cd reduced_density_matrix(const Eigen::VectorXcd& psi, std::size_t fock_dim);

// Wootters concurrence. Throws DomainError unless rho is Hermitian, unit
// trace and positive semidefinite, each within 1e-10.
double concurrence(const Eigen::Matrix4cd& rho);

struct EDResult {
    std::vector<double> eigenvalues;
    TimeSeries populations;  // P11, P1m1, P10, P00
    TimeSeries concurrence;  // C
    TimeSeries energy;       // E = <psi(t)|H|psi(t)>
    // sup-norm population change when n_max grows by 20; negative if not computed.
    double truncation_error = -1.0;
    bool truncation_warning = false;
};

inline constexpr double kTruncationWarnLevel = 1e-6;

// Throws DomainError if the cutoff is too small for alpha_sq or the truncated
// coherent-state norm falls below 1 - 1e-12.
EDResult evolve(const ModelParams& p, const EDConfig& config, std::span<const double> times,
                const InitialState& init = {}, bool estimate_truncation = true);

}  // namespace rabi
