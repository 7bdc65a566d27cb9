#include "rabi/ed_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <string>

#include "rabi/errors.hpp"
#include "rabi/summation.hpp"

namespace rabi {

std::string_view to_string(HamiltonianVariant v) {
    return v == HamiltonianVariant::HalfSum ? "half_sum" : "pauli_sum";
}

HamiltonianVariant hamiltonian_variant_from_string(std::string_view s) {
    if (s == "half_sum") return HamiltonianVariant::HalfSum;
    if (s == "pauli_sum") return HamiltonianVariant::PauliSum;
    throw ConfigError("unknown hamiltonian variant '" + std::string(s) +
                      "' (expected half_sum or pauli_sum)");
}

unsigned EDConfig::min_cutoff(double alpha_sq) {
    return static_cast<unsigned>(std::ceil(alpha_sq + 10.0 * std::sqrt(alpha_sq + 1.0)));
}

Eigen::MatrixXd build_hamiltonian(const ModelParams& p, const EDConfig& config) {
    p.validate();
    const std::size_t dim = config.dimension();
    if (dim > config.max_dimension)
        throw CapacityError("Hilbert space dimension " + std::to_string(dim) + " exceeds ceiling " +
                            std::to_string(config.max_dimension));

    const auto nf = static_cast<Eigen::Index>(config.n_max) + 1;
    const auto at = [nf](SpinState s, Eigen::Index n) { return index(s) * nf + n; };
    const double sz_scale = config.variant == HamiltonianVariant::HalfSum ? 1.0 : 2.0;
    const double kappa = effective_kappa(p);
    // -(r/2)(sx1 + sx2) connects |1,+-1> to |1,0> with matrix element sqrt(2).
    const double flip = -p.ratio_r / std::sqrt(2.0);

    const auto dim_i = static_cast<Eigen::Index>(dim);
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim_i, dim_i);
    for (SpinState s : kSpinStates) {
        const double m = sz_scale * magnetic_number(s);
        for (Eigen::Index n = 0; n < nf; ++n) {
            h(at(s, n), at(s, n)) += static_cast<double>(n);
            if (n + 1 < nf && m != 0.0) {
                const double x = m * p.beta * std::sqrt(static_cast<double>(n + 1));
                h(at(s, n), at(s, n + 1)) += x;
                h(at(s, n + 1), at(s, n)) += x;
            }
        }
    }
    for (Eigen::Index n = 0; n < nf; ++n) {
        const auto up = at(SpinState::J1M1, n);
        const auto down = at(SpinState::J1Mm1, n);
        const auto sym = at(SpinState::J1M0, n);
        const auto singlet = at(SpinState::J0M0, n);
        h(up, sym) += flip;
        h(sym, up) += flip;
        h(down, sym) += flip;
        h(sym, down) += flip;
        // -kappa sx1 sx2: swaps |1,1> <-> |1,-1>, +1 on |1,0>, -1 on |0,0>.
        h(up, down) -= kappa;
        h(down, up) -= kappa;
        h(sym, sym) -= kappa;
        h(singlet, singlet) += kappa;
    }
    return h;
}

Eigensystem eigendecompose(const Eigen::MatrixXd& h) {
    if (h.rows() != h.cols()) throw DomainError("eigendecompose: matrix is not square");
    const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
    if ((h - h.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
        throw DomainError("eigendecompose: matrix is not symmetric");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
    if (solver.info() != Eigen::Success)
        throw ConvergenceError("eigendecompose: solver failed (info=" +
                               std::to_string(static_cast<int>(solver.info())) +
                               ", dimension=" + std::to_string(h.rows()) + ")");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

std::vector<double> coherent_amplitudes(double alpha_sq, unsigned n_max) {
    if (!std::isfinite(alpha_sq) || alpha_sq < 0.0)
        throw DomainError("coherent_amplitudes: alpha_sq must be finite and non-negative");
    std::vector<double> c(static_cast<std::size_t>(n_max) + 1, 0.0);
    if (alpha_sq == 0.0) {
        c[0] = 1.0;
        return c;
    }
    const double log_a = 0.5 * std::log(alpha_sq);
    for (std::size_t n = 0; n < c.size(); ++n) {
        const double nd = static_cast<double>(n);
        c[n] = std::exp(-0.5 * alpha_sq + nd * log_a - 0.5 * std::lgamma(nd + 1.0));
    }
    return c;
}

Eigen::VectorXd initial_vector(const ModelParams& p, const EDConfig& config,
                               const InitialState& init) {
    const auto nf = static_cast<Eigen::Index>(config.n_max) + 1;
    Eigen::VectorXd psi = Eigen::VectorXd::Zero(4 * nf);
    if (init.kind == InitialState::Kind::Singlet00Fock) {
        if (init.fock_n > config.n_max)
            throw DomainError("initial Fock number exceeds the cutoff");
        psi(index(SpinState::J0M0) * nf + init.fock_n) = 1.0;
        return psi;
    }
    if (config.n_max < EDConfig::min_cutoff(p.alpha_sq))
        throw DomainError("n_max " + std::to_string(config.n_max) + " below required cutoff " +
                          std::to_string(EDConfig::min_cutoff(p.alpha_sq)) + " for alpha_sq");
    const std::vector<double> c = coherent_amplitudes(p.alpha_sq, config.n_max);
    NeumaierSum norm;
    for (double x : c) norm.add(x * x);
    if (norm.value() < 1.0 - 1e-12)
        throw DomainError("coherent state truncated norm below 1 - 1e-12");
    const double inv = 1.0 / std::sqrt(norm.value());
    for (Eigen::Index n = 0; n < nf; ++n)
        psi(index(SpinState::J1M0) * nf + n) = c[static_cast<std::size_t>(n)] * inv;
    return psi;
}

Evolution::Evolution(Eigen::MatrixXd hamiltonian, const Eigen::VectorXd& psi0)
    : h_(std::move(hamiltonian)), eig_(eigendecompose(h_)), coeffs_(eig_.vectors.transpose() * psi0) {}

Eigen::VectorXcd Evolution::state_at(double t) const {
    const Eigen::Index dim = coeffs_.size();
    Eigen::VectorXd c_cos(dim), c_sin(dim);
    for (Eigen::Index k = 0; k < dim; ++k) {
        const double phase = eig_.values(k) * t;
        c_cos(k) = coeffs_(k) * std::cos(phase);
        c_sin(k) = -coeffs_(k) * std::sin(phase);
    }
    Eigen::VectorXcd psi(dim);
    psi.real() = eig_.vectors * c_cos;
    psi.imag() = eig_.vectors * c_sin;
    return psi;
}

std::array<double, 4> spin_populations(const Eigen::VectorXcd& psi, std::size_t fock_dim) {
    const auto nf = static_cast<Eigen::Index>(fock_dim);
    std::array<double, 4> pop{};
    for (SpinState s : kSpinStates)
        pop[static_cast<std::size_t>(index(s))] = psi.segment(index(s) * nf, nf).squaredNorm();
    return pop;
}

Eigen::Matrix4cd reduced_density_matrix(const Eigen::VectorXcd& psi, std::size_t fock_dim) {
    const auto nf = static_cast<Eigen::Index>(fock_dim);
    Eigen::Matrix4cd composite;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            composite(a, b) = psi.segment(a * nf, nf).dot(psi.segment(b * nf, nf));
    // dot() conjugates its first argument; rho_ab = sum_n psi_a psi_b^*.
    composite = composite.transpose().eval();

    Eigen::Matrix4d u;
    for (SpinState s : kSpinStates) {
        const auto amps = product_amplitudes(s);
        for (int i = 0; i < 4; ++i) u(i, index(s)) = amps[static_cast<std::size_t>(i)];
    }
    return u.cast<std::complex<double>>() * composite * u.transpose().cast<std::complex<double>>();
}

double concurrence(const Eigen::Matrix4cd& rho) {
    constexpr double tol = 1e-10;
    if (!rho.allFinite()) throw DomainError("concurrence: non-finite density matrix");
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol)
        throw DomainError("concurrence: density matrix is not Hermitian");
    if (std::abs(rho.trace() - 1.0) > tol)
        throw DomainError("concurrence: density matrix trace differs from 1");

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> rho_eig(rho);
    if (rho_eig.eigenvalues().minCoeff() < -tol)
        throw DomainError("concurrence: density matrix is not positive semidefinite");

    // Columns v_k = sqrt(p_k) e_k; the lambda_i are the singular values of the
    // complex symmetric matrix v^T (sigma_y (x) sigma_y) v.
    const Eigen::Vector4d clipped = rho_eig.eigenvalues().cwiseMax(0.0);
    const Eigen::Matrix4cd v =
        rho_eig.eigenvectors() * clipped.cwiseSqrt().cast<std::complex<double>>().asDiagonal();

    Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();
    yy(0, 3) = -1.0;
    yy(1, 2) = 1.0;
    yy(2, 1) = 1.0;
    yy(3, 0) = -1.0;
    const Eigen::Matrix4cd tau = v.transpose() * yy * v;
    Eigen::Vector4d lambda = Eigen::JacobiSVD<Eigen::Matrix4cd>(tau).singularValues();
    std::sort(lambda.data(), lambda.data() + 4, std::greater<>());
    return std::clamp(lambda(0) - lambda(1) - lambda(2) - lambda(3), 0.0, 1.0);
}

namespace {

EDResult evolve_once(const ModelParams& p, const EDConfig& config, std::span<const double> times,
                     const InitialState& init) {
    const Evolution evo(build_hamiltonian(p, config), initial_vector(p, config, init));
    const std::size_t nt = times.size();
    std::vector<std::array<double, 4>> pops(nt);
    std::vector<double> conc(nt), energy(nt);

    std::exception_ptr failure;
    const auto count = static_cast<long>(nt);
#pragma omp parallel for schedule(static)
    for (long i = 0; i < count; ++i) {
        const auto k = static_cast<std::size_t>(i);
        try {
            const Eigen::VectorXcd psi = evo.state_at(times[k]);
            pops[k] = spin_populations(psi, evo.fock_dim());
            conc[k] = concurrence(reduced_density_matrix(psi, evo.fock_dim()));
            const Eigen::VectorXd re = psi.real();
            const Eigen::VectorXd im = psi.imag();
            energy[k] = re.dot(evo.hamiltonian() * re) + im.dot(evo.hamiltonian() * im);
        } catch (...) {
#pragma omp critical(rabi_ed_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    EDResult result;
    const auto& values = evo.eigensystem().values;
    result.eigenvalues.assign(values.data(), values.data() + values.size());

    std::vector<double> times_v(times.begin(), times.end());
    result.populations = TimeSeries(times_v);
    static constexpr std::array<const char*, 4> names{"P11", "P1m1", "P10", "P00"};
    for (std::size_t s = 0; s < 4; ++s) {
        std::vector<double> ch(nt);
        for (std::size_t k = 0; k < nt; ++k) ch[k] = pops[k][s];
        result.populations.add_channel(names[s], std::move(ch));
    }
    result.concurrence = TimeSeries(times_v);
    result.concurrence.add_channel("C", std::move(conc));
    result.energy = TimeSeries(std::move(times_v));
    result.energy.add_channel("E", std::move(energy));
    return result;
}

}  // namespace

EDResult evolve(const ModelParams& p, const EDConfig& config, std::span<const double> times,
                const InitialState& init, bool estimate_truncation) {
    validate_times(times);
    EDResult result = evolve_once(p, config, times, init);
    if (estimate_truncation) {
        EDConfig larger = config;
        larger.n_max += 20;
        larger.max_dimension = std::max(config.max_dimension, larger.dimension());
        const EDResult ref = evolve_once(p, larger, times, init);
        double err = 0.0;
        for (const auto& [name, values] : result.populations.channels()) {
            const auto& other = ref.populations.channel(name);
            for (std::size_t k = 0; k < values.size(); ++k)
                err = std::max(err, std::abs(values[k] - other[k]));
        }
        result.truncation_error = err;
        result.truncation_warning = err > kTruncationWarnLevel;
    }
    return result;
}

}  // namespace rabi
