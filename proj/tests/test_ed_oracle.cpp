#include <doctest.h>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>
#include <cmath>
#include <random>

#include "rabi/aa_spectrum.hpp"
#include "rabi/ed_oracle.hpp"
#include "rabi/errors.hpp"

using namespace rabi;

namespace {

ModelParams make(double r, double beta, double kappa0, double alpha_sq) {
    ModelParams p;
    p.ratio_r = r;
    p.beta = beta;
    p.kappa0 = kappa0;
    p.alpha_sq = alpha_sq;
    return p;
}

EDConfig cutoff(unsigned n_max) {
    EDConfig c;
    c.n_max = n_max;
    return c;
}

}  // namespace

TEST_CASE("eigendecompose on a 2x2 matrix") {
    Eigen::MatrixXd h(2, 2);
    h << 2.0, 1.0, 1.0, 2.0;
    const auto es = eigendecompose(h);
    CHECK(es.values(0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(es.values(1) == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(std::abs(std::abs(es.vectors(0, 0)) - 1.0 / std::sqrt(2.0)) < 1e-14);
    Eigen::MatrixXd bad(2, 2);
    bad << 1.0, 2.0, 0.0, 1.0;
    CHECK_THROWS_AS(eigendecompose(bad), DomainError);
}

TEST_CASE("eigendecompose residual on random symmetric matrices") {
    std::mt19937_64 rng(17);
    std::normal_distribution<double> nd;
    for (int trial = 0; trial < 5; ++trial) {
        Eigen::MatrixXd m(50, 50);
        for (int i = 0; i < 50; ++i)
            for (int j = 0; j < 50; ++j) m(i, j) = nd(rng);
        const Eigen::MatrixXd h = 0.5 * (m + m.transpose());
        const auto es = eigendecompose(h);
        const double res = (h * es.vectors - es.vectors * es.values.asDiagonal()).norm();
        CHECK(res <= 1e-10 * h.norm());
        CHECK((es.vectors.transpose() * es.vectors - Eigen::MatrixXd::Identity(50, 50)).norm() < 1e-12);
    }
}

TEST_CASE("hamiltonian is symmetric with the expected dimension") {
    const auto h = build_hamiltonian(make(0.2, 0.4, 0.3, 0.0), cutoff(30));
    CHECK(h.rows() == 124);
    CHECK((h - h.transpose()).norm() == 0.0);
    EDConfig tiny = cutoff(30);
    tiny.max_dimension = 100;
    CHECK_THROWS_AS(build_hamiltonian(make(0.2, 0.4, 0.3, 0.0), tiny), CapacityError);
}

TEST_CASE("free spectrum is integer and four-fold degenerate") {
    const auto es = eigendecompose(build_hamiltonian(make(0.0, 0.0, 0.0, 0.0), cutoff(10)));
    for (int i = 0; i < es.values.size(); ++i) CHECK(es.values(i) == doctest::Approx(i / 4).epsilon(1e-14));
}

TEST_CASE("spin-dependent displacement shifts levels by m^2 beta^2") {
    const double beta = 0.3;
    const auto es = eigendecompose(build_hamiltonian(make(0.0, beta, 0.0, 0.0), cutoff(60)));
    // Sectors m = 0 (two of them) give N; m = +-1 give N - beta^2.
    std::vector<double> expected;
    for (int n = 0; n < 20; ++n) {
        expected.push_back(n - beta * beta);
        expected.push_back(n - beta * beta);
        expected.push_back(n);
        expected.push_back(n);
    }
    std::sort(expected.begin(), expected.end());
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(es.values(i) == doctest::Approx(expected[i]).epsilon(1e-10));
}

TEST_CASE("Pauli-sum variant doubles the displacement") {
    const double beta = 0.3;
    EDConfig c = cutoff(60);
    c.variant = HamiltonianVariant::PauliSum;
    const auto es = eigendecompose(build_hamiltonian(make(0.0, beta, 0.0, 0.0), c));
    CHECK(es.values(0) == doctest::Approx(-4.0 * beta * beta).epsilon(1e-10));
}

TEST_CASE("singlet sector decouples") {
    const ModelParams p = make(0.2, 0.4, -0.7, 0.0);
    const EDConfig c = cutoff(40);
    const auto h = build_hamiltonian(p, c);
    const std::size_t f = 41, s00 = static_cast<std::size_t>(SpinState::J0M0) * f;
    CHECK(h.block(s00, 0, f, s00).norm() == 0.0);
    InitialState init;
    init.kind = InitialState::Kind::Singlet00Fock;
    init.fock_n = 3;
    const Evolution ev(h, initial_vector(p, c, init));
    for (double t : {0.0, 5.0, 50.0, 500.0}) {
        const auto pops = spin_populations(ev.state_at(t), f);
        CHECK(pops[3] == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("coherent amplitudes") {
    const auto amps = coherent_amplitudes(16.0, 80);
    double norm = 0.0;
    for (double a : amps) norm += a * a;
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(amps[0] == doctest::Approx(std::exp(-8.0)).epsilon(1e-14));
    CHECK(coherent_amplitudes(0.0, 5)[0] == 1.0);
}

TEST_CASE("cutoff too small for the coherent state") {
    const auto times = uniform_grid(0.0, 1.0, 3);
    CHECK_THROWS_AS(evolve(make(0.2, 0.1, 0.1, 250.0), cutoff(80), times), DomainError);
    CHECK(EDConfig::min_cutoff(16.0) == 58);
}

TEST_CASE("evolution agrees with the matrix exponential") {
    const ModelParams p = make(0.23, 0.26, 0.1, 4.0);
    const EDConfig c = cutoff(30);
    const auto h = build_hamiltonian(p, c);
    const Eigen::VectorXd psi0 = initial_vector(p, c, {});
    const Evolution ev(h, psi0);
    const Eigen::MatrixXcd minus_i_h = std::complex<double>(0.0, -1.0) * h.cast<std::complex<double>>();
    for (double t : {0.5, 3.0, 17.0}) {
        const Eigen::VectorXcd ref = (minus_i_h * t).exp() * psi0.cast<std::complex<double>>();
        CHECK((ev.state_at(t) - ref).norm() < 1e-10);
    }
}

TEST_CASE("unitarity and energy conservation") {
    const ModelParams p = make(0.12, 0.4193, 0.02, 16.0);
    const auto times = uniform_grid(0.0, 1000.0, 101);
    const auto r = evolve(p, cutoff(80), times);
    const auto& e = r.energy.channel("E");
    for (std::size_t i = 0; i < times.size(); ++i) {
        double total = 0.0;
        for (const auto& [name, vals] : r.populations.channels()) total += vals[i];
        CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(e[i] == doctest::Approx(e[0]).epsilon(1e-10));
    }
    CHECK(r.truncation_error >= 0.0);
    CHECK(r.truncation_error < 1e-8);
    CHECK_FALSE(r.truncation_warning);
}

TEST_CASE("zero-coupling populations follow cos^2(r t)") {
    const double r = 0.2;
    const auto times = uniform_grid(0.0, 60.0, 121);
    const auto res = evolve(make(r, 0.0, 0.0, 4.0), cutoff(40), times);
    const auto& p10 = res.populations.channel("P10");
    const auto& p11 = res.populations.channel("P11");
    for (std::size_t i = 0; i < times.size(); ++i) {
        CHECK(p10[i] == doctest::Approx(1.0 - 0.5 * (1.0 - std::cos(2.0 * r * times[i]))).epsilon(1e-12));
        CHECK(p11[i] == doctest::Approx(0.25 * (1.0 - std::cos(2.0 * r * times[i]))).epsilon(1e-12));
    }
}

TEST_CASE("concurrence reference states") {
    using C = std::complex<double>;
    Eigen::Vector4cd bell(0.0, 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0), 0.0);
    CHECK(concurrence(bell * bell.adjoint()) == doctest::Approx(1.0).epsilon(1e-12));
    const Eigen::Matrix4cd mixed = Eigen::Matrix4cd::Identity() / C(4.0);
    CHECK(concurrence(mixed) == doctest::Approx(0.0).epsilon(1e-12));
    // Werner state p |psi><psi| + (1 - p) I / 4 has concurrence max(0, (3p - 1)/2).
    const Eigen::Matrix4cd werner = C(0.5) * bell * bell.adjoint() + C(0.5) * mixed;
    CHECK(concurrence(werner) == doctest::Approx(0.25).epsilon(1e-12));
    Eigen::Vector4cd product(1.0, 0.0, 0.0, 0.0);
    CHECK(concurrence(product * product.adjoint()) == doctest::Approx(0.0).epsilon(1e-12));
    Eigen::Matrix4cd bad = mixed;
    bad(0, 0) = 1.0;
    CHECK_THROWS_AS(concurrence(bad), DomainError);
}

TEST_CASE("concurrence is bounded along random evolutions") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> ub(0.0, 0.5), uk(-0.7, 0.7), ur(0.05, 0.3);
    const auto times = uniform_grid(0.0, 200.0, 21);
    for (int i = 0; i < 6; ++i) {
        const auto res = evolve(make(ur(rng), ub(rng), uk(rng), 4.0), cutoff(40), times, {}, false);
        for (double c : res.concurrence.channel("C")) {
            CHECK(c >= 0.0);
            CHECK(c <= 1.0 + 1e-12);
        }
        CHECK(res.truncation_error < 0.0);
    }
}

TEST_CASE("initial Bell state is maximally entangled") {
    const auto times = uniform_grid(0.0, 1.0, 2);
    const auto res = evolve(make(0.2, 0.3, 0.1, 9.0), cutoff(60), times, {}, false);
    CHECK(res.concurrence.channel("C")[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(res.populations.channel("P10")[0] == doctest::Approx(1.0).epsilon(1e-14));
}
