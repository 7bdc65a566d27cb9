#include <doctest.h>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>
#include <algorithm>
#include <cmath>
#include <random>

#include "rabi/aa_spectrum.hpp"
#include "rabi/special.hpp"

using namespace rabi;

namespace {

ModelParams make(double r, double beta, double kappa0, double alpha_sq = 0.0) {
    ModelParams p;
    p.ratio_r = r;
    p.beta = beta;
    p.kappa0 = kappa0;
    p.alpha_sq = alpha_sq;
    return p;
}

// <1,1; N_1| H' |1,0; N_0> with |N_m> = D(-m beta)|N> built by matrix exponential.
double brute_force_omega1(unsigned n, double r, double beta, int cutoff) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(cutoff + 1, cutoff + 1);
    for (int k = 1; k <= cutoff; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
    const Eigen::MatrixXd d_minus = (-beta * (a.transpose() - a)).exp();
    const Eigen::VectorXd n1 = d_minus.col(n);
    const Eigen::VectorXd n0 = Eigen::VectorXd::Unit(cutoff + 1, n);
    // -(r/2)(sx1 + sx2) has <1,1|.|1,0> = -r/sqrt(2).
    return -(r / std::sqrt(2.0)) * n1.dot(n0);
}

}  // namespace

TEST_CASE("omega_1N examples") {
    CHECK(omega_1N(0, make(0.2, 0.0, 0.0)) == doctest::Approx(-0.2 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(omega_1N(0, make(0.2, 0.0, 0.0)) == doctest::Approx(-0.141421).epsilon(1e-6));
    for (unsigned n : {0u, 3u, 50u}) CHECK(omega_1N(n, make(0.0, 0.4, 0.1)) == 0.0);
    // Frozen from a displaced-basis construction at cutoff 120.
    const ModelParams fig3 = make(0.12, 0.4193, 0.02, 106);
    CHECK(omega_1N(16, fig3) == doctest::Approx(0.031003248518354093).epsilon(1e-13));
    CHECK(omega_1N(16, fig3) == doctest::Approx(brute_force_omega1(16, 0.12, 0.4193, 100)).epsilon(1e-11));
}

TEST_CASE("omega_2N examples") {
    for (unsigned n : {0u, 7u, 106u}) CHECK(omega_2N(n, make(0.12, 0.4193, 0.0)) == 0.0);
    ModelParams p = make(0.23, 0.0, 0.1);
    CHECK(omega_2N(0, p) == doctest::Approx(-0.023).epsilon(1e-14));
    const double v = omega_2N(106, make(0.12, 0.4193, 0.02));
    CHECK(std::isfinite(v));
    CHECK(std::abs(v) <= 0.02 * 0.12);
}

TEST_CASE("uncoupled-oscillator limit") {
    for (unsigned n : {0u, 1u, 16u, 200u}) {
        const ModelParams p = make(0.23, 0.0, 0.0);
        const AASpectrumRow row = aa_row(n, p);
        CHECK(row.t0tilde == 0.0);
        CHECK(row.weight == 0.125);
        CHECK(row.rabi_freq == doctest::Approx(2.0 * 0.23).epsilon(1e-15));
        // Symmetric splitting around e0.
        CHECK(row.eplus - row.e0 == doctest::Approx(row.e0 - row.eminus).epsilon(1e-15));
        CHECK(row.eplus - row.eminus == doctest::Approx(2.0 * std::sqrt(2.0) * std::abs(row.omega1N)));
    }
}

TEST_CASE("Laguerre root of Omega_1N gives zero weight") {
    // Smallest root of L_1(x) = 1 - x is x = 1, i.e. beta = 1.
    ModelParams p = make(0.2, 1.0, 0.1);
    const AASpectrumRow row = aa_row(1, p);
    CHECK(std::abs(row.omega1N) < 1e-16);
    if (row.omega1N == 0.0) {
        CHECK_FALSE(row.has_mixing());
        CHECK_FALSE(row.degenerate);
    }
    CHECK(row.weight < 1e-30);
}

TEST_CASE("degenerate row is flagged") {
    // Omega_1N = 0 via ratio_r = 0 and t0 = -beta^2 + kappa + Omega_2N = 0 at beta = kappa = 0.
    const AASpectrumRow row = aa_row(4, make(0.0, 0.0, 0.0));
    CHECK(row.degenerate);
    CHECK(row.weight == 0.0);
    CHECK_FALSE(row.y_plus.has_value());
}

TEST_CASE("row invariants over random parameters") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<unsigned> un(0, 200);
    std::uniform_real_distribution<double> ub(0.0, 0.6), uk(-1.0, 1.0), ur(1e-3, 0.3);
    for (int i = 0; i < 2000; ++i) {
        ModelParams p = make(ur(rng), ub(rng), uk(rng));
        if (i % 2) p.kappa_convention = KappaConvention::OmegaScaled;
        const AASpectrumRow row = aa_row(un(rng), p);
        CHECK(row.eplus >= row.eminus);
        CHECK(row.weight >= 0.0);
        CHECK(row.weight <= 0.125);
        CHECK(row.rabi_freq >= 0.0);
        CHECK(row.rabi_freq == doctest::Approx(row.eplus - row.eminus).epsilon(1e-12));
        if (!row.has_mixing()) continue;
        const double yp = *row.y_plus, ym = *row.y_minus;
        CHECK(std::abs(yp * ym + 2.0) <= 1e-10 * 2.0);
        CHECK((yp - ym) == doctest::Approx(row.rabi_freq / row.omega1N).epsilon(1e-10));
        CHECK(std::abs(row.weight - yp * yp / (*row.l2_plus * *row.l2_plus)) <= 1e-12);
        CHECK((2.0 + yp * yp) / *row.l2_plus == doctest::Approx(1.0).epsilon(1e-15));
        CHECK((2.0 + ym * ym) / *row.l2_minus == doctest::Approx(1.0).epsilon(1e-15));
    }
}

TEST_CASE("kappa convention is irrelevant at kappa0 = 0") {
    ModelParams a = make(0.12, 0.4193, 0.0);
    ModelParams b = a;
    b.kappa_convention = KappaConvention::OmegaScaled;
    for (unsigned n = 0; n < 150; n += 7) {
        const auto ra = aa_row(n, a), rb = aa_row(n, b);
        CHECK(ra.weight == rb.weight);
        CHECK(ra.eplus == rb.eplus);
        CHECK(ra.e0 == rb.e0);
    }
}

TEST_CASE("Fig. 3 weights are small across the Poisson window") {
    const ModelParams p = make(0.12, 0.4193, 0.02, 106);
    double max_w = 0.0;
    for (const auto& row : aa_rows(86, 126, p)) max_w = std::max(max_w, row.weight);
    CHECK(max_w < 0.125 / 10.0);
}

TEST_CASE("aa_rows matches aa_row") {
    const ModelParams p = make(0.2, 0.4717, -0.7, 250);
    const auto rows = aa_rows(200, 300, p);
    REQUIRE(rows.size() == 101);
    for (const auto& r : rows) {
        const auto single = aa_row(r.n, p);
        CHECK(r.weight == single.weight);
        CHECK(r.rabi_freq == single.rabi_freq);
    }
}

TEST_CASE("Fig. 4 weight is minimized at the mean photon number") {
    for (auto conv : {KappaConvention::Omega0Scaled, KappaConvention::OmegaScaled}) {
        ModelParams p = make(0.2, 0.4717, -0.7, 250);
        p.kappa_convention = conv;
        const auto rows = aa_rows(150, 350, p);
        const auto best = std::min_element(rows.begin(), rows.end(),
                                           [](const auto& a, const auto& b) { return a.weight < b.weight; });
        CHECK(best->omega2N < 0.0);
        CHECK(best->n == 250);
        CHECK(best->weight < 1e-9);
    }
}
