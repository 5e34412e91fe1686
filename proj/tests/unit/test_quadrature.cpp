#include <doctest.h>

#include <stdexcept>

#include <array>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "sconv/quadrature.hpp"

using namespace sconv;

namespace {

constexpr double kNus[] = {0.01, 0.1, 1.0, 10.0};

// Relative error against the oracle, scaled by the integral of |p| so that
// near-cancelling polynomials do not inflate the ratio.
double rel_err(double got, oracle::ld want, oracle::ld scale) {
    return static_cast<double>(std::fabs((oracle::ld)got - want) / scale);
}

}  // namespace

TEST_CASE("small stencil rows sum to 1 - exp(-nu)") {
    for (double nu : {1e-4, 0.01, 0.049, 0.05, 0.3, 1.0, 7.0, 40.0}) {
        const auto t = small_stencil_coefficients(nu);
        for (const auto& row : t) {
            const double s = row[0] + row[1] + row[2] + row[3];
            CHECK(s == doctest::Approx(-std::expm1(-nu)).epsilon(1e-13));
        }
        const auto c = linear_coefficients(nu);
        double s = 0.0;
        for (double v : c) s += v;
        CHECK(s == doctest::Approx(-std::expm1(-nu)).epsilon(1e-13));
    }
}

TEST_CASE("small stencils integrate cubics exactly") {
    std::mt19937_64 rng(7);
    const double dx = 0.1;
    for (double nu : kNus) {
        const auto t = small_stencil_coefficients(nu);
        const double alpha = nu / dx;
        for (int trial = 0; trial < 10; ++trial) {
            const auto p = oracle::random_poly(3, rng);
            const double xi = 0.37;
            const auto want = oracle::left_cell_integral(p, alpha, xi, dx);
            const auto scale = oracle::left_cell_integral(
                [&](oracle::ld y) { return std::fabs(p(y)) + 1e-3L; }, alpha, xi, dx);
            for (int r = 0; r < 3; ++r) {
                double got = 0.0;
                for (int j = 0; j < 4; ++j) got += t[r][j] * (double)p(xi + (r - 3 + j) * dx);
                CHECK(rel_err(got, want, scale) <= 1e-10);
            }
        }
    }
}

TEST_CASE("combined six-point rule integrates quintics exactly") {
    std::mt19937_64 rng(11);
    const double dx = 0.05;
    for (double nu : kNus) {
        const QuadratureRule rule(nu);
        const double alpha = nu / dx;
        for (int trial = 0; trial < 10; ++trial) {
            const auto p = oracle::random_poly(5, rng);
            const double xi = -0.21;
            std::array<double, 6> w{};
            for (int j = 0; j < 6; ++j) w[j] = (double)p(xi + (j - 3) * dx);
            const auto want = oracle::left_cell_integral(p, alpha, xi, dx);
            const auto scale = oracle::left_cell_integral(
                [&](oracle::ld y) { return std::fabs(p(y)) + 1e-3L; }, alpha, xi, dx);
            CHECK(rel_err(rule.apply_linear(w), want, scale) <= 1e-10);
        }
    }
}

TEST_CASE("linear weights at nu = 1 match multiprecision values") {
    // Lagrange-basis integrals evaluated at 40 digits.
    const auto d = linear_weights(1.0);
    CHECK(d[0] == doctest::Approx(0.173914141853905699).epsilon(1e-14));
    CHECK(d[1] == doctest::Approx(0.63293202190278029006).epsilon(1e-14));
    CHECK(d[2] == doctest::Approx(0.19315383624331401095).epsilon(1e-14));
    CHECK(d[0] + d[1] + d[2] == doctest::Approx(1.0).epsilon(1e-15));

    const auto t = small_stencil_coefficients(1.0);
    const double row0[4] = {0.02676713235713139867, -0.1321205588285576784,
                            0.44818083824283651761, 0.28929314705714744053};
    const double row2[4] = {0.18736992649991979069, 0.54667385288586553755,
                            -0.12697524995725973356, 0.025052029400032083723};
    for (int j = 0; j < 4; ++j) {
        CHECK(t[0][j] == doctest::Approx(row0[j]).epsilon(1e-13));
        CHECK(t[2][j] == doctest::Approx(row2[j]).epsilon(1e-13));
    }
    const auto c = linear_coefficients(1.0);
    const double big[6] = {0.0046551828537804192895, -0.038833865230857275631,
                           0.29615355888554470032,   0.40677431857633026955,
                           -0.04146753184053692038,  0.0048388955842964852498};
    for (int j = 0; j < 6; ++j) CHECK(c[j] == doctest::Approx(big[j]).epsilon(1e-12));
}

TEST_CASE("series and closed-form branches agree at the switch") {
    const double nu = kSeriesThreshold;
    const auto a = small_stencil_coefficients_closed(nu);
    const auto b = small_stencil_coefficients_series(nu);
    for (int r = 0; r < 3; ++r) {
        for (int j = 0; j < 4; ++j) CHECK(std::abs(a[r][j] - b[r][j]) <= 1e-10 * std::abs(a[r][j]));
    }
    const auto da = linear_weights_closed(kWeightSeriesThreshold);
    const auto db = linear_weights_series(kWeightSeriesThreshold);
    for (int r = 0; r < 3; ++r) CHECK(std::abs(da[r] - db[r]) <= 1e-10);
}

TEST_CASE("coefficients vanish like nu as nu -> 0") {
    const auto t1 = small_stencil_coefficients(1e-3);
    const auto t2 = small_stencil_coefficients(1e-4);
    for (int r = 0; r < 3; ++r) {
        for (int j = 0; j < 4; ++j) CHECK(t2[r][j] / t1[r][j] == doctest::Approx(0.1).epsilon(1e-2));
    }
}

TEST_CASE("non-positive nu is rejected") {
    CHECK_THROWS_AS(small_stencil_coefficients(0.0), std::invalid_argument);
    CHECK_THROWS_AS(linear_weights(-1.0), std::invalid_argument);
}

TEST_CASE("smoothness indicators") {
    const std::array<double, 6> flat{2, 2, 2, 2, 2, 2};
    for (double s : smoothness_indicators(flat)) CHECK(s == 0.0);

    const std::array<double, 6> line{0, 1, 2, 3, 4, 5};
    for (double s : smoothness_indicators(line)) CHECK(s == doctest::Approx(1.0));

    // Jump between the fourth and fifth node: only stencil 0 avoids it.
    const std::array<double, 6> step{0, 0, 0, 0, 1, 1};
    const auto si = smoothness_indicators(step);
    const double k3 = 781.0 / 720.0;
    const double k2 = 13.0 / 48.0;
    CHECK(si[0] == 0.0);
    CHECK(si[1] == doctest::Approx(k3 + k2));
    CHECK(si[2] == doctest::Approx(4 * k3 + 16 * k2));
}

TEST_CASE("nonlinear weights") {
    const std::array<double, 3> d{0.3, 0.5, 0.2};
    const auto same = nonlinear_weights({0.4, 0.4, 0.4}, d);
    for (int r = 0; r < 3; ++r) CHECK(same[r] == doctest::Approx(d[r]).epsilon(1e-15));

    const auto w = nonlinear_weights({0.0, 0.0, 1e3}, d, 1e-6);
    CHECK(w[0] == doctest::Approx(0.375).epsilon(1e-12));
    CHECK(w[1] == doctest::Approx(0.625).epsilon(1e-12));
    CHECK(w[2] == doctest::Approx(2.5e-19).epsilon(1e-6));

    const auto pick = nonlinear_weights({5.0, 0.0, 1.0}, {1.0, 0.0, 0.0});
    CHECK(pick[0] == 1.0);
    CHECK(pick[1] == 0.0);
    CHECK(pick[2] == 0.0);
}

TEST_CASE("weno integral on constants and smooth data") {
    const std::array<double, 6> ones{1, 1, 1, 1, 1, 1};
    for (double nu : kNus) {
        CHECK(weno_local_integral(ones, nu).value == doctest::Approx(-std::expm1(-nu)).epsilon(1e-14));
    }
    // Smooth data: WENO and linear rule differ only through the weights.
    const double dx = 0.01;
    std::array<double, 6> w{};
    for (int j = 0; j < 6; ++j) w[j] = std::sin(0.3 + (j - 3) * dx);
    const QuadratureRule rule(0.5);
    const double lin = rule.apply_linear(w);
    CHECK(std::abs(rule.apply_weno(w).value - lin) <= 1e-6 * std::abs(lin));
}

TEST_CASE("weights stay convex on arbitrary windows") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> dist(-50.0, 50.0);
    const auto d = linear_weights(0.7);
    for (int trial = 0; trial < 200; ++trial) {
        std::array<double, 6> w{};
        for (double& v : w) v = dist(rng);
        const auto omega = nonlinear_weights(smoothness_indicators(w), d);
        double s = 0.0;
        for (double o : omega) {
            CHECK(o >= 0.0);
            CHECK(o <= 1.0);
            s += o;
        }
        CHECK(s == doctest::Approx(1.0).epsilon(1e-14));
    }
}
