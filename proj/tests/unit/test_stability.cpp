#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <string>

#include "oracles.hpp"
#include "sconv/stability.hpp"

using namespace sconv;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("semi-discrete symbols") {
    for (double t : {0.0, 0.3, 1.0, 17.0}) {
        const double nu = 0.5 / 17.0;
        const auto dl = symbol_D({Side::Left, t * nu, nu, SymbolMode::SemiDiscrete});
        const auto d0 = symbol_D({Side::Zero, t * nu, nu, SymbolMode::SemiDiscrete});
        CHECK(std::abs(dl - oracle::semi_DL(t)) <= 1e-15);
        CHECK(d0.real() == doctest::Approx(oracle::semi_D0(t)));
        CHECK(d0.real() >= 0.0);
        CHECK(d0.real() <= 1.0);
    }
    const auto far = symbol_D({Side::Left, 2 * kPi, 1e-6, SymbolMode::SemiDiscrete});
    CHECK(std::abs(far - 1.0) <= 1e-6);
}

TEST_CASE("fully discrete symbols vanish at the zero mode") {
    for (double nu : {0.01, 0.5, 3.0}) {
        for (Side s : {Side::Left, Side::Right, Side::Zero}) {
            CHECK(std::abs(symbol_D({s, 0.0, nu, SymbolMode::FullyDiscreteLinear6})) <= 1e-13);
        }
    }
}

TEST_CASE("conjugate symmetry of the discrete advection symbol") {
    for (double kdx : {0.1, 1.0, 2.5}) {
        const auto a = symbol_D({Side::Left, kdx, 0.7, SymbolMode::FullyDiscreteLinear6});
        const auto b = symbol_D({Side::Left, 2 * kPi - kdx, 0.7, SymbolMode::FullyDiscreteLinear6});
        CHECK(std::abs(a - std::conj(b)) <= 1e-12);
    }
}

TEST_CASE("amplification closed forms") {
    // theta = kappa dx / nu with nu = beta / r, so kappa dx = 1 gives theta = r / beta.
    for (double t : {0.01, 0.5, 3.0, 100.0}) {
        const auto l2 = amplification(1, EquationKind::Advection, 2.0, 1.0, 2.0 * t,
                                      SymbolMode::SemiDiscrete, false);
        CHECK(std::abs(l2) == doctest::Approx(1.0).epsilon(1e-14));
        const auto l1 = amplification(1, EquationKind::Advection, 1.0, 1.0, t,
                                      SymbolMode::SemiDiscrete, false);
        CHECK(std::abs(l1) == doctest::Approx(1.0 / std::sqrt(1.0 + t * t)).epsilon(1e-14));
    }
    // kappa -> large: D_0 -> 1, lambda = 1 - 2 = -1.
    const auto l = amplification(1, EquationKind::Diffusion, 2.0, 2 * kPi, 1e6,
                                 SymbolMode::SemiDiscrete, false);
    CHECK(l.real() == doctest::Approx(-1.0).epsilon(1e-5));
}

TEST_CASE("max amplification") {
    CHECK(max_amplification(1, EquationKind::Advection, 2.0, SymbolMode::SemiDiscrete, false) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(max_amplification(2, EquationKind::Diffusion, 1.0, SymbolMode::FullyDiscreteLinear6,
                            false) <= 1.0 + 1e-10);
    for (SymbolMode m : {SymbolMode::SemiDiscrete, SymbolMode::FullyDiscreteLinear6}) {
        CHECK(max_amplification(1, EquationKind::Diffusion, 2.5, m, false) > 1.0);
    }
    ScanGrid tiny;
    tiny.n_kappa = 1;
    CHECK_THROWS_AS(max_amplification(1, EquationKind::Diffusion, 1.0, SymbolMode::SemiDiscrete,
                                      false, tiny),
                    std::invalid_argument);
}

TEST_CASE("beta_max scans") {
    CHECK(scan_beta_max(1, EquationKind::Advection, SymbolMode::FullyDiscreteLinear6, false) ==
          doctest::Approx(2.0).epsilon(0.005));
    CHECK(scan_beta_max(3, EquationKind::Diffusion, SymbolMode::FullyDiscreteLinear6, false) ==
          doctest::Approx(0.8375).epsilon(0.01));
    CHECK(scan_beta_max(3, EquationKind::Advection, SymbolMode::FullyDiscreteLinear6, true) ==
          doctest::Approx(1.243).epsilon(0.008));
}

TEST_CASE("contour export") {
    ScanGrid grid;
    grid.n_kappa = 16;
    grid.n_ratio = 8;
    const StabilityReport rep = stability_report(2, EquationKind::Advection, 0.8,
                                                 SymbolMode::FullyDiscreteLinear6, false, grid);
    CHECK(rep.abs_lambda.size() == 16u * 8u);
    for (std::size_t r = 0; r < rep.step_ratio.size(); ++r) {
        CHECK(rep.abs_lambda[r * rep.kappa_dx.size()] == doctest::Approx(1.0).epsilon(1e-13));
    }
    CHECK(std::isnan(rep.beta_max_estimate));

    const std::string path = "contour_test.csv";
    export_contours(rep, path);
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    CHECK(header == "kappa_dx,step_ratio,abs_lambda");
    int rows = 0;
    for (std::string line; std::getline(in, line);) ++rows;
    CHECK(rows == 16 * 8);
    std::remove(path.c_str());

    CHECK_THROWS_AS(export_contours(rep, "/nonexistent-dir/x.csv"), std::runtime_error);
}
