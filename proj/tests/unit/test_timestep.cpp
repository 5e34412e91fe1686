#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <limits>
#include <numbers>

#include "sconv/problems.hpp"
#include "sconv/stability.hpp"
#include "sconv/operator.hpp"
#include "sconv/timestep.hpp"

using namespace sconv;

namespace {

constexpr double kPi = std::numbers::pi;

double linf_at_T(double b, int k, double cfl, int n) {
    const BenchmarkCase bc = make_problem("linear_advdiff", {{"c", 1.0}, {"b", b}});
    SchemeConfig cfg = bc.default_config(k);
    cfg.cfl = cfl;
    const Grid1D g = bc.grid(n);
    const AdvanceResult r = advance({sample(bc.spec.initial, g), 0.0}, 2.0, g, bc.spec, cfg);
    return error_norms(r.solution.values, [&](double x) { return bc.spec.exact(x, 2.0); }, g).linf;
}

}  // namespace

TEST_CASE("zero operator leaves u unchanged") {
    const StageOperator zero = [](std::span<const double>, std::span<double> H) {
        std::fill(H.begin(), H.end(), 0.0);
    };
    const SolutionField u{{1.0, -2.0, 3.5}, 0.0};
    for (int k = 1; k <= 3; ++k) {
        const SolutionField v = rk_step(u, 0.3, k, zero);
        for (std::size_t i = 0; i < u.values.size(); ++i) {
            CHECK(v.values[i] == doctest::Approx(u.values[i]).epsilon(1e-15));
        }
        CHECK(v.time == doctest::Approx(0.3));
    }
}

TEST_CASE("scalar linear operator gives the SSP-RK multiplier") {
    const double dt = 0.1;
    for (double z : {-0.7, -2.5, 0.4}) {
        const StageOperator op = [&](std::span<const double> u, std::span<double> H) {
            for (std::size_t i = 0; i < u.size(); ++i) H[i] = z * u[i] / dt;
        };
        CHECK(rk_step({{1.0}, 0.0}, dt, 1, op).values[0] == doctest::Approx(1 + z));
        CHECK(rk_step({{1.0}, 0.0}, dt, 2, op).values[0] == doctest::Approx(1 + z + z * z / 2));
        CHECK(rk_step({{1.0}, 0.0}, dt, 3, op).values[0] ==
              doctest::Approx(1 + z + z * z / 2 + z * z * z / 6));
        CHECK(rk_multiplier(3, z) == doctest::Approx(1 + z + z * z / 2 + z * z * z / 6));
    }
}

TEST_CASE("non-finite stages abort") {
    const StageOperator bad = [](std::span<const double>, std::span<double> H) {
        std::fill(H.begin(), H.end(), std::numeric_limits<double>::quiet_NaN());
    };
    CHECK_THROWS_AS(rk_step({{1.0, 2.0}, 0.0}, 0.1, 2, bad), std::runtime_error);
    const StageOperator zero = [](std::span<const double>, std::span<double> H) {
        std::fill(H.begin(), H.end(), 0.0);
    };
    CHECK_THROWS_AS(rk_step({{1.0}, 0.0}, 0.0, 1, zero), std::invalid_argument);
    CHECK_THROWS_AS(rk_step({{1.0}, 0.0}, 0.1, 4, zero), std::invalid_argument);
}

TEST_CASE("advance to the initial time is the identity") {
    const BenchmarkCase bc = make_problem("linear_advdiff");
    const Grid1D g = bc.grid(40);
    const SolutionField u0{sample(bc.spec.initial, g), 0.0};
    const AdvanceResult r = advance(u0, 0.0, g, bc.spec, bc.default_config(3));
    CHECK(r.steps == 0);
    CHECK(r.solution.values == u0.values);
}

TEST_CASE("snapshots land exactly on the requested times") {
    const BenchmarkCase bc = make_problem("linear_advdiff");
    const Grid1D g = bc.grid(40);
    const std::vector<double> times{0.123, 0.5};
    const AdvanceResult r =
        advance({sample(bc.spec.initial, g), 0.0}, 0.7, g, bc.spec, bc.default_config(2), times);
    REQUIRE(r.snapshots.size() == 2);
    CHECK(r.snapshots[0].time == 0.123);
    CHECK(r.snapshots[1].time == 0.5);
    CHECK(r.solution.time == 0.7);
}

TEST_CASE("linear advection-diffusion errors match reference values") {
    CHECK(linf_at_T(0.01, 1, 0.5, 40) == doctest::Approx(7.260e-2).epsilon(0.1));
    CHECK(linf_at_T(1.0, 3, 1.0, 160) == doctest::Approx(2.788e-5).epsilon(0.1));
}

TEST_CASE("one Euler step on a Fourier mode matches the amplification factor") {
    const int n = 32;
    const int m = 3;
    const Grid1D g = build_grid_1d(0.0, 2 * kPi, n);
    ProblemSpec p;
    p.flux = [](double u) { return u; };
    p.flux_deriv = [](double) { return 1.0; };
    SchemeConfig cfg;
    cfg.order = 1;
    cfg.beta = 0.9;
    cfg.cfl = 1.7;
    cfg.quadrature = Quadrature::Linear6;
    cfg.filter_enabled = false;
    const double dt = cfg.cfl * g.dx;
    const auto re = sample([&](double x) { return std::cos(m * x); }, g);
    const auto im = sample([&](double x) { return std::sin(m * x); }, g);
    const AdvanceResult a = advance({re, 0.0}, dt, g, p, cfg);
    const AdvanceResult b = advance({im, 0.0}, dt, g, p, cfg);
    const auto lambda =
        amplification(1, EquationKind::Advection, cfg.beta, m * g.dx, cfg.cfl,
                      SymbolMode::FullyDiscreteLinear6, false);
    for (std::size_t i = 0; i < g.size(); ++i) {
        const std::complex<double> mode = std::polar(1.0, m * g.nodes[i]);
        const std::complex<double> got(a.solution.values[i], b.solution.values[i]);
        CHECK(std::abs(got - lambda * mode) <= 1e-12);
    }
}

TEST_CASE("large CFL stays bounded at the stability limit") {
    const BenchmarkCase bc = make_problem("linear_advdiff");
    for (int k = 1; k <= 3; ++k) {
        SchemeConfig cfg = bc.default_config(k);
        cfg.cfl = 2.0;
        cfg.beta = table_beta(k, true, true);
        const Grid1D g = bc.grid(80);
        double worst = 0.0;
        const ProblemSpec& p = bc.spec;
        auto step_size = [&](std::span<const double> u) {
            for (double v : u) worst = std::max(worst, std::abs(v));
            return compute_dt(cfg, compute_bounds(p, u), g);
        };
        auto make_op = [&](std::span<const double> u, double dt) -> StageOperator {
            const WaveBounds wb = compute_bounds(p, u);
            return [&, wb, dt](std::span<const double> s, std::span<double> H) {
                const auto h = build_H(s, g, p, cfg, wb, dt);
                std::copy(h.begin(), h.end(), H.begin());
            };
        };
        const AdvanceResult r =
            integrate({sample(p.initial, g), 0.0}, 2.0, k, step_size, make_op);
        for (double v : r.solution.values) worst = std::max(worst, std::abs(v));
        CHECK(worst <= 1.0 + 1e-8);
    }
}
