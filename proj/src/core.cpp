#include "sconv/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace sconv {

Grid1D build_grid_1d(double a, double b, int n_cells) {
    if (!(b > a)) {
        throw std::invalid_argument("grid: right endpoint must exceed left endpoint");
    }
    if (n_cells < kMinCells) {
        throw std::invalid_argument("grid: need at least " + std::to_string(kMinCells) +
                                    " cells, got " + std::to_string(n_cells));
    }
    Grid1D g;
    g.a = a;
    g.b = b;
    g.n_cells = n_cells;
    g.dx = (b - a) / n_cells;
    g.nodes.resize(static_cast<std::size_t>(n_cells) + 1);
    for (int i = 0; i <= n_cells; ++i) {
        g.nodes[i] = a + i * g.dx;
    }
    g.nodes.back() = b;
    return g;
}

void SchemeConfig::validate() const {
    if (order < 1 || order > 3) {
        throw std::invalid_argument("scheme: order must be 1, 2 or 3");
    }
    if (!(beta > 0.0) || !std::isfinite(beta)) {
        throw std::invalid_argument("scheme: beta must be positive");
    }
    if (!(cfl > 0.0) || !std::isfinite(cfl)) {
        throw std::invalid_argument("scheme: cfl must be positive");
    }
}

WaveBounds compute_bounds(const ScalarFn& flux_deriv, const ScalarFn& diffusion_deriv,
                          std::span<const double> u) {
    if (u.empty()) {
        throw std::invalid_argument("bounds: empty solution");
    }
    const auto [lo_it, hi_it] = std::minmax_element(u.begin(), u.end());
    const double range = *hi_it - *lo_it;
    const double delta = 1e-6 * (range + 1.0);
    const double lo = *lo_it - delta;
    const double step = (range + 2.0 * delta) / (kBoundSamples - 1);

    WaveBounds out;
    for (int s = 0; s < kBoundSamples; ++s) {
        const double v = lo + s * step;
        const double fp = flux_deriv ? flux_deriv(v) : 0.0;
        const double gp = diffusion_deriv ? diffusion_deriv(v) : 0.0;
        if (!std::isfinite(fp) || !std::isfinite(gp)) {
            throw std::runtime_error("bounds: non-finite derivative sample at u = " +
                                     std::to_string(v));
        }
        out.c = std::max(out.c, std::abs(fp));
        out.b_diff = std::max(out.b_diff, std::abs(gp));
    }
    return out;
}

WaveBounds compute_bounds(const ProblemSpec& problem, std::span<const double> u) {
    return compute_bounds(problem.flux_deriv, problem.diffusion_deriv, u);
}

double compute_dt(const SchemeConfig& config, const WaveBounds& bounds, const Grid1D& grid) {
    const double speed = bounds.b_diff + bounds.c;
    if (!(speed > 0.0)) {
        throw std::invalid_argument("dt: both wave bounds vanish (stationary problem)");
    }
    return config.cfl * grid.dx / speed;
}

double compute_dt(const SchemeConfig& config, const WaveBounds& bounds_x,
                  const WaveBounds& bounds_y, const Grid2D& grid) {
    // min over axes of the 1D step, written so an inactive axis reproduces the
    // 1D value bit for bit.
    const double sx = bounds_x.b_diff + bounds_x.c;
    const double sy = bounds_y.b_diff + bounds_y.c;
    if (!(sx > 0.0) && !(sy > 0.0)) {
        throw std::invalid_argument("dt: all wave bounds vanish (stationary problem)");
    }
    double dt = std::numeric_limits<double>::infinity();
    if (sx > 0.0) dt = config.cfl * grid.gx.dx / sx;
    if (sy > 0.0) dt = std::min(dt, config.cfl * grid.gy.dx / sy);
    return dt;
}

std::vector<double> sample(const ScalarFn& f, const Grid1D& grid) {
    std::vector<double> out(grid.size());
    std::transform(grid.nodes.begin(), grid.nodes.end(), out.begin(), f);
    return out;
}

}  // namespace sconv
