#pragma once

#include <functional>
#include <span>
#include <vector>

#include "sconv/core.hpp"
#include "sconv/operator.hpp"
#include "sconv/timestep.hpp"

namespace sconv {

/// u_t + f1(u)_x + f2(u)_y = g1(u)_xx + g2(u)_yy. Empty functions mean the
/// term is absent.
struct ProblemSpec2D {
    ScalarFn f1, f1_deriv;
    ScalarFn f2, f2_deriv;
    ScalarFn g1, g1_deriv;
    ScalarFn g2, g2_deriv;
    std::function<double(double, double)> initial;
    Boundary bc_x = Boundary::Periodic;
    Boundary bc_y = Boundary::Periodic;
};

/// Node values on a Grid2D, row-major: values[j * nx + i] at (x_i, y_j).
struct Field2D {
    std::size_t nx = 0;
    std::size_t ny = 0;
    std::vector<double> values;
    double time = 0.0;

    [[nodiscard]] double& at(std::size_t i, std::size_t j) { return values[j * nx + i]; }
    [[nodiscard]] double at(std::size_t i, std::size_t j) const { return values[j * nx + i]; }
};

Grid2D build_grid_2d(double ax, double bx, int nx_cells, double ay, double by, int ny_cells);

Field2D sample_2d(const std::function<double(double, double)>& f, const Grid2D& grid);

/// Per-axis wave bounds.
struct WaveBounds2D {
    WaveBounds x;
    WaveBounds y;
};

WaveBounds2D compute_bounds_2d(const ProblemSpec2D& problem, std::span<const double> u);

/// Scratch for build_H_2d: one OperatorWorkspace per thread plus the
/// transpose buffers used by the y sweeps.
struct Workspace2D {
    std::vector<OperatorWorkspace> per_thread;
    std::vector<double> transposed;
    std::vector<double> H_transposed;
};

/// H = H_x + H_y, each the 1D operator applied line by line to the same
/// stage field. Lines run in parallel when OpenMP is available; `threads`
/// <= 0 uses the runtime default.
void build_H_2d(std::span<const double> u, const Grid2D& grid, const ProblemSpec2D& problem,
                const SchemeConfig& config, const WaveBounds2D& bounds, double dt,
                std::span<double> H, Workspace2D& ws, int threads = 0);

struct AdvanceResult2D {
    Field2D solution;
    std::vector<Field2D> snapshots;
    std::size_t steps = 0;
};

/// SSP-RK time loop with per-axis bounds recomputed every step.
AdvanceResult2D advance_2d(const Field2D& u0, double T, const Grid2D& grid,
                           const ProblemSpec2D& problem, const SchemeConfig& config,
                           std::span<const double> snapshot_times = {}, int threads = 0);

}  // namespace sconv
