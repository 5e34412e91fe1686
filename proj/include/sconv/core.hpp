#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace sconv {

/// Boundary regime shared by every convolution family.
///
/// `Homogeneous` means all spatial derivatives vanish at both ends, i.e. the
/// solution is constant in a neighbourhood of each boundary.
enum class Boundary { Periodic, Homogeneous };

enum class Quadrature { Weno5, Linear6 };

using ScalarFn = std::function<double(double)>;

/// Below this magnitude a wave-speed bound is treated as zero and the
/// corresponding partial sums are skipped.
inline constexpr double kDegenerateBound = 1e-14;

/// Uniform 1D node set a = x_0 < ... < x_N = b.
struct Grid1D {
    double a = 0.0;
    double b = 1.0;
    int n_cells = 0;
    double dx = 0.0;
    std::vector<double> nodes;

    [[nodiscard]] std::size_t size() const { return nodes.size(); }
    [[nodiscard]] double length() const { return b - a; }
};

struct Grid2D {
    Grid1D gx;
    Grid1D gy;
};

/// Minimum number of cells supporting the six-point stencil.
inline constexpr int kMinCells = 6;

/// Throws std::invalid_argument when b <= a or n_cells < kMinCells.
Grid1D build_grid_1d(double a, double b, int n_cells);

/// u_t + f(u)_x = g(u)_xx with g'(u) >= 0.
struct ProblemSpec {
    ScalarFn flux;
    ScalarFn flux_deriv;
    ScalarFn diffusion;
    ScalarFn diffusion_deriv;
    ScalarFn initial;
    Boundary bc = Boundary::Periodic;
    std::function<double(double, double)> exact;  // (x, t), optional
};

struct SchemeConfig {
    int order = 3;
    double beta = 0.4;
    double cfl = 0.5;
    Quadrature quadrature = Quadrature::Weno5;
    bool filter_enabled = true;
    bool cross_term_k3 = true;

    /// Throws std::invalid_argument on order outside {1,2,3} or non-positive
    /// beta/cfl.
    void validate() const;

    /// The cross term only exists for the third order partial sum.
    [[nodiscard]] bool cross_term_active() const { return order == 3 && cross_term_k3; }
};

struct SolutionField {
    std::vector<double> values;
    double time = 0.0;
};

/// c = max|f'(u)|, b_diff = max|g'(u)| over the current value range.
struct WaveBounds {
    double c = 0.0;
    double b_diff = 0.0;

    [[nodiscard]] bool has_advection() const { return c >= kDegenerateBound; }
    [[nodiscard]] bool has_diffusion() const { return b_diff >= kDegenerateBound; }
};

inline constexpr int kBoundSamples = 2048;

/// Samples |f'| and |g'| on kBoundSamples uniform points spanning
/// [min(u) - delta, max(u) + delta], delta = 1e-6 * (range + 1).
WaveBounds compute_bounds(const ScalarFn& flux_deriv, const ScalarFn& diffusion_deriv,
                          std::span<const double> u);
WaveBounds compute_bounds(const ProblemSpec& problem, std::span<const double> u);

/// dt = cfl * dx / (b_diff + c).
double compute_dt(const SchemeConfig& config, const WaveBounds& bounds, const Grid1D& grid);

/// dt = cfl / max((b_x + c_x)/dx, (b_y + c_y)/dy), evaluated as the smaller
/// of the two 1D steps.
double compute_dt(const SchemeConfig& config, const WaveBounds& bounds_x,
                  const WaveBounds& bounds_y, const Grid2D& grid);

/// Samples f at the grid nodes.
std::vector<double> sample(const ScalarFn& f, const Grid1D& grid);

}  // namespace sconv
