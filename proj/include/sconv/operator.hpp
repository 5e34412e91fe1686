#pragma once

#include <memory>
#include <span>
#include <vector>

#include "sconv/core.hpp"
#include "sconv/filter.hpp"
#include "sconv/kernel.hpp"

namespace sconv {

/// Lax-Friedrichs splitting f = f+ + f-, f+- = (f(u) +- c u) / 2.
struct SplitFlux {
    std::vector<double> fplus;
    std::vector<double> fminus;
    double c = 0.0;
};

SplitFlux flux_split(const ScalarFn& flux, std::span<const double> u, double c);
SplitFlux flux_split(const ProblemSpec& problem, std::span<const double> u,
                     const WaveBounds& bounds);

/// Flux and diffusion of one spatial direction.
struct AxisTerms {
    const ScalarFn* flux = nullptr;
    const ScalarFn* diffusion = nullptr;
    Boundary bc = Boundary::Periodic;
};

/// Scratch space for build_H on lines of one grid. Convolvers are cached and
/// only rebuilt when alpha changes, so all lines of a sweep share them.
class OperatorWorkspace {
public:
    OperatorWorkspace() = default;

    /// Returns a convolver for (grid, bc, alpha), reusing the cached one in
    /// `slot` when the parameters match.
    Convolver& convolver(int slot, const Grid1D& grid, Boundary bc, double alpha);

    SplitFlux split;
    std::vector<double> g_values;
    std::vector<double> scratch;
    PowerChain left;
    PowerChain right;
    PowerChain zero;
    PowerChain cross;

private:
    struct Cached {
        std::unique_ptr<Convolver> conv;
        double alpha = 0.0;
        std::size_t n_nodes = 0;
        double a = 0.0;
        double b = 0.0;
        Boundary bc = Boundary::Periodic;
    };
    Cached slots_[3];
};

/// Spatial operator H[u] approximating -f(u)_x + g(u)_xx on one line:
///
///   H = -a_L [D_L[f+] + sum_{p>=2} sigma_L^{p-1} D_L^p[f+]]
///       + a_R [D_R[f-] + sum_{p>=2} sigma_R^{p-1} D_R^p[f-]]
///       - a_0^2 sum_p D_0^p[g(u)]
///       (+ a_L D_0[D_L^2[f+] - D_L^2[f-]] for the third order cross term),
///
/// a_L = a_R = beta / (c dt), a_0 = sqrt(beta / (b dt)). Throws
/// std::invalid_argument for dt <= 0.
void build_H_line(std::span<const double> u, const Grid1D& grid, const AxisTerms& terms,
                  const SchemeConfig& config, const WaveBounds& bounds, double dt,
                  std::span<double> H, OperatorWorkspace& ws);

std::vector<double> build_H(std::span<const double> u, const Grid1D& grid,
                            const ProblemSpec& problem, const SchemeConfig& config,
                            const WaveBounds& bounds, double dt);

}  // namespace sconv
