#pragma once

#include <complex>
#include <string>
#include <vector>

#include "sconv/kernel.hpp"

namespace sconv {

enum class SymbolMode { SemiDiscrete, FullyDiscreteLinear6 };
enum class EquationKind { Advection, Diffusion };

struct SymbolQuery {
    Side side = Side::Left;
    double kappa_dx = 0.0;  // in [0, 2 pi]
    double nu = 1.0;        // alpha * dx
    SymbolMode mode = SymbolMode::SemiDiscrete;
};

/// Fourier symbol of D_L, D_R or D_0.
///
/// Semi-discrete, theta = kappa / alpha = kappa_dx / nu:
///   D_L = i theta / (1 + i theta), D_R = conj(D_L), D_0 = theta^2 / (1 + theta^2).
/// Fully discrete with the six-point linear rule c_r:
///   D_L = 1 - sum_r c_r e^{i r kdx} / (1 - e^{-nu - i kdx}), D_0 = (D_L + D_R) / 2.
std::complex<double> symbol_D(const SymbolQuery& query);

/// lambda = R_k(z), z = -beta sum_{p=1..k} D^p with D = D_L (advection) or D_0
/// (diffusion). For k = 3 advection with cross_term, z gains beta D_0 D_L^2
/// with D_0 taken at the advection nu.
///
/// step_ratio is c dt / dx (advection, nu = beta / ratio) or b dt / dx^2
/// (diffusion, nu = sqrt(beta / ratio)).
std::complex<double> amplification(int k, EquationKind kind, double beta, double kappa_dx,
                                   double step_ratio, SymbolMode mode, bool cross_term);

struct ScanGrid {
    int n_kappa = 512;
    int n_ratio = 64;
    double ratio_min = 1e-3;
    double ratio_max = 1e3;

    [[nodiscard]] std::vector<double> kappa_values() const;  // uniform on [0, 2 pi]
    [[nodiscard]] std::vector<double> ratio_values() const;  // log-uniform
};

/// Max |lambda| over the scan grid. Throws std::invalid_argument when either
/// axis has fewer than 2 points.
double max_amplification(int k, EquationKind kind, double beta, SymbolMode mode,
                         bool cross_term, const ScanGrid& grid = {});

inline constexpr double kStabilityTolerance = 1e-10;

/// Largest beta in [0, 4] with max |lambda| <= 1 + kStabilityTolerance,
/// bisected to `resolution`.
double scan_beta_max(int k, EquationKind kind, SymbolMode mode, bool cross_term,
                     const ScanGrid& grid = {}, double resolution = 1e-3);

struct StabilityReport {
    EquationKind kind = EquationKind::Advection;
    int k = 1;
    double beta = 1.0;
    SymbolMode mode = SymbolMode::FullyDiscreteLinear6;
    bool cross_term = false;
    std::vector<double> kappa_dx;
    std::vector<double> step_ratio;
    std::vector<double> abs_lambda;  // abs_lambda[r * kappa_dx.size() + j]
    double max_abs_lambda = 0.0;
    double beta_max_estimate = 0.0;  // NaN unless requested
};

StabilityReport stability_report(int k, EquationKind kind, double beta, SymbolMode mode,
                                 bool cross_term, const ScanGrid& grid = {},
                                 bool estimate_beta_max = false);

/// CSV with header "kappa_dx,step_ratio,abs_lambda", one row per grid cell.
/// Throws std::runtime_error when the file cannot be written.
void export_contours(const StabilityReport& report, const std::string& path);

}  // namespace sconv
