#pragma once

#include <array>
#include <span>

namespace sconv {

/// Coefficients of the exponentially weighted cell integral
///
///     J_i = alpha * int_{x_{i-1}}^{x_i} exp(-alpha (x_i - y)) v(y) dy
///
/// on the six-point stencil {x_{i-3}, ..., x_{i+2}} (left orientation).
/// Row r of the small-stencil table multiplies v_{i-3+r}, ..., v_{i+r}.
using SmallStencilTable = std::array<std::array<double, 4>, 3>;

/// Below this nu the closed forms lose accuracy to cancellation and the
/// truncated Taylor series is used instead.
inline constexpr double kSeriesThreshold = 0.05;
/// The linear weights cancel at a higher power of nu, so they switch later.
inline constexpr double kWeightSeriesThreshold = 0.25;

inline constexpr double kWenoEpsilon = 1e-6;

/// Throws std::invalid_argument for nu <= 0.
SmallStencilTable small_stencil_coefficients(double nu);
std::array<double, 3> linear_weights(double nu);
std::array<double, 6> linear_coefficients(double nu);

/// Closed-form and series evaluations, exposed so the branch switch can be
/// checked directly.
SmallStencilTable small_stencil_coefficients_closed(double nu);
SmallStencilTable small_stencil_coefficients_series(double nu);
std::array<double, 3> linear_weights_closed(double nu);
std::array<double, 3> linear_weights_series(double nu);

/// Window of six node values v_{i-3..i+2} in left orientation. A right
/// integral J^R_i uses the mirrored window v_{i+3}, ..., v_{i-2}.
using StencilWindow = std::span<const double, 6>;

std::array<double, 3> smoothness_indicators(StencilWindow w);

std::array<double, 3> nonlinear_weights(const std::array<double, 3>& si,
                                        const std::array<double, 3>& d,
                                        double epsilon = kWenoEpsilon);

struct WenoIntegral {
    double value = 0.0;
    double si0 = 0.0;
    double si2 = 0.0;
};

/// All nu-dependent quantities of one convolution family, computed once.
struct QuadratureRule {
    double nu = 0.0;
    double decay = 0.0;  // exp(-nu)
    SmallStencilTable small{};
    std::array<double, 3> d{};
    std::array<double, 6> linear{};

    explicit QuadratureRule(double nu);

    [[nodiscard]] double apply_linear(StencilWindow w) const;
    [[nodiscard]] WenoIntegral apply_weno(StencilWindow w, double epsilon = kWenoEpsilon) const;
};

WenoIntegral weno_local_integral(StencilWindow w, double nu);

}  // namespace sconv
