#pragma once

#include <span>
#include <vector>

#include "sconv/core.hpp"
#include "sconv/kernel.hpp"
#include "sconv/quadrature.hpp"

namespace sconv {

/// Discontinuity detector built from the outer smoothness indicators:
///
///     tau = |SI0 - SI2|,
///     xi  = (1 + tau^2 / (SI_max + eps)^2) / (1 + tau^2 / (SI_min + eps)^2).
///
/// xi = 1 + O(dx^6) on smooth data and O(dx^4) next to a jump.
double xi(double si0, double si2, double epsilon = kWenoEpsilon);

std::vector<double> xi_field(const SmoothnessData& si, double epsilon = kWenoEpsilon);

struct FilterField {
    std::vector<double> sigma_left;
    std::vector<double> sigma_right;
};

/// sigma_L,i = min(xi_i, xi_{i+1}) from the left pass, sigma_R,i =
/// min(xi_{i-1}, xi_i) from the right pass. Neighbours wrap for periodic data
/// (the last node coincides with the first) and clamp otherwise.
FilterField sigma_fields(std::span<const double> xi_left, std::span<const double> xi_right,
                         Boundary bc);

}  // namespace sconv
