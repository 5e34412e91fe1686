#include "sconv/filter.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sconv {

double xi(double si0, double si2, double epsilon) {
    const double tau = std::abs(si0 - si2);
    const double hi = std::max(si0, si2) + epsilon;
    const double lo = std::min(si0, si2) + epsilon;
    const double t2 = tau * tau;
    return (1.0 + t2 / (hi * hi)) / (1.0 + t2 / (lo * lo));
}

std::vector<double> xi_field(const SmoothnessData& si, double epsilon) {
    if (si.si0.size() != si.si2.size()) {
        throw std::invalid_argument("xi_field: indicator length mismatch");
    }
    std::vector<double> out(si.si0.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = xi(si.si0[i], si.si2[i], epsilon);
    }
    return out;
}

FilterField sigma_fields(std::span<const double> xi_left, std::span<const double> xi_right,
                         Boundary bc) {
    if (xi_left.size() != xi_right.size() || xi_left.size() < 2) {
        throw std::invalid_argument("sigma_fields: xi fields must share a length of at least 2");
    }
    const std::size_t n = xi_left.size();
    const std::size_t last = n - 1;
    const bool periodic = bc == Boundary::Periodic;

    FilterField out;
    out.sigma_left.resize(n);
    out.sigma_right.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t next = i + 1;
        if (i == last) next = periodic ? 1 % n : last;
        std::size_t prev = i == 0 ? (periodic ? last - 1 : 0) : i - 1;
        out.sigma_left[i] = std::min(xi_left[i], xi_left[next]);
        out.sigma_right[i] = std::min(xi_right[prev], xi_right[i]);
    }
    return out;
}

}  // namespace sconv
