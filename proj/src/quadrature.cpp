#include "sconv/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace sconv {

namespace {

void require_positive(double nu) {
    if (!(nu > 0.0) || !std::isfinite(nu)) {
        throw std::invalid_argument("quadrature: nu must be positive and finite");
    }
}

// Taylor coefficients in nu of the twelve small-stencil weights, lowest power
// nu^1 first. Exact rationals from the series of the cubic-interpolant
// integral.
constexpr int kSeriesTerms = 8;
using SeriesRow = std::array<long double, kSeriesTerms>;

constexpr std::array<std::array<SeriesRow, 4>, 3> kSmallSeries{{
    {{
        {1.0L / 24, -7.0L / 360, 1.0L / 180, -1.0L / 840, 5.0L / 24192, -11.0L / 362880,
         1.0L / 259200, -13.0L / 29937600},
        {-5.0L / 24, 1.0L / 10, -7.0L / 240, 2.0L / 315, -1.0L / 896, 1.0L / 6048,
         -11.0L / 518400, 1.0L / 415800},
        {19.0L / 24, -19.0L / 40, 1.0L / 6, -107.0L / 2520, 23.0L / 2688, -173.0L / 120960,
         53.0L / 259200, -17.0L / 665280},
        {3.0L / 8, -19.0L / 180, 17.0L / 720, -11.0L / 2520, 83.0L / 120960, -17.0L / 181440,
         41.0L / 3628800, -73.0L / 59875200},
    }},
    {{
        {-1.0L / 24, 1.0L / 45, -1.0L / 144, 1.0L / 630, -1.0L / 3456, 1.0L / 22680,
         -1.0L / 172800, 1.0L / 1496880},
        {13.0L / 24, -43.0L / 120, 2.0L / 15, -89.0L / 2520, 59.0L / 8064, -151.0L / 120960,
         47.0L / 259200, -229.0L / 9979200},
        {13.0L / 24, -11.0L / 60, 11.0L / 240, -23.0L / 2520, 61.0L / 40320, -13.0L / 60480,
         97.0L / 3628800, -59.0L / 19958400},
        {-1.0L / 24, 7.0L / 360, -1.0L / 180, 1.0L / 840, -5.0L / 24192, 11.0L / 362880,
         -1.0L / 259200, 13.0L / 29937600},
    }},
    {{
        {3.0L / 8, -97.0L / 360, 19.0L / 180, -73.0L / 2520, 149.0L / 24192, -389.0L / 362880,
         41.0L / 259200, -607.0L / 29937600},
        {19.0L / 24, -19.0L / 60, 7.0L / 80, -47.0L / 2520, 131.0L / 40320, -29.0L / 60480,
         223.0L / 3628800, -139.0L / 19958400},
        {-5.0L / 24, 13.0L / 120, -1.0L / 30, 19.0L / 2520, -11.0L / 8064, 5.0L / 24192,
         -7.0L / 259200, 31.0L / 9979200},
        {1.0L / 24, -1.0L / 45, 1.0L / 144, -1.0L / 630, 1.0L / 3456, -1.0L / 22680,
         1.0L / 172800, -1.0L / 1496880},
    }},
}};

// Taylor coefficients of d0 and d2, lowest power nu^0 first.
constexpr SeriesRow kD0Series{11.0L / 60,          -61.0L / 6300,          11.0L / 54000,
                              359.0L / 5670000,    -3683.0L / 1190700000,  -123721.0L / 196465500000,
                              1079569.0L / 23575860000000.0L,
                              212154493.0L / 32181048900000000.0L};
constexpr SeriesRow kD2Series{11.0L / 60,          61.0L / 6300,           11.0L / 54000,
                              -359.0L / 5670000,   -3683.0L / 1190700000,  123721.0L / 196465500000,
                              1079569.0L / 23575860000000.0L,
                              -212154493.0L / 32181048900000000.0L};

long double horner(const SeriesRow& coef, long double x) {
    long double acc = 0.0L;
    for (int n = kSeriesTerms - 1; n >= 0; --n) {
        acc = acc * x + coef[n];
    }
    return acc;
}

}  // namespace

SmallStencilTable small_stencil_coefficients_closed(double nu_in) {
    require_positive(nu_in);
    // Extended precision keeps the nu^-3 cancellation under control near the
    // series threshold.
    const long double n = nu_in;
    const long double n2 = n * n;
    const long double n3 = n2 * n;
    const long double e = std::exp(-n);

    SmallStencilTable c{};
    c[0][0] = static_cast<double>((6 - 6 * n + 2 * n2 - (6 - n2) * e) / (6 * n3));
    c[0][1] = static_cast<double>(-(6 - 8 * n + 3 * n2 - (6 - 2 * n - 2 * n2) * e) / (2 * n3));
    c[0][2] = static_cast<double>((6 - 10 * n + 6 * n2 - (6 - 4 * n - n2 + 2 * n3) * e) / (2 * n3));
    c[0][3] = static_cast<double>(-(6 - 12 * n + 11 * n2 - 6 * n3 - (6 - 6 * n + 2 * n2) * e) /
                                  (6 * n3));

    c[1][0] = static_cast<double>((6 - n2 - (6 + 6 * n + 2 * n2) * e) / (6 * n3));
    c[1][1] = static_cast<double>(-(6 - 2 * n - 2 * n2 - (6 + 4 * n - n2 - 2 * n3) * e) / (2 * n3));
    c[1][2] = static_cast<double>((6 - 4 * n - n2 + 2 * n3 - (6 + 2 * n - 2 * n2) * e) / (2 * n3));
    c[1][3] = static_cast<double>(-(6 - 6 * n + 2 * n2 - (6 - n2) * e) / (6 * n3));

    c[2][0] = static_cast<double>((6 + 6 * n + 2 * n2 - (6 + 12 * n + 11 * n2 + 6 * n3) * e) /
                                  (6 * n3));
    c[2][1] = static_cast<double>(-(6 + 4 * n - n2 - 2 * n3 - (6 + 10 * n + 6 * n2) * e) / (2 * n3));
    c[2][2] = static_cast<double>((6 + 2 * n - 2 * n2 - (6 + 8 * n + 3 * n2) * e) / (2 * n3));
    c[2][3] = static_cast<double>(-(6 - n2 - (6 + 6 * n + 2 * n2) * e) / (6 * n3));
    return c;
}

SmallStencilTable small_stencil_coefficients_series(double nu) {
    require_positive(nu);
    const long double n = nu;
    SmallStencilTable c{};
    for (int r = 0; r < 3; ++r) {
        for (int j = 0; j < 4; ++j) {
            c[r][j] = static_cast<double>(n * horner(kSmallSeries[r][j], n));
        }
    }
    return c;
}

SmallStencilTable small_stencil_coefficients(double nu) {
    return nu < kSeriesThreshold ? small_stencil_coefficients_series(nu)
                                 : small_stencil_coefficients_closed(nu);
}

std::array<double, 3> linear_weights_closed(double nu_in) {
    require_positive(nu_in);
    const long double n = nu_in;
    const long double n2 = n * n;
    const long double n3 = n2 * n;
    const long double n4 = n2 * n2;
    const long double e = std::exp(-n);

    const long double d0 = (60 - 15 * n2 + 2 * n4 - (60 + 60 * n + 15 * n2 - 5 * n3 - 3 * n4) * e) /
                           (10 * n2 * (6 - 6 * n + 2 * n2 - (6 - n2) * e));
    const long double d2 = (60 - 60 * n + 15 * n2 + 5 * n3 - 3 * n4 - (60 - 15 * n2 + 2 * n4) * e) /
                           (10 * n2 * (6 - n2 - (6 + 6 * n + 2 * n2) * e));
    return {static_cast<double>(d0), static_cast<double>(1 - d0 - d2), static_cast<double>(d2)};
}

std::array<double, 3> linear_weights_series(double nu) {
    require_positive(nu);
    const long double d0 = horner(kD0Series, nu);
    const long double d2 = horner(kD2Series, nu);
    return {static_cast<double>(d0), static_cast<double>(1 - d0 - d2), static_cast<double>(d2)};
}

std::array<double, 3> linear_weights(double nu) {
    return nu < kWeightSeriesThreshold ? linear_weights_series(nu) : linear_weights_closed(nu);
}

std::array<double, 6> linear_coefficients(double nu) {
    const auto small = small_stencil_coefficients(nu);
    const auto d = linear_weights(nu);
    std::array<double, 6> c{};
    for (int r = 0; r < 3; ++r) {
        for (int j = 0; j < 4; ++j) {
            c[r + j] += d[r] * small[r][j];
        }
    }
    return c;
}

std::array<double, 3> smoothness_indicators(StencilWindow w) {
    constexpr double k3 = 781.0 / 720.0;
    constexpr double k2 = 13.0 / 48.0;
    const double last = (w[2] - w[3]) * (w[2] - w[3]);

    const double a0 = -w[0] + 3 * w[1] - 3 * w[2] + w[3];
    const double b0 = w[0] - 5 * w[1] + 7 * w[2] - 3 * w[3];
    const double a1 = -w[1] + 3 * w[2] - 3 * w[3] + w[4];
    const double b1 = w[1] - w[2] - w[3] + w[4];
    const double a2 = -w[2] + 3 * w[3] - 3 * w[4] + w[5];
    // Mirror image of b0 about x_{i-1/2}; annihilates constants and lines.
    const double b2 = -3 * w[2] + 7 * w[3] - 5 * w[4] + w[5];

    return {k3 * a0 * a0 + k2 * b0 * b0 + last, k3 * a1 * a1 + k2 * b1 * b1 + last,
            k3 * a2 * a2 + k2 * b2 * b2 + last};
}

std::array<double, 3> nonlinear_weights(const std::array<double, 3>& si,
                                        const std::array<double, 3>& d, double epsilon) {
    std::array<double, 3> w{};
    double sum = 0.0;
    for (int r = 0; r < 3; ++r) {
        const double s = epsilon + si[r];
        w[r] = d[r] / (s * s);
        sum += w[r];
    }
    for (auto& x : w) {
        x /= sum;
    }
    return w;
}

QuadratureRule::QuadratureRule(double nu_in)
    : nu(nu_in),
      decay(std::exp(-nu_in)),
      small(small_stencil_coefficients(nu_in)),
      d(linear_weights(nu_in)) {
    linear.fill(0.0);
    for (int r = 0; r < 3; ++r) {
        for (int j = 0; j < 4; ++j) {
            linear[r + j] += d[r] * small[r][j];
        }
    }
}

double QuadratureRule::apply_linear(StencilWindow w) const {
    double acc = 0.0;
    for (int j = 0; j < 6; ++j) {
        acc += linear[j] * w[j];
    }
    return acc;
}

WenoIntegral QuadratureRule::apply_weno(StencilWindow w, double epsilon) const {
    std::array<double, 3> candidate{};
    for (int r = 0; r < 3; ++r) {
        candidate[r] = small[r][0] * w[r] + small[r][1] * w[r + 1] + small[r][2] * w[r + 2] +
                       small[r][3] * w[r + 3];
    }
    const auto si = smoothness_indicators(w);
    const auto omega = nonlinear_weights(si, d, epsilon);
    return {omega[0] * candidate[0] + omega[1] * candidate[1] + omega[2] * candidate[2], si[0],
            si[2]};
}

WenoIntegral weno_local_integral(StencilWindow w, double nu) {
    return QuadratureRule(nu).apply_weno(w);
}

}  // namespace sconv
