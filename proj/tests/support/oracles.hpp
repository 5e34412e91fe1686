#pragma once

// Independent reference computations used by the unit and acceptance tests.
// Nothing here calls into the quadrature or sweep code under test.

#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

using ld = long double;

inline ld simpson_step(const std::function<ld(ld)>& f, ld a, ld b, ld fa, ld fm, ld fb, ld whole,
                       ld tol, int depth) {
    const ld m = 0.5L * (a + b);
    const ld lm = 0.5L * (a + m);
    const ld rm = 0.5L * (m + b);
    const ld flm = f(lm);
    const ld frm = f(rm);
    const ld left = (m - a) / 6.0L * (fa + 4.0L * flm + fm);
    const ld right = (b - m) / 6.0L * (fm + 4.0L * frm + fb);
    const ld diff = left + right - whole;
    if (depth <= 0 || std::fabs(diff) <= 15.0L * tol) return left + right + diff / 15.0L;
    return simpson_step(f, a, m, fa, flm, fm, left, 0.5L * tol, depth - 1) +
           simpson_step(f, m, b, fm, frm, fb, right, 0.5L * tol, depth - 1);
}

/// Adaptive Simpson integration in extended precision.
inline ld integrate(const std::function<ld(ld)>& f, ld a, ld b, ld tol = 1e-19L, int depth = 40) {
    const ld fa = f(a);
    const ld fb = f(b);
    const ld fm = f(0.5L * (a + b));
    const ld whole = (b - a) / 6.0L * (fa + 4.0L * fm + fb);
    return simpson_step(f, a, b, fa, fm, fb, whole, tol, depth);
}

/// alpha * int_{x-dx}^{x} exp(-alpha (x - y)) p(y) dy.
inline ld left_cell_integral(const std::function<ld(ld)>& p, ld alpha, ld x, ld dx) {
    return integrate([&](ld y) { return alpha * std::exp(-alpha * (x - y)) * p(y); }, x - dx, x);
}

/// Polynomial with the given coefficients (constant term first).
struct Poly {
    std::vector<ld> c;
    ld operator()(ld x) const {
        ld r = 0.0L;
        for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
        return r;
    }
};

inline Poly random_poly(int degree, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Poly p;
    for (int d = 0; d <= degree; ++d) p.c.push_back(dist(rng));
    return p;
}

/// Direct O(N^2) evaluation of the discrete left/right convolution sums
///   I^L_i = sum_{j<=i} exp(-nu (i - j)) J^L_j,  I^R_i = sum_{j>=i} exp(-nu (j - i)) J^R_j.
inline std::vector<double> direct_left(const std::vector<double>& J, double nu) {
    std::vector<double> I(J.size(), 0.0);
    for (std::size_t i = 1; i < J.size(); ++i) {
        ld acc = 0.0L;
        for (std::size_t j = 1; j <= i; ++j) acc += std::exp(-(ld)nu * (ld)(i - j)) * (ld)J[j];
        I[i] = static_cast<double>(acc);
    }
    return I;
}

inline std::vector<double> direct_right(const std::vector<double>& J, double nu) {
    const std::size_t n = J.size();
    std::vector<double> I(n, 0.0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        ld acc = 0.0L;
        for (std::size_t j = i; j + 1 < n; ++j) acc += std::exp(-(ld)nu * (ld)(j - i)) * (ld)J[j];
        I[i] = static_cast<double>(acc);
    }
    return I;
}

/// Semi-discrete Fourier symbols: D_L = i t / (1 + i t), D_0 = t^2 / (1 + t^2), t = kappa / alpha.
inline std::complex<double> semi_DL(double t) {
    return std::complex<double>(0.0, t) / std::complex<double>(1.0, t);
}
inline double semi_D0(double t) { return t * t / (1.0 + t * t); }

}  // namespace oracle
