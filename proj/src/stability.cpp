#include "sconv/stability.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "sconv/quadrature.hpp"
#include "sconv/timestep.hpp"

namespace sconv {

namespace {

using cplx = std::complex<double>;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct FullSymbols {
    cplx left;
    cplx right;
};

FullSymbols fully_discrete(double kdx, double nu) {
    const auto c = linear_coefficients(nu);
    const double decay = std::exp(-nu);
    cplx num_left = 0.0;
    cplx num_right = 0.0;
    for (int j = 0; j < 6; ++j) {
        const int r = j - 3;
        num_left += c[j] * std::polar(1.0, r * kdx);
        num_right += c[j] * std::polar(1.0, -r * kdx);
    }
    const cplx left = 1.0 - num_left / (1.0 - decay * std::polar(1.0, -kdx));
    const cplx right = 1.0 - num_right / (1.0 - decay * std::polar(1.0, kdx));
    return {left, right};
}

void check_query(double kappa_dx, double nu) {
    if (!(kappa_dx >= 0.0 && kappa_dx <= kTwoPi + 1e-12)) {
        throw std::invalid_argument("symbol_D: kappa_dx must lie in [0, 2 pi]");
    }
    if (!(nu > 0.0)) {
        throw std::invalid_argument("symbol_D: nu must be positive");
    }
}

double nu_for(EquationKind kind, double beta, double step_ratio) {
    return kind == EquationKind::Advection ? beta / step_ratio : std::sqrt(beta / step_ratio);
}

}  // namespace

std::complex<double> symbol_D(const SymbolQuery& q) {
    check_query(q.kappa_dx, q.nu);
    if (q.mode == SymbolMode::SemiDiscrete) {
        const double theta = q.kappa_dx / q.nu;
        const cplx it(0.0, theta);
        switch (q.side) {
            case Side::Left: return it / (1.0 + it);
            case Side::Right: return -it / (1.0 - it);
            case Side::Zero: return theta * theta / (1.0 + theta * theta);
        }
    }
    const FullSymbols s = fully_discrete(q.kappa_dx, q.nu);
    switch (q.side) {
        case Side::Left: return s.left;
        case Side::Right: return s.right;
        case Side::Zero: return 0.5 * (s.left + s.right);
    }
    return 0.0;
}

std::complex<double> amplification(int k, EquationKind kind, double beta, double kappa_dx,
                                   double step_ratio, SymbolMode mode, bool cross_term) {
    if (k < 1 || k > 3) throw std::invalid_argument("amplification: order must be 1, 2 or 3");
    if (!(beta > 0.0) || !(step_ratio > 0.0)) {
        throw std::invalid_argument("amplification: beta and step_ratio must be positive");
    }
    const double nu = nu_for(kind, beta, step_ratio);
    const Side side = kind == EquationKind::Advection ? Side::Left : Side::Zero;
    const cplx D = symbol_D({side, kappa_dx, nu, mode});

    cplx sum = 0.0;
    cplx power = 1.0;
    for (int p = 1; p <= k; ++p) {
        power *= D;
        sum += power;
    }
    cplx z = -beta * sum;
    if (kind == EquationKind::Advection && k == 3 && cross_term) {
        const cplx D0 = symbol_D({Side::Zero, kappa_dx, nu, mode});
        z += beta * D0 * D * D;
    }
    return rk_multiplier(k, z);
}

std::vector<double> ScanGrid::kappa_values() const {
    std::vector<double> out(n_kappa);
    for (int j = 0; j < n_kappa; ++j) out[j] = kTwoPi * j / (n_kappa - 1);
    return out;
}

std::vector<double> ScanGrid::ratio_values() const {
    std::vector<double> out(n_ratio);
    const double lo = std::log(ratio_min);
    const double hi = std::log(ratio_max);
    for (int r = 0; r < n_ratio; ++r) out[r] = std::exp(lo + (hi - lo) * r / (n_ratio - 1));
    return out;
}

namespace {

void check_grid(const ScanGrid& grid) {
    if (grid.n_kappa < 2 || grid.n_ratio < 2) {
        throw std::invalid_argument("stability scan: each axis needs at least 2 points");
    }
    if (!(grid.ratio_min > 0.0) || !(grid.ratio_max > grid.ratio_min)) {
        throw std::invalid_argument("stability scan: invalid step-ratio range");
    }
}

}  // namespace

double max_amplification(int k, EquationKind kind, double beta, SymbolMode mode,
                         bool cross_term, const ScanGrid& grid) {
    check_grid(grid);
    const auto kappas = grid.kappa_values();
    const auto ratios = grid.ratio_values();
    double worst = 0.0;
    for (double r : ratios) {
        for (double kdx : kappas) {
            worst = std::max(worst, std::abs(amplification(k, kind, beta, kdx, r, mode, cross_term)));
        }
    }
    return worst;
}

double scan_beta_max(int k, EquationKind kind, SymbolMode mode, bool cross_term,
                     const ScanGrid& grid, double resolution) {
    auto stable = [&](double beta) {
        return max_amplification(k, kind, beta, mode, cross_term, grid) <=
               1.0 + kStabilityTolerance;
    };
    double lo = 0.0;
    double hi = 4.0;
    if (stable(hi)) return hi;
    while (hi - lo > resolution) {
        const double mid = 0.5 * (lo + hi);
        if (mid > 0.0 && stable(mid)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

StabilityReport stability_report(int k, EquationKind kind, double beta, SymbolMode mode,
                                 bool cross_term, const ScanGrid& grid, bool estimate_beta_max) {
    check_grid(grid);
    StabilityReport rep;
    rep.kind = kind;
    rep.k = k;
    rep.beta = beta;
    rep.mode = mode;
    rep.cross_term = cross_term;
    rep.kappa_dx = grid.kappa_values();
    rep.step_ratio = grid.ratio_values();
    rep.abs_lambda.reserve(rep.kappa_dx.size() * rep.step_ratio.size());
    for (double r : rep.step_ratio) {
        for (double kdx : rep.kappa_dx) {
            const double a = std::abs(amplification(k, kind, beta, kdx, r, mode, cross_term));
            rep.abs_lambda.push_back(a);
            rep.max_abs_lambda = std::max(rep.max_abs_lambda, a);
        }
    }
    rep.beta_max_estimate = estimate_beta_max ? scan_beta_max(k, kind, mode, cross_term, grid)
                                              : std::numeric_limits<double>::quiet_NaN();
    return rep;
}

void export_contours(const StabilityReport& report, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("export_contours: cannot open " + path);
    out << std::setprecision(17);
    out << "kappa_dx,step_ratio,abs_lambda\n";
    const std::size_t nk = report.kappa_dx.size();
    for (std::size_t r = 0; r < report.step_ratio.size(); ++r) {
        for (std::size_t j = 0; j < nk; ++j) {
            out << report.kappa_dx[j] << ',' << report.step_ratio[r] << ','
                << report.abs_lambda[r * nk + j] << '\n';
        }
    }
    if (!out) throw std::runtime_error("export_contours: write failed for " + path);
}

}  // namespace sconv
