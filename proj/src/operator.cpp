#include "sconv/operator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sconv {

namespace {

constexpr int kAdvectionSlot = 0;
constexpr int kDiffusionSlot = 1;

void evaluate(const ScalarFn& f, std::span<const double> u, std::vector<double>& out) {
    out.resize(u.size());
    std::transform(u.begin(), u.end(), out.begin(), f);
}

}  // namespace

SplitFlux flux_split(const ScalarFn& flux, std::span<const double> u, double c) {
    SplitFlux s;
    s.c = c;
    s.fplus.resize(u.size());
    s.fminus.resize(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double f = flux(u[i]);
        s.fplus[i] = 0.5 * (f + c * u[i]);
        s.fminus[i] = 0.5 * (f - c * u[i]);
    }
    return s;
}

SplitFlux flux_split(const ProblemSpec& problem, std::span<const double> u,
                     const WaveBounds& bounds) {
    return flux_split(problem.flux, u, bounds.c);
}

Convolver& OperatorWorkspace::convolver(int slot, const Grid1D& grid, Boundary bc, double alpha) {
    Cached& c = slots_[slot];
    if (!c.conv || c.alpha != alpha || c.n_nodes != grid.size() || c.a != grid.a ||
        c.b != grid.b || c.bc != bc) {
        c.conv = std::make_unique<Convolver>(grid, bc, alpha);
        c.alpha = alpha;
        c.n_nodes = grid.size();
        c.a = grid.a;
        c.b = grid.b;
        c.bc = bc;
    }
    return *c.conv;
}

void build_H_line(std::span<const double> u, const Grid1D& grid, const AxisTerms& terms,
                  const SchemeConfig& config, const WaveBounds& bounds, double dt,
                  std::span<double> H, OperatorWorkspace& ws) {
    if (!(dt > 0.0)) {
        throw std::invalid_argument("build_H: dt must be positive");
    }
    const std::size_t n = u.size();
    if (n != grid.size() || H.size() != n) {
        throw std::invalid_argument("build_H: field length does not match grid");
    }
    std::fill(H.begin(), H.end(), 0.0);
    const int k = config.order;
    const Quadrature mode = config.quadrature;

    if (bounds.has_advection() && terms.flux != nullptr) {
        const double alpha = config.beta / (bounds.c * dt);
        Convolver& conv = ws.convolver(kAdvectionSlot, grid, terms.bc, alpha);

        ws.split.c = bounds.c;
        ws.split.fplus.resize(n);
        ws.split.fminus.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double f = (*terms.flux)(u[i]);
            ws.split.fplus[i] = 0.5 * (f + bounds.c * u[i]);
            ws.split.fminus[i] = 0.5 * (f - bounds.c * u[i]);
        }

        if (terms.bc == Boundary::Periodic) {
            conv.power_chain(Side::Left, ws.split.fplus, k, mode, ws.left);
            conv.power_chain(Side::Right, ws.split.fminus, k, mode, ws.right);
        } else {
            conv.power_chain_coupled(ws.split.fplus, ws.split.fminus, k, mode, ws.left, ws.right);
        }

        const bool filtered = config.filter_enabled && k >= 2 && mode == Quadrature::Weno5;
        FilterField sigma;
        if (filtered) {
            sigma = sigma_fields(xi_field(ws.left.smoothness), xi_field(ws.right.smoothness),
                                 terms.bc);
        }

        for (std::size_t i = 0; i < n; ++i) {
            double acc_left = ws.left.powers[0][i];
            double acc_right = ws.right.powers[0][i];
            double wl = 1.0;
            double wr = 1.0;
            for (int p = 1; p < k; ++p) {
                if (filtered) {
                    wl *= sigma.sigma_left[i];
                    wr *= sigma.sigma_right[i];
                    acc_left += wl * ws.left.powers[p][i];
                    acc_right += wr * ws.right.powers[p][i];
                } else {
                    acc_left += ws.left.powers[p][i];
                    acc_right += ws.right.powers[p][i];
                }
            }
            H[i] += alpha * (acc_right - acc_left);
        }

        if (k == 3 && config.cross_term_k3) {
            // D_L^2 of f- as printed; the outer D_0 shares alpha_L.
            conv.power_chain(Side::Left, ws.split.fminus, 2, mode, ws.cross);
            ws.scratch.resize(n);
            for (std::size_t i = 0; i < n; ++i) {
                ws.scratch[i] = ws.left.powers[1][i] - ws.cross.powers[1][i];
            }
            std::vector<double>& outer = ws.cross.powers[0];
            conv.apply_D(Side::Zero, ws.scratch, Quadrature::Linear6, outer);
            for (std::size_t i = 0; i < n; ++i) {
                H[i] += alpha * outer[i];
            }
        }
    }

    if (bounds.has_diffusion() && terms.diffusion != nullptr) {
        const double alpha_sq = config.beta / (bounds.b_diff * dt);
        Convolver& conv = ws.convolver(kDiffusionSlot, grid, terms.bc, std::sqrt(alpha_sq));
        evaluate(*terms.diffusion, u, ws.g_values);
        conv.power_chain(Side::Zero, ws.g_values, k, mode, ws.zero);
        for (std::size_t i = 0; i < n; ++i) {
            double acc = ws.zero.powers[0][i];
            for (int p = 1; p < k; ++p) {
                acc += ws.zero.powers[p][i];
            }
            H[i] -= alpha_sq * acc;
        }
    }
}

std::vector<double> build_H(std::span<const double> u, const Grid1D& grid,
                            const ProblemSpec& problem, const SchemeConfig& config,
                            const WaveBounds& bounds, double dt) {
    OperatorWorkspace ws;
    std::vector<double> H(u.size());
    const AxisTerms terms{problem.flux ? &problem.flux : nullptr,
                          problem.diffusion ? &problem.diffusion : nullptr, problem.bc};
    build_H_line(u, grid, terms, config, bounds, dt, H, ws);
    return H;
}

}  // namespace sconv
