#include "sconv/kernel.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace sconv {

namespace {

// Node index for stencil access outside [0, N].
inline std::size_t extend_index(long j, long n_cells, Boundary bc) {
    if (bc == Boundary::Periodic) {
        long m = j % n_cells;
        if (m < 0) m += n_cells;
        return static_cast<std::size_t>(m);
    }
    if (j < 0) return 0;
    if (j > n_cells) return static_cast<std::size_t>(n_cells);
    return static_cast<std::size_t>(j);
}

void require_mu(double mu) {
    if (!(mu < 1.0) || mu < 0.0) {
        throw std::invalid_argument("closure: mu must lie in [0, 1)");
    }
}

void require_same_size(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw std::invalid_argument(std::string(what) + ": length mismatch");
    }
}

}  // namespace

KernelParams make_kernel_params(double alpha, const Grid1D& grid) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw std::invalid_argument("kernel: alpha must be positive and finite");
    }
    KernelParams p;
    p.alpha = alpha;
    p.nu = alpha * grid.dx;
    p.mu = std::exp(-alpha * grid.length());
    require_mu(p.mu);
    return p;
}

void local_integrals(std::span<const double> v, const QuadratureRule& rule, Side side,
                     Quadrature mode, Boundary bc, std::span<double> J, SmoothnessData* si) {
    if (side == Side::Zero) {
        throw std::invalid_argument("local_integrals: side must be Left or Right");
    }
    const std::size_t n_nodes = v.size();
    if (n_nodes < static_cast<std::size_t>(kMinCells) + 1) {
        throw std::invalid_argument("local_integrals: need at least 7 nodes");
    }
    require_same_size(J.size(), n_nodes, "local_integrals");
    const long n_cells = static_cast<long>(n_nodes) - 1;
    const bool weno = mode == Quadrature::Weno5;
    if (si != nullptr) {
        si->si0.assign(n_nodes, 0.0);
        si->si2.assign(n_nodes, 0.0);
    }

    std::array<double, 6> buf{};
    for (long i = 0; i <= n_cells; ++i) {
        const double* window = buf.data();
        if (side == Side::Left) {
            if (i >= 3 && i + 2 <= n_cells) {
                window = v.data() + (i - 3);
            } else {
                for (int j = 0; j < 6; ++j) buf[j] = v[extend_index(i - 3 + j, n_cells, bc)];
            }
        } else {
            for (int j = 0; j < 6; ++j) buf[j] = v[extend_index(i + 3 - j, n_cells, bc)];
        }
        const StencilWindow stencil(window, 6);

        if (weno) {
            const WenoIntegral w = rule.apply_weno(stencil);
            J[i] = w.value;
            if (si != nullptr) {
                si->si0[i] = w.si0;
                si->si2[i] = w.si2;
            }
        } else {
            J[i] = rule.apply_linear(stencil);
        }
    }
    if (side == Side::Left) {
        J[0] = 0.0;
    } else {
        J[n_cells] = 0.0;
    }
}

std::vector<double> local_integrals(std::span<const double> v, const KernelParams& params,
                                    Side side, Quadrature mode, Boundary bc) {
    std::vector<double> J(v.size());
    local_integrals(v, QuadratureRule(params.nu), side, mode, bc, J);
    return J;
}

void sweep_left(std::span<const double> J, double decay, std::span<double> I) {
    require_same_size(J.size(), I.size(), "sweep_left");
    if (I.empty()) return;
    I[0] = 0.0;
    for (std::size_t i = 1; i < I.size(); ++i) {
        I[i] = I[i - 1] * decay + J[i];
    }
}

std::vector<double> sweep_left(std::span<const double> J, const KernelParams& params) {
    std::vector<double> I(J.size());
    sweep_left(J, std::exp(-params.nu), I);
    return I;
}

void sweep_right(std::span<const double> J, double decay, std::span<double> I) {
    require_same_size(J.size(), I.size(), "sweep_right");
    if (I.empty()) return;
    const std::size_t n = I.size() - 1;
    I[n] = 0.0;
    for (std::size_t i = n; i-- > 0;) {
        I[i] = I[i + 1] * decay + J[i];
    }
}

std::vector<double> sweep_right(std::span<const double> J, const KernelParams& params) {
    std::vector<double> I(J.size());
    sweep_right(J, std::exp(-params.nu), I);
    return I;
}

std::vector<double> compose_I0(std::span<const double> IL, std::span<const double> IR) {
    require_same_size(IL.size(), IR.size(), "compose_I0");
    std::vector<double> out(IL.size());
    for (std::size_t i = 0; i < IL.size(); ++i) {
        out[i] = 0.5 * (IL[i] + IR[i]);
    }
    return out;
}

Closure periodic_closure(Side side, double I_at_a, double I_at_b, double mu) {
    require_mu(mu);
    const double scale = 1.0 / (1.0 - mu);
    switch (side) {
        case Side::Left:
            return {I_at_b * scale, 0.0};
        case Side::Right:
            return {0.0, I_at_a * scale};
        case Side::Zero:
            return {I_at_b * scale, I_at_a * scale};
    }
    return {};
}

Closure homogeneous_zero_closure(double v_a, double v_b, double I0_a, double I0_b, double mu) {
    require_mu(mu);
    const double det = 1.0 - mu * mu;
    return {(mu * (I0_b - v_b) - (I0_a - v_a)) / det, (mu * (I0_a - v_a) - (I0_b - v_b)) / det};
}

Closure homogeneous_coupled_closure(double v1_a, double v1_b, double v2_a, double v2_b,
                                    double IL1_b, double IR2_a, double mu) {
    require_mu(mu);
    const double det = 1.0 - mu * mu;
    const double at_b = v2_b - v1_b + IL1_b;
    const double at_a = v2_a - v1_a - IR2_a;
    return {(mu * at_b - at_a) / det, (at_b - mu * at_a) / det};
}

Convolver::Convolver(const Grid1D& grid, Boundary bc, double alpha)
    : bc_(bc),
      n_nodes_(grid.size()),
      params_(make_kernel_params(alpha, grid)),
      rule_(params_.nu),
      decay_from_a_(n_nodes_),
      decay_from_b_(n_nodes_),
      J_(n_nodes_),
      IL_(n_nodes_),
      IR_(n_nodes_) {
    const long n_cells = static_cast<long>(n_nodes_) - 1;
    for (long i = 0; i <= n_cells; ++i) {
        decay_from_a_[i] = std::exp(-params_.nu * static_cast<double>(i));
        decay_from_b_[i] = std::exp(-params_.nu * static_cast<double>(n_cells - i));
    }
}

void Convolver::convolve(Side side, std::span<const double> v, Quadrature mode,
                         std::span<double> out, SmoothnessData* si) {
    require_same_size(v.size(), n_nodes_, "convolve");
    require_same_size(out.size(), n_nodes_, "convolve");
    switch (side) {
        case Side::Left:
            local_integrals(v, rule_, Side::Left, mode, bc_, J_, si);
            sweep_left(J_, rule_.decay, out);
            break;
        case Side::Right:
            local_integrals(v, rule_, Side::Right, mode, bc_, J_, si);
            sweep_right(J_, rule_.decay, out);
            break;
        case Side::Zero:
            local_integrals(v, rule_, Side::Left, mode, bc_, J_, si);
            sweep_left(J_, rule_.decay, IL_);
            local_integrals(v, rule_, Side::Right, mode, bc_, J_);
            sweep_right(J_, rule_.decay, IR_);
            for (std::size_t i = 0; i < n_nodes_; ++i) {
                out[i] = 0.5 * (IL_[i] + IR_[i]);
            }
            break;
    }
}

void Convolver::add_closure(const Closure& closure, std::span<double> out) const {
    for (std::size_t i = 0; i < n_nodes_; ++i) {
        out[i] += closure.A * decay_from_a_[i] + closure.B * decay_from_b_[i];
    }
}

void Convolver::inverse(Side side, std::span<const double> v, Quadrature mode,
                        std::span<double> out, SmoothnessData* si) {
    convolve(side, v, mode, out, si);
    const std::size_t last = n_nodes_ - 1;
    const double mu = params_.mu;
    Closure closure;
    if (bc_ == Boundary::Periodic) {
        closure = periodic_closure(side, out[0], out[last], mu);
    } else {
        switch (side) {
            case Side::Zero:
                closure = homogeneous_zero_closure(v[0], v[last], out[0], out[last], mu);
                break;
            case Side::Left:
                closure = homogeneous_coupled_closure(v[0], v[last], 0.0, 0.0, out[last], 0.0, mu);
                closure.B = 0.0;
                break;
            case Side::Right:
                closure = homogeneous_coupled_closure(0.0, 0.0, v[0], v[last], 0.0, out[0], mu);
                closure.A = 0.0;
                break;
        }
    }
    add_closure(closure, out);
}

void Convolver::apply_D(Side side, std::span<const double> v, Quadrature mode,
                        std::span<double> out, SmoothnessData* si) {
    inverse(side, v, mode, out, si);
    for (std::size_t i = 0; i < n_nodes_; ++i) {
        out[i] = v[i] - out[i];
    }
}

void Convolver::apply_D_coupled(std::span<const double> v1, std::span<const double> v2,
                                Quadrature mode, std::span<double> out1, std::span<double> out2,
                                SmoothnessData* si1, SmoothnessData* si2) {
    if (bc_ != Boundary::Homogeneous) {
        throw std::logic_error("apply_D_coupled: joint closure is only defined for the "
                               "homogeneous regime");
    }
    require_same_size(v1.size(), n_nodes_, "apply_D_coupled");
    require_same_size(v2.size(), n_nodes_, "apply_D_coupled");
    convolve(Side::Left, v1, mode, out1, si1);
    convolve(Side::Right, v2, mode, out2, si2);
    const std::size_t last = n_nodes_ - 1;
    const Closure c = homogeneous_coupled_closure(v1[0], v1[last], v2[0], v2[last], out1[last],
                                                  out2[0], params_.mu);
    for (std::size_t i = 0; i < n_nodes_; ++i) {
        out1[i] = v1[i] - (out1[i] + c.A * decay_from_a_[i]);
        out2[i] = v2[i] - (out2[i] + c.B * decay_from_b_[i]);
    }
}

void Convolver::power_chain(Side side, std::span<const double> v, int k, Quadrature first_mode,
                            PowerChain& out) {
    if (k < 1) {
        throw std::invalid_argument("power_chain: k must be positive");
    }
    out.powers.resize(static_cast<std::size_t>(k));
    for (auto& p : out.powers) p.resize(n_nodes_);
    apply_D(side, v, first_mode, out.powers[0],
            first_mode == Quadrature::Weno5 ? &out.smoothness : nullptr);
    if (first_mode != Quadrature::Weno5) {
        out.smoothness.si0.clear();
        out.smoothness.si2.clear();
    }
    for (int p = 1; p < k; ++p) {
        apply_D(side, out.powers[p - 1], Quadrature::Linear6, out.powers[p]);
    }
}

void Convolver::power_chain_coupled(std::span<const double> v1, std::span<const double> v2, int k,
                                    Quadrature first_mode, PowerChain& left, PowerChain& right) {
    if (k < 1) {
        throw std::invalid_argument("power_chain_coupled: k must be positive");
    }
    for (PowerChain* c : {&left, &right}) {
        c->powers.resize(static_cast<std::size_t>(k));
        for (auto& p : c->powers) p.resize(n_nodes_);
    }
    const bool weno = first_mode == Quadrature::Weno5;
    apply_D_coupled(v1, v2, first_mode, left.powers[0], right.powers[0],
                    weno ? &left.smoothness : nullptr, weno ? &right.smoothness : nullptr);
    if (!weno) {
        left.smoothness = {};
        right.smoothness = {};
    }
    for (int p = 1; p < k; ++p) {
        apply_D_coupled(left.powers[p - 1], right.powers[p - 1], Quadrature::Linear6,
                        left.powers[p], right.powers[p]);
    }
}

std::vector<double> apply_L_inverse(Side side, std::span<const double> v, const Grid1D& grid,
                                    double alpha, Boundary bc, Quadrature mode) {
    Convolver conv(grid, bc, alpha);
    std::vector<double> out(v.size());
    conv.inverse(side, v, mode, out);
    return out;
}

std::vector<double> apply_D(Side side, std::span<const double> v, const Grid1D& grid, double alpha,
                            Boundary bc, Quadrature mode) {
    Convolver conv(grid, bc, alpha);
    std::vector<double> out(v.size());
    conv.apply_D(side, v, mode, out);
    return out;
}

std::vector<std::vector<double>> apply_D_power_chain(Side side, std::span<const double> v,
                                                     const Grid1D& grid, double alpha, Boundary bc,
                                                     int k, Quadrature first_mode) {
    Convolver conv(grid, bc, alpha);
    PowerChain chain;
    conv.power_chain(side, v, k, first_mode, chain);
    return std::move(chain.powers);
}

}  // namespace sconv
