#pragma once

#include <span>
#include <vector>

#include "sconv/core.hpp"
#include "sconv/quadrature.hpp"

namespace sconv {

/// Selects I^L / D_L (left-going kernel), I^R / D_R, or the symmetric I^0 / D_0.
enum class Side { Left, Right, Zero };

/// One convolution family: alpha, nu = alpha * dx, mu = exp(-alpha (b - a)).
struct KernelParams {
    double alpha = 0.0;
    double nu = 0.0;
    double mu = 0.0;
};

/// Throws std::invalid_argument unless alpha > 0 and 0 < mu < 1 (mu may
/// underflow to zero for very large alpha, which is accepted).
KernelParams make_kernel_params(double alpha, const Grid1D& grid);

/// Per-node smoothness indicators captured by the WENO pass.
struct SmoothnessData {
    std::vector<double> si0;
    std::vector<double> si2;
};

/// Exponentially weighted cell integrals J_i for side Left or Right.
///
/// Left: J_i covers [x_{i-1}, x_i], J_0 = 0. Right: J_i covers [x_i, x_{i+1}],
/// J_N = 0. Stencil indices wrap for periodic data and replicate the boundary
/// value for homogeneous data. When `si` is non-null and mode is Weno5, the
/// SI_0 / SI_2 pair of every node (including the unused end node) is stored.
void local_integrals(std::span<const double> v, const QuadratureRule& rule, Side side,
                     Quadrature mode, Boundary bc, std::span<double> J,
                     SmoothnessData* si = nullptr);

std::vector<double> local_integrals(std::span<const double> v, const KernelParams& params,
                                    Side side, Quadrature mode, Boundary bc);

/// I_0 = 0, I_i = I_{i-1} exp(-nu) + J_i.
void sweep_left(std::span<const double> J, double decay, std::span<double> I);
std::vector<double> sweep_left(std::span<const double> J, const KernelParams& params);

/// I_N = 0, I_i = I_{i+1} exp(-nu) + J_i.
void sweep_right(std::span<const double> J, double decay, std::span<double> I);
std::vector<double> sweep_right(std::span<const double> J, const KernelParams& params);

/// I^0 = (I^L + I^R) / 2. Throws std::invalid_argument on length mismatch.
std::vector<double> compose_I0(std::span<const double> IL, std::span<const double> IR);

/// Boundary closure constants: L^{-1}[v](x) = I(x) + A exp(-alpha (x - a)) + B exp(-alpha (b - x)).
/// Left uses only A, Right only B.
struct Closure {
    double A = 0.0;
    double B = 0.0;
};

/// Periodic closure from the convolution values at a and b.
Closure periodic_closure(Side side, double I_at_a, double I_at_b, double mu);

/// D_0[v](a) = D_0[v](b) = 0.
Closure homogeneous_zero_closure(double v_a, double v_b, double I0_a, double I0_b, double mu);

/// Joint closure D_L[v1] - D_R[v2] = 0 at both ends; returns A = A_L, B = B_R.
Closure homogeneous_coupled_closure(double v1_a, double v1_b, double v2_a, double v2_b,
                                    double IL1_b, double IR2_a, double mu);

/// Powers D^1[v], ..., D^k[v] of one chain, plus the smoothness data of the
/// first (WENO) application.
struct PowerChain {
    std::vector<std::vector<double>> powers;
    SmoothnessData smoothness;
};

/// Convolution engine for one (grid, boundary regime, alpha) family. Owns its
/// scratch buffers; not safe for concurrent use, one instance per thread.
class Convolver {
public:
    Convolver(const Grid1D& grid, Boundary bc, double alpha);

    [[nodiscard]] const KernelParams& params() const { return params_; }
    [[nodiscard]] const QuadratureRule& rule() const { return rule_; }
    [[nodiscard]] Boundary boundary() const { return bc_; }
    [[nodiscard]] std::size_t size() const { return n_nodes_; }

    /// I^L, I^R or I^0 of v at every node.
    void convolve(Side side, std::span<const double> v, Quadrature mode, std::span<double> out,
                  SmoothnessData* si = nullptr);

    /// L^{-1}[v] with the closure of this boundary regime. In the homogeneous
    /// regime a lone Left (Right) inverse is closed against a zero Right
    /// (Left) partner.
    void inverse(Side side, std::span<const double> v, Quadrature mode, std::span<double> out,
                 SmoothnessData* si = nullptr);

    /// D[v] = v - L^{-1}[v].
    void apply_D(Side side, std::span<const double> v, Quadrature mode, std::span<double> out,
                 SmoothnessData* si = nullptr);

    /// Homogeneous joint closure: out1 = D_L[v1], out2 = D_R[v2].
    void apply_D_coupled(std::span<const double> v1, std::span<const double> v2, Quadrature mode,
                         std::span<double> out1, std::span<double> out2,
                         SmoothnessData* si1 = nullptr, SmoothnessData* si2 = nullptr);

    /// D^p[v] for p = 1..k, re-closed at every power. The first application
    /// uses `first_mode`; later powers use the linear six-point rule.
    void power_chain(Side side, std::span<const double> v, int k, Quadrature first_mode,
                     PowerChain& out);

    /// Left chain of v1 and Right chain of v2 closed jointly at every power
    /// (homogeneous regime only).
    void power_chain_coupled(std::span<const double> v1, std::span<const double> v2, int k,
                             Quadrature first_mode, PowerChain& left, PowerChain& right);

private:
    void add_closure(const Closure& closure, std::span<double> out) const;

    Boundary bc_;
    std::size_t n_nodes_;
    KernelParams params_;
    QuadratureRule rule_;
    std::vector<double> decay_from_a_;  // exp(-alpha (x_i - a))
    std::vector<double> decay_from_b_;  // exp(-alpha (b - x_i))
    std::vector<double> J_;
    std::vector<double> IL_;
    std::vector<double> IR_;
};

/// Convenience wrappers building a temporary Convolver.
std::vector<double> apply_L_inverse(Side side, std::span<const double> v, const Grid1D& grid,
                                    double alpha, Boundary bc,
                                    Quadrature mode = Quadrature::Weno5);
std::vector<double> apply_D(Side side, std::span<const double> v, const Grid1D& grid, double alpha,
                            Boundary bc, Quadrature mode = Quadrature::Weno5);
std::vector<std::vector<double>> apply_D_power_chain(Side side, std::span<const double> v,
                                                     const Grid1D& grid, double alpha, Boundary bc,
                                                     int k, Quadrature first_mode = Quadrature::Weno5);

}  // namespace sconv
