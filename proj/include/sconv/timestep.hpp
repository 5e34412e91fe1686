#pragma once

#include <functional>
#include <span>
#include <vector>

#include "sconv/core.hpp"

namespace sconv {

/// Evaluates H at a stage field. Time step and wave bounds are frozen for the
/// whole step, so the callable captures them.
using StageOperator = std::function<void(std::span<const double> u, std::span<double> H)>;

/// One-step multiplier of the k-th order SSP-RK scheme applied to u' = (z/dt) u:
/// 1 + z, 1 + z + z^2/2, 1 + z + z^2/2 + z^3/6.
template <class T>
T rk_multiplier(int k, T z) {
    T r = T(1) + z;
    if (k >= 2) r += z * z / T(2);
    if (k >= 3) r += z * z * z / T(6);
    return r;
}

/// Stage buffers for rk_step.
struct RkWorkspace {
    std::vector<double> stage;
    std::vector<double> next;
    std::vector<double> H;
};

/// Advances u in place by one SSP-RK step of order k (forward Euler, two-stage
/// or three-stage Shu-Osher form). Throws std::runtime_error if a stage
/// produces a non-finite value.
void rk_step(std::span<double> u, double dt, int k, const StageOperator& op, RkWorkspace& ws);

SolutionField rk_step(const SolutionField& u, double dt, int k, const StageOperator& op);

struct AdvanceResult {
    SolutionField solution;
    std::vector<SolutionField> snapshots;
    std::size_t steps = 0;
};

/// Repeats (compute_bounds, compute_dt, rk_step) from u0.time to T. Steps are
/// truncated to land exactly on every requested snapshot time and on T.
AdvanceResult advance(const SolutionField& u0, double T, const Grid1D& grid,
                      const ProblemSpec& problem, const SchemeConfig& config,
                      std::span<const double> snapshot_times = {});

/// Shared time loop: `step_size` maps the current field to the unclipped dt,
/// `make_op` builds the frozen stage operator for (field, dt).
AdvanceResult integrate(const SolutionField& u0, double T, int order,
                        const std::function<double(std::span<const double>)>& step_size,
                        const std::function<StageOperator(std::span<const double>, double)>& make_op,
                        std::span<const double> snapshot_times = {});

}  // namespace sconv
