#include "sconv/timestep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "sconv/operator.hpp"

namespace sconv {

namespace {

void check_finite(std::span<const double> u, int stage) {
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (!std::isfinite(u[i])) {
            throw std::runtime_error("rk_step: non-finite value at node " + std::to_string(i) +
                                     " after stage " + std::to_string(stage) +
                                     " (scheme unstable for this step)");
        }
    }
}

// out = a * base + b * (s + dt * H)
void combine(std::span<const double> base, std::span<const double> s, std::span<const double> H,
             double dt, double a, double b, std::span<double> out) {
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = a * base[i] + b * (s[i] + dt * H[i]);
    }
}

}  // namespace

void rk_step(std::span<double> u, double dt, int k, const StageOperator& op, RkWorkspace& ws) {
    if (!(dt > 0.0)) {
        throw std::invalid_argument("rk_step: dt must be positive");
    }
    if (k < 1 || k > 3) {
        throw std::invalid_argument("rk_step: order must be 1, 2 or 3");
    }
    const std::size_t n = u.size();
    ws.stage.resize(n);
    ws.next.resize(n);
    ws.H.resize(n);

    op(u, ws.H);
    if (k == 1) {
        combine(u, u, ws.H, dt, 0.0, 1.0, ws.next);
        check_finite(ws.next, 1);
        std::copy(ws.next.begin(), ws.next.end(), u.begin());
        return;
    }

    combine(u, u, ws.H, dt, 0.0, 1.0, ws.stage);
    check_finite(ws.stage, 1);
    op(ws.stage, ws.H);
    if (k == 2) {
        combine(u, ws.stage, ws.H, dt, 0.5, 0.5, ws.next);
        check_finite(ws.next, 2);
        std::copy(ws.next.begin(), ws.next.end(), u.begin());
        return;
    }

    combine(u, ws.stage, ws.H, dt, 0.75, 0.25, ws.next);
    check_finite(ws.next, 2);
    op(ws.next, ws.H);
    combine(u, ws.next, ws.H, dt, 1.0 / 3.0, 2.0 / 3.0, ws.stage);
    check_finite(ws.stage, 3);
    std::copy(ws.stage.begin(), ws.stage.end(), u.begin());
}

SolutionField rk_step(const SolutionField& u, double dt, int k, const StageOperator& op) {
    SolutionField out = u;
    RkWorkspace ws;
    rk_step(out.values, dt, k, op, ws);
    out.time = u.time + dt;
    return out;
}

AdvanceResult integrate(const SolutionField& u0, double T, int order,
                        const std::function<double(std::span<const double>)>& step_size,
                        const std::function<StageOperator(std::span<const double>, double)>& make_op,
                        std::span<const double> snapshot_times) {
    if (T < u0.time) {
        throw std::invalid_argument("advance: final time precedes the initial time");
    }
    std::vector<double> targets;
    for (double t : snapshot_times) {
        if (t > u0.time && t < T) targets.push_back(t);
    }
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    targets.push_back(T);

    AdvanceResult result;
    result.solution = u0;
    RkWorkspace ws;
    double t = u0.time;
    std::size_t next_target = 0;
    while (next_target < targets.size()) {
        const double target = targets[next_target];
        if (t >= target) {
            if (target < T) result.snapshots.push_back({result.solution.values, target});
            ++next_target;
            continue;
        }
        double dt = step_size(result.solution.values);
        bool hit = false;
        if (t + dt * (1.0 + 1e-9) >= target) {
            dt = target - t;
            hit = true;
        }
        const StageOperator op = make_op(result.solution.values, dt);
        rk_step(result.solution.values, dt, order, op, ws);
        ++result.steps;
        t = hit ? target : t + dt;
        result.solution.time = t;
    }
    result.solution.time = T;
    return result;
}

AdvanceResult advance(const SolutionField& u0, double T, const Grid1D& grid,
                      const ProblemSpec& problem, const SchemeConfig& config,
                      std::span<const double> snapshot_times) {
    config.validate();
    if (u0.values.size() != grid.size()) {
        throw std::invalid_argument("advance: initial field does not match grid");
    }
    auto ws = std::make_shared<OperatorWorkspace>();
    auto bounds = std::make_shared<WaveBounds>();
    const AxisTerms terms{problem.flux ? &problem.flux : nullptr,
                          problem.diffusion ? &problem.diffusion : nullptr, problem.bc};

    auto step_size = [&](std::span<const double> u) {
        *bounds = compute_bounds(problem, u);
        // Nothing moves: H vanishes, so a single step reaches the target.
        if (!bounds->has_advection() && !bounds->has_diffusion()) {
            return std::numeric_limits<double>::infinity();
        }
        return compute_dt(config, *bounds, grid);
    };
    auto make_op = [&](std::span<const double>, double dt) -> StageOperator {
        const WaveBounds frozen = *bounds;
        return [&grid, &config, terms, frozen, dt, ws](std::span<const double> u,
                                                       std::span<double> H) {
            build_H_line(u, grid, terms, config, frozen, dt, H, *ws);
        };
    };
    return integrate(u0, T, config.order, step_size, make_op, snapshot_times);
}

}  // namespace sconv
