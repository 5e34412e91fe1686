#include "sconv/solver2d.hpp"

#include <limits>
#include <memory>
#include <stdexcept>

#ifdef SCONV_HAVE_OPENMP
#include <omp.h>
#endif

namespace sconv {

namespace {

const ScalarFn* maybe(const ScalarFn& f) { return f ? &f : nullptr; }

int resolve_threads(int requested) {
#ifdef SCONV_HAVE_OPENMP
    return requested > 0 ? requested : omp_get_max_threads();
#else
    (void)requested;
    return 1;
#endif
}

int thread_id() {
#ifdef SCONV_HAVE_OPENMP
    return omp_get_thread_num();
#else
    return 0;
#endif
}

// H[lines][len] += operator applied to each contiguous line of u.
void sweep_lines(std::span<const double> u, std::size_t lines, std::size_t len,
                 const Grid1D& grid, const AxisTerms& terms, const SchemeConfig& config,
                 const WaveBounds& bounds, double dt, std::span<double> H,
                 std::vector<OperatorWorkspace>& workspaces, int threads) {
    std::exception_ptr failure;
    const long n = static_cast<long>(lines);
#ifdef SCONV_HAVE_OPENMP
#pragma omp parallel num_threads(threads)
#endif
    {
        std::vector<double> line_H(len);
        OperatorWorkspace& ws = workspaces[thread_id()];
#ifdef SCONV_HAVE_OPENMP
#pragma omp for schedule(static)
#endif
        for (long j = 0; j < n; ++j) {
            try {
                build_H_line(u.subspan(j * len, len), grid, terms, config, bounds, dt, line_H, ws);
                double* dst = H.data() + j * len;
                for (std::size_t i = 0; i < len; ++i) dst[i] += line_H[i];
            } catch (...) {
#ifdef SCONV_HAVE_OPENMP
#pragma omp critical
#endif
                failure = std::current_exception();
            }
        }
    }
    (void)threads;
    if (failure) std::rethrow_exception(failure);
}

void transpose(std::span<const double> in, std::size_t nx, std::size_t ny, std::span<double> out) {
    for (std::size_t j = 0; j < ny; ++j) {
        for (std::size_t i = 0; i < nx; ++i) out[i * ny + j] = in[j * nx + i];
    }
}

}  // namespace

Grid2D build_grid_2d(double ax, double bx, int nx_cells, double ay, double by, int ny_cells) {
    return {build_grid_1d(ax, bx, nx_cells), build_grid_1d(ay, by, ny_cells)};
}

Field2D sample_2d(const std::function<double(double, double)>& f, const Grid2D& grid) {
    Field2D out;
    out.nx = grid.gx.size();
    out.ny = grid.gy.size();
    out.values.resize(out.nx * out.ny);
    for (std::size_t j = 0; j < out.ny; ++j) {
        for (std::size_t i = 0; i < out.nx; ++i) {
            out.at(i, j) = f(grid.gx.nodes[i], grid.gy.nodes[j]);
        }
    }
    return out;
}

WaveBounds2D compute_bounds_2d(const ProblemSpec2D& problem, std::span<const double> u) {
    return {compute_bounds(problem.f1_deriv, problem.g1_deriv, u),
            compute_bounds(problem.f2_deriv, problem.g2_deriv, u)};
}

void build_H_2d(std::span<const double> u, const Grid2D& grid, const ProblemSpec2D& problem,
                const SchemeConfig& config, const WaveBounds2D& bounds, double dt,
                std::span<double> H, Workspace2D& ws, int threads) {
    const std::size_t nx = grid.gx.size();
    const std::size_t ny = grid.gy.size();
    if (u.size() != nx * ny || H.size() != nx * ny) {
        throw std::invalid_argument("build_H_2d: field size does not match grid");
    }
    const int n_threads = resolve_threads(threads);
    if (ws.per_thread.size() < static_cast<std::size_t>(n_threads)) {
        ws.per_thread.resize(n_threads);
    }
    std::fill(H.begin(), H.end(), 0.0);

    const AxisTerms x_terms{maybe(problem.f1), maybe(problem.g1), problem.bc_x};
    const AxisTerms y_terms{maybe(problem.f2), maybe(problem.g2), problem.bc_y};
    const bool x_active = bounds.x.has_advection() || bounds.x.has_diffusion();
    const bool y_active = bounds.y.has_advection() || bounds.y.has_diffusion();

    if (x_active) {
        sweep_lines(u, ny, nx, grid.gx, x_terms, config, bounds.x, dt, H, ws.per_thread, n_threads);
    }
    if (y_active) {
        ws.transposed.resize(nx * ny);
        ws.H_transposed.assign(nx * ny, 0.0);
        transpose(u, nx, ny, ws.transposed);
        sweep_lines(ws.transposed, nx, ny, grid.gy, y_terms, config, bounds.y, dt,
                    ws.H_transposed, ws.per_thread, n_threads);
        for (std::size_t j = 0; j < ny; ++j) {
            for (std::size_t i = 0; i < nx; ++i) H[j * nx + i] += ws.H_transposed[i * ny + j];
        }
    }
}

AdvanceResult2D advance_2d(const Field2D& u0, double T, const Grid2D& grid,
                           const ProblemSpec2D& problem, const SchemeConfig& config,
                           std::span<const double> snapshot_times, int threads) {
    config.validate();
    if (u0.nx != grid.gx.size() || u0.ny != grid.gy.size() ||
        u0.values.size() != u0.nx * u0.ny) {
        throw std::invalid_argument("advance_2d: initial field does not match grid");
    }
    auto ws = std::make_shared<Workspace2D>();
    auto bounds = std::make_shared<WaveBounds2D>();

    auto step_size = [&](std::span<const double> u) {
        *bounds = compute_bounds_2d(problem, u);
        const bool moving = bounds->x.has_advection() || bounds->x.has_diffusion() ||
                            bounds->y.has_advection() || bounds->y.has_diffusion();
        if (!moving) return std::numeric_limits<double>::infinity();
        return compute_dt(config, bounds->x, bounds->y, grid);
    };
    auto make_op = [&](std::span<const double>, double dt) -> StageOperator {
        const WaveBounds2D frozen = *bounds;
        return [&grid, &problem, &config, frozen, dt, ws, threads](std::span<const double> u,
                                                                   std::span<double> H) {
            build_H_2d(u, grid, problem, config, frozen, dt, H, *ws, threads);
        };
    };

    const AdvanceResult r = integrate({u0.values, u0.time}, T, config.order, step_size, make_op,
                                      snapshot_times);
    AdvanceResult2D out;
    out.solution = {u0.nx, u0.ny, r.solution.values, r.solution.time};
    for (const auto& s : r.snapshots) out.snapshots.push_back({u0.nx, u0.ny, s.values, s.time});
    out.steps = r.steps;
    return out;
}

}  // namespace sconv
