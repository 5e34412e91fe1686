#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sconv/core.hpp"
#include "sconv/solver2d.hpp"

namespace sconv {

/// e^{-b t} sin(x - c t).
double exact_advdiff(double x, double t, double c, double b);

/// Barenblatt profile of u_t = (u^m)_xx. Throws std::invalid_argument for
/// m <= 1 or t <= 0.
double barenblatt(double x, double t, double m);
double barenblatt_support(double t, double m);

using CaseParams = std::map<std::string, double>;

struct BenchmarkCase {
    std::string name;
    int dimension = 1;
    ProblemSpec spec;      // dimension 1
    ProblemSpec2D spec2d;  // dimension 2
    double ax = 0.0, bx = 1.0;
    double ay = 0.0, by = 1.0;
    int n_cells = 200;   // default N (x cells in 2D)
    int ny_cells = 200;  // 2D only
    double t0 = 0.0;
    double T_final = 1.0;
    std::array<double, 3> beta_by_order{};  // default beta for k = 1, 2, 3
    double cfl = 0.5;
    std::vector<double> snapshot_times;

    [[nodiscard]] bool has_exact() const { return static_cast<bool>(spec.exact); }
    [[nodiscard]] SchemeConfig default_config(int order) const;
    [[nodiscard]] Grid1D grid(int n) const;
    [[nodiscard]] Grid2D grid_2d(int nx, int ny) const;
};

/// Names accepted by make_problem.
std::vector<std::string> case_names();

/// Builds a benchmark by name. Recognised params: linear_advdiff c, b;
/// pme_barenblatt m; pme_two_box m; buckley_leverett gravity (0/1), eps;
/// strong_degenerate eps; strong_degenerate_2d eps; buckley_leverett_2d eps.
/// Throws std::invalid_argument on an unknown name or parameter.
BenchmarkCase make_problem(const std::string& name, const CaseParams& params = {});

/// Default beta from the unconditional-stability table, keyed by which terms
/// the problem carries (the combined column when both are present), halved
/// in 2D.
double table_beta(int order, bool advection, bool diffusion, int dimension = 1);

/// First-order upwind/central reference:
///   u_i += -dt/dx (f+_i - f+_{i-1}) - dt/dx (f-_{i+1} - f-_i) + dt/dx^2 (g_{i+1} - 2 g_i + g_{i-1}),
/// dt = 0.1 dx^2 / (c dx + 2 b), run on n_ref cells from the case's t0 to T.
SolutionField reference_solution(const BenchmarkCase& bc, double T, int n_ref = 3000);

/// Linear interpolation of node values on `from` at the nodes of `to`.
std::vector<double> interpolate(std::span<const double> values, const Grid1D& from,
                                const Grid1D& to);

struct ErrorReport {
    double linf = 0.0;
    double l1 = 0.0;
    int n_cells = 0;
    std::optional<double> order;  // vs the previous (coarser) entry
};

/// L_inf = max node error, L1 = dx * sum |error|.
ErrorReport error_norms(std::span<const double> u, std::span<const double> truth,
                        const Grid1D& grid);
ErrorReport error_norms(std::span<const double> u, const std::function<double(double)>& truth,
                        const Grid1D& grid);

/// Fills order = log(e_prev / e) / log(N / N_prev) from the L_inf errors of
/// consecutive entries (log2 of the error ratio under doubling).
void assign_orders(std::vector<ErrorReport>& reports);

}  // namespace sconv
