#include "sconv/problems.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sconv {

namespace {

constexpr double kPi = std::numbers::pi;

double param(const CaseParams& params, const std::string& key, double fallback) {
    const auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

void check_params(const std::string& name, const CaseParams& params,
                  std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : params) {
        const bool known = std::any_of(allowed.begin(), allowed.end(),
                                       [&](const char* a) { return key == a; });
        if (!known) {
            throw std::invalid_argument("case " + name + ": unknown parameter '" + key + "'");
        }
    }
}

// Two-phase relative mobility flux u^2 / (u^2 + (1 - u)^2) and its derivative.
double bl_flux(double u) {
    const double d = u * u + (1.0 - u) * (1.0 - u);
    return u * u / d;
}

double bl_flux_deriv(double u) {
    const double d = u * u + (1.0 - u) * (1.0 - u);
    return 2.0 * u * (1.0 - u) / (d * d);
}

double bl_gravity_flux(double u) {
    return bl_flux(u) * (1.0 - 5.0 * (1.0 - u) * (1.0 - u));
}

double bl_gravity_flux_deriv(double u) {
    const double w = 1.0 - 5.0 * (1.0 - u) * (1.0 - u);
    return bl_flux_deriv(u) * w + bl_flux(u) * 10.0 * (1.0 - u);
}

// eps * integral_0^u 4 s (1 - s) ds, frozen outside [0, 1].
ScalarFn bl_diffusion(double eps) {
    return [eps](double u) {
        const double v = std::clamp(u, 0.0, 1.0);
        return eps * (2.0 * v * v - 4.0 * v * v * v / 3.0);
    };
}

ScalarFn bl_diffusion_deriv(double eps) {
    return [eps](double u) { return (u >= 0.0 && u <= 1.0) ? eps * 4.0 * u * (1.0 - u) : 0.0; };
}

// eps * integral_0^u nu(s) ds with nu the indicator of |s| > 0.25.
ScalarFn sd_diffusion(double eps) {
    return [eps](double u) {
        return eps * std::copysign(std::max(std::abs(u) - 0.25, 0.0), u);
    };
}

ScalarFn sd_diffusion_deriv(double eps) {
    return [eps](double u) { return std::abs(u) > 0.25 ? eps : 0.0; };
}

// |u|^{m-1} u keeps g monotone for negative undershoots.
ScalarFn pme_diffusion(double m) {
    return [m](double u) { return std::pow(std::abs(u), m - 1.0) * u; };
}

ScalarFn pme_diffusion_deriv(double m) {
    return [m](double u) { return m * std::pow(std::abs(u), m - 1.0); };
}

std::array<double, 3> mixed_betas() { return {1.0, 0.5, 0.4}; }

BenchmarkCase linear_advdiff(const CaseParams& params) {
    check_params("linear_advdiff", params, {"c", "b"});
    const double c = param(params, "c", 1.0);
    const double b = param(params, "b", 0.01);
    if (b < 0.0) throw std::invalid_argument("linear_advdiff: b must be non-negative");
    BenchmarkCase bc;
    bc.name = "linear_advdiff";
    bc.spec.flux = [c](double u) { return c * u; };
    bc.spec.flux_deriv = [c](double) { return c; };
    bc.spec.diffusion = [b](double u) { return b * u; };
    bc.spec.diffusion_deriv = [b](double) { return b; };
    bc.spec.initial = [](double x) { return std::sin(x); };
    bc.spec.exact = [c, b](double x, double t) { return exact_advdiff(x, t, c, b); };
    bc.spec.bc = Boundary::Periodic;
    bc.ax = -kPi;
    bc.bx = kPi;
    bc.n_cells = 160;
    bc.T_final = 2.0;
    bc.beta_by_order = mixed_betas();
    return bc;
}

BenchmarkCase pme_barenblatt(const CaseParams& params) {
    check_params("pme_barenblatt", params, {"m"});
    const double m = param(params, "m", 2.0);
    if (!(m > 1.0)) throw std::invalid_argument("pme_barenblatt: m must exceed 1");
    BenchmarkCase bc;
    bc.name = "pme_barenblatt";
    bc.spec.diffusion = pme_diffusion(m);
    bc.spec.diffusion_deriv = pme_diffusion_deriv(m);
    bc.spec.initial = [m](double x) { return barenblatt(x, 1.0, m); };
    bc.spec.exact = [m](double x, double t) { return barenblatt(x, t, m); };
    bc.spec.bc = Boundary::Homogeneous;
    bc.ax = -6.0;
    bc.bx = 6.0;
    bc.n_cells = 200;
    bc.t0 = 1.0;
    bc.T_final = 2.0;
    bc.beta_by_order = {table_beta(1, false, true), table_beta(2, false, true), 0.8};
    return bc;
}

BenchmarkCase pme_two_box(const CaseParams& params) {
    check_params("pme_two_box", params, {"m"});
    const double m = param(params, "m", 6.0);
    if (!(m > 1.0)) throw std::invalid_argument("pme_two_box: m must exceed 1");
    BenchmarkCase bc;
    bc.name = "pme_two_box";
    bc.spec.diffusion = pme_diffusion(m);
    bc.spec.diffusion_deriv = pme_diffusion_deriv(m);
    bc.spec.initial = [](double x) {
        if (x > -4.0 && x < -1.0) return 1.0;
        if (x > 0.0 && x < 3.0) return 2.0;
        return 0.0;
    };
    bc.spec.bc = Boundary::Homogeneous;
    bc.ax = -6.0;
    bc.bx = 6.0;
    bc.n_cells = 400;
    bc.T_final = 0.12;
    bc.snapshot_times = {0.02, 0.04, 0.06};
    bc.beta_by_order = {table_beta(1, false, true), table_beta(2, false, true), 0.8};
    return bc;
}

BenchmarkCase buckley_leverett(const CaseParams& params) {
    check_params("buckley_leverett", params, {"gravity", "eps"});
    const bool gravity = param(params, "gravity", 0.0) != 0.0;
    const double eps = param(params, "eps", 0.01);
    BenchmarkCase bc;
    bc.name = "buckley_leverett";
    bc.spec.flux = gravity ? ScalarFn(bl_gravity_flux) : ScalarFn(bl_flux);
    bc.spec.flux_deriv = gravity ? ScalarFn(bl_gravity_flux_deriv) : ScalarFn(bl_flux_deriv);
    bc.spec.diffusion = bl_diffusion(eps);
    bc.spec.diffusion_deriv = bl_diffusion_deriv(eps);
    const double front = 1.0 - 1.0 / std::sqrt(2.0);
    bc.spec.initial = [front](double x) { return x < front ? 0.0 : 1.0; };
    bc.spec.bc = Boundary::Homogeneous;
    bc.ax = 0.0;
    bc.bx = 1.0;
    bc.n_cells = 200;
    bc.T_final = 0.2;
    bc.beta_by_order = mixed_betas();
    return bc;
}

BenchmarkCase strong_degenerate(const CaseParams& params) {
    check_params("strong_degenerate", params, {"eps"});
    const double eps = param(params, "eps", 0.1);
    BenchmarkCase bc;
    bc.name = "strong_degenerate";
    bc.spec.flux = [](double u) { return u * u; };
    bc.spec.flux_deriv = [](double u) { return 2.0 * u; };
    bc.spec.diffusion = sd_diffusion(eps);
    bc.spec.diffusion_deriv = sd_diffusion_deriv(eps);
    const double s = 1.0 / std::sqrt(2.0);
    bc.spec.initial = [s](double x) {
        if (x > -s - 0.4 && x < -s + 0.4) return 1.0;
        if (x > s - 0.4 && x < s + 0.4) return -1.0;
        return 0.0;
    };
    bc.spec.bc = Boundary::Homogeneous;
    bc.ax = -2.0;
    bc.bx = 2.0;
    bc.n_cells = 200;
    bc.T_final = 0.7;
    bc.beta_by_order = mixed_betas();
    return bc;
}

BenchmarkCase strong_degenerate_2d(const CaseParams& params) {
    check_params("strong_degenerate_2d", params, {"eps"});
    const double eps = param(params, "eps", 0.1);
    BenchmarkCase bc;
    bc.name = "strong_degenerate_2d";
    bc.dimension = 2;
    auto& p = bc.spec2d;
    p.f1 = p.f2 = [](double u) { return u * u; };
    p.f1_deriv = p.f2_deriv = [](double u) { return 2.0 * u; };
    p.g1 = p.g2 = sd_diffusion(eps);
    p.g1_deriv = p.g2_deriv = sd_diffusion_deriv(eps);
    p.initial = [](double x, double y) {
        if ((x + 0.5) * (x + 0.5) + (y + 0.5) * (y + 0.5) < 0.16) return 1.0;
        if ((x - 0.5) * (x - 0.5) + (y - 0.5) * (y - 0.5) < 0.16) return -1.0;
        return 0.0;
    };
    p.bc_x = p.bc_y = Boundary::Homogeneous;
    bc.ax = bc.ay = -1.5;
    bc.bx = bc.by = 1.5;
    bc.n_cells = bc.ny_cells = 200;
    bc.T_final = 0.5;
    bc.beta_by_order = {0.5, 0.25, 0.2};
    return bc;
}

BenchmarkCase buckley_leverett_2d(const CaseParams& params) {
    check_params("buckley_leverett_2d", params, {"eps"});
    const double eps = param(params, "eps", 0.01);
    BenchmarkCase bc;
    bc.name = "buckley_leverett_2d";
    bc.dimension = 2;
    auto& p = bc.spec2d;
    p.f1 = bl_flux;
    p.f1_deriv = bl_flux_deriv;
    p.f2 = bl_gravity_flux;
    p.f2_deriv = bl_gravity_flux_deriv;
    p.g1 = p.g2 = [eps](double u) { return eps * u; };
    p.g1_deriv = p.g2_deriv = [eps](double) { return eps; };
    p.initial = [](double x, double y) { return x * x + y * y < 0.5 ? 1.0 : 0.0; };
    p.bc_x = p.bc_y = Boundary::Homogeneous;
    bc.ax = bc.ay = -1.5;
    bc.bx = bc.by = 1.5;
    bc.n_cells = bc.ny_cells = 200;
    bc.T_final = 0.5;
    bc.beta_by_order = {0.5, 0.25, 0.2};
    return bc;
}

}  // namespace

double exact_advdiff(double x, double t, double c, double b) {
    return std::exp(-b * t) * std::sin(x - c * t);
}

double barenblatt(double x, double t, double m) {
    if (!(m > 1.0)) throw std::invalid_argument("barenblatt: m must exceed 1");
    if (!(t > 0.0)) throw std::invalid_argument("barenblatt: t must be positive");
    const double p = 1.0 / (m + 1.0);
    const double inner = 1.0 - p * (m - 1.0) / (2.0 * m) * x * x / std::pow(t, 2.0 * p);
    return std::pow(t, -p) * std::pow(std::max(inner, 0.0), 1.0 / (m - 1.0));
}

double barenblatt_support(double t, double m) {
    if (!(m > 1.0)) throw std::invalid_argument("barenblatt: m must exceed 1");
    const double p = 1.0 / (m + 1.0);
    return std::pow(t, p) * std::sqrt(2.0 * m / (p * (m - 1.0)));
}

SchemeConfig BenchmarkCase::default_config(int order) const {
    if (order < 1 || order > 3) throw std::invalid_argument("case: order must be 1, 2 or 3");
    SchemeConfig cfg;
    cfg.order = order;
    cfg.beta = beta_by_order[order - 1];
    cfg.cfl = cfl;
    return cfg;
}

Grid1D BenchmarkCase::grid(int n) const { return build_grid_1d(ax, bx, n); }

Grid2D BenchmarkCase::grid_2d(int nx, int ny) const { return build_grid_2d(ax, bx, nx, ay, by, ny); }

std::vector<std::string> case_names() {
    return {"linear_advdiff",    "pme_barenblatt",       "pme_two_box",        "buckley_leverett",
            "strong_degenerate", "strong_degenerate_2d", "buckley_leverett_2d"};
}

BenchmarkCase make_problem(const std::string& name, const CaseParams& params) {
    if (name == "linear_advdiff") return linear_advdiff(params);
    if (name == "pme_barenblatt") return pme_barenblatt(params);
    if (name == "pme_two_box") return pme_two_box(params);
    if (name == "buckley_leverett") return buckley_leverett(params);
    if (name == "strong_degenerate") return strong_degenerate(params);
    if (name == "strong_degenerate_2d") return strong_degenerate_2d(params);
    if (name == "buckley_leverett_2d") return buckley_leverett_2d(params);
    throw std::invalid_argument("unknown case '" + name + "'");
}

double table_beta(int order, bool advection, bool diffusion, int dimension) {
    if (order < 1 || order > 3) throw std::invalid_argument("table_beta: order must be 1, 2 or 3");
    static constexpr double adv[3] = {2.0, 1.0, 1.243};
    static constexpr double diff[3] = {2.0, 1.0, 0.8375};
    static constexpr double mixed[3] = {1.0, 0.5, 0.4167};
    double beta = 2.0;
    if (advection && diffusion) {
        beta = mixed[order - 1];
    } else if (advection) {
        beta = adv[order - 1];
    } else if (diffusion) {
        beta = diff[order - 1];
    }
    return dimension == 2 ? 0.5 * beta : beta;
}

SolutionField reference_solution(const BenchmarkCase& bc, double T, int n_ref) {
    if (bc.dimension != 1) throw std::invalid_argument("reference_solution: 1D cases only");
    if (T < bc.t0) throw std::invalid_argument("reference_solution: T precedes the initial time");
    const Grid1D grid = bc.grid(n_ref);
    const ProblemSpec& p = bc.spec;
    const std::size_t n = grid.size();
    const long last = static_cast<long>(n) - 1;
    const bool periodic = p.bc == Boundary::Periodic;
    auto at = [&](const std::vector<double>& v, long i) {
        if (periodic) {
            i = ((i % last) + last) % last;
        } else {
            i = std::clamp(i, 0L, last);
        }
        return v[i];
    };

    std::vector<double> u = sample(p.initial, grid);
    std::vector<double> fp(n), fm(n), g(n), next(n);
    const double dx = grid.dx;
    double t = bc.t0;
    while (t < T) {
        const WaveBounds wb = compute_bounds(p, u);
        if (!wb.has_advection() && !wb.has_diffusion()) break;
        double dt = 0.1 * dx * dx / (wb.c * dx + 2.0 * wb.b_diff);
        if (t + dt * (1.0 + 1e-9) >= T) dt = T - t;
        for (std::size_t i = 0; i < n; ++i) {
            const double f = p.flux ? p.flux(u[i]) : 0.0;
            fp[i] = 0.5 * (f + wb.c * u[i]);
            fm[i] = 0.5 * (f - wb.c * u[i]);
            g[i] = p.diffusion ? p.diffusion(u[i]) : 0.0;
        }
        const double r1 = dt / dx;
        const double r2 = dt / (dx * dx);
        for (long i = 0; i <= last; ++i) {
            next[i] = u[i] - r1 * (fp[i] - at(fp, i - 1)) - r1 * (at(fm, i + 1) - fm[i]) +
                      r2 * (at(g, i + 1) - 2.0 * g[i] + at(g, i - 1));
        }
        if (periodic) next[last] = next[0];
        u.swap(next);
        t = (t + dt >= T) ? T : t + dt;
    }
    return {u, T};
}

std::vector<double> interpolate(std::span<const double> values, const Grid1D& from,
                                const Grid1D& to) {
    if (values.size() != from.size()) {
        throw std::invalid_argument("interpolate: values do not match source grid");
    }
    std::vector<double> out(to.size());
    const long last_cell = from.n_cells - 1;
    for (std::size_t i = 0; i < to.size(); ++i) {
        const double s = (to.nodes[i] - from.a) / from.dx;
        const long cell = std::clamp(static_cast<long>(std::floor(s)), 0L, last_cell);
        const double w = std::clamp(s - cell, 0.0, 1.0);
        out[i] = (1.0 - w) * values[cell] + w * values[cell + 1];
    }
    return out;
}

ErrorReport error_norms(std::span<const double> u, std::span<const double> truth,
                        const Grid1D& grid) {
    if (u.size() != grid.size() || truth.size() != grid.size()) {
        throw std::invalid_argument("error_norms: length mismatch");
    }
    ErrorReport rep;
    rep.n_cells = grid.n_cells;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double e = std::abs(u[i] - truth[i]);
        rep.linf = std::max(rep.linf, e);
        rep.l1 += e;
    }
    rep.l1 *= grid.dx;
    return rep;
}

ErrorReport error_norms(std::span<const double> u, const std::function<double(double)>& truth,
                        const Grid1D& grid) {
    const std::vector<double> t = sample(truth, grid);
    return error_norms(u, t, grid);
}

void assign_orders(std::vector<ErrorReport>& reports) {
    for (std::size_t i = 0; i < reports.size(); ++i) {
        reports[i].order.reset();
        if (i == 0) continue;
        const auto& prev = reports[i - 1];
        const auto& cur = reports[i];
        if (prev.linf > 0.0 && cur.linf > 0.0 && cur.n_cells != prev.n_cells) {
            reports[i].order = std::log(prev.linf / cur.linf) /
                               std::log(static_cast<double>(cur.n_cells) / prev.n_cells);
        }
    }
}

}  // namespace sconv
