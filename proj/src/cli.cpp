#include "sconv/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sconv/problems.hpp"
#include "sconv/solver2d.hpp"
#include "sconv/stability.hpp"
#include "sconv/timestep.hpp"

namespace sconv {

namespace {

struct SchemeFlags {
    std::string case_name = "linear_advdiff";
    std::vector<std::string> params;
    int k = 3;
    std::optional<double> cfl;
    std::optional<double> beta;
    std::string quadrature = "weno5";
    bool filter = true;
    bool cross_term = true;
    std::optional<double> T;
    int threads = 0;
};

void add_scheme_options(CLI::App* cmd, SchemeFlags& f) {
    cmd->add_option("--case", f.case_name, "Benchmark case name");
    cmd->add_option("--param", f.params, "Case parameter key=value (repeatable)");
    cmd->add_option("--k", f.k, "Order of the partial sum and of SSP-RK")
        ->check(CLI::Range(1, 3));
    cmd->add_option("--cfl", f.cfl, "CFL number (case default otherwise)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--beta", f.beta, "Kernel parameter beta (case default otherwise)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--quadrature", f.quadrature, "weno5 or linear6")
        ->check(CLI::IsMember({"weno5", "linear6"}));
    cmd->add_flag("--filter,!--no-filter", f.filter, "Nonlinear filter on the convection sums");
    cmd->add_flag("--cross-term,!--no-cross-term", f.cross_term,
                  "Cross term of the third order convection sum");
    cmd->add_option("--T", f.T, "Final time (case default otherwise)");
    cmd->add_option("--threads", f.threads, "Threads for 2D line sweeps (0 = runtime default)");
}

CaseParams parse_params(const std::vector<std::string>& raw) {
    CaseParams out;
    for (const auto& kv : raw) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw std::invalid_argument("--param expects key=value, got '" + kv + "'");
        }
        std::size_t used = 0;
        const std::string value = kv.substr(eq + 1);
        double v = 0.0;
        try {
            v = std::stod(value, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != value.size()) {
            throw std::invalid_argument("--param value is not a number: '" + kv + "'");
        }
        out[kv.substr(0, eq)] = v;
    }
    return out;
}

SchemeConfig scheme_from(const SchemeFlags& f, const BenchmarkCase& bc) {
    SchemeConfig cfg = bc.default_config(f.k);
    if (f.cfl) cfg.cfl = *f.cfl;
    if (f.beta) cfg.beta = *f.beta;
    cfg.quadrature = f.quadrature == "linear6" ? Quadrature::Linear6 : Quadrature::Weno5;
    cfg.filter_enabled = f.filter;
    cfg.cross_term_k3 = f.cross_term;
    cfg.validate();
    return cfg;
}

std::ofstream open_csv(const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path + " for writing");
    os << std::setprecision(17);
    return os;
}

std::string snapshot_path(const std::string& out, double t) {
    std::ostringstream tag;
    tag << "_t" << t;
    const auto dot = out.rfind('.');
    const auto slash = out.rfind('/');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
        return out + tag.str();
    }
    return out.substr(0, dot) + tag.str() + out.substr(dot);
}

void write_1d(std::ostream& os, const Grid1D& g, const SolutionField& u, const ProblemSpec& p) {
    if (p.exact) {
        os << "x,u,u_exact,error\n";
        for (std::size_t i = 0; i < g.size(); ++i) {
            const double ue = p.exact(g.nodes[i], u.time);
            os << g.nodes[i] << ',' << u.values[i] << ',' << ue << ',' << u.values[i] - ue << '\n';
        }
    } else {
        os << "x,u\n";
        for (std::size_t i = 0; i < g.size(); ++i) os << g.nodes[i] << ',' << u.values[i] << '\n';
    }
}

void write_2d(std::ostream& os, const Grid2D& g, const Field2D& u) {
    os << "x,y,u\n";
    for (std::size_t j = 0; j < u.ny; ++j) {
        for (std::size_t i = 0; i < u.nx; ++i) {
            os << g.gx.nodes[i] << ',' << g.gy.nodes[j] << ',' << u.at(i, j) << '\n';
        }
    }
}

struct RunFlags {
    SchemeFlags scheme;
    std::optional<int> n;
    std::optional<int> nx;
    std::optional<int> ny;
    std::string out;
    std::vector<double> snapshots;
};

int cmd_run(const RunFlags& f, std::ostream& out) {
    const BenchmarkCase bc = make_problem(f.scheme.case_name, parse_params(f.scheme.params));
    const SchemeConfig cfg = scheme_from(f.scheme, bc);
    const double T = f.scheme.T.value_or(bc.T_final);
    std::vector<double> snaps = f.snapshots.empty() ? bc.snapshot_times : f.snapshots;
    out << std::setprecision(10);

    if (bc.dimension == 1) {
        const Grid1D grid = bc.grid(f.n.value_or(bc.n_cells));
        const SolutionField u0{sample(bc.spec.initial, grid), bc.t0};
        const AdvanceResult r = advance(u0, T, grid, bc.spec, cfg, snaps);
        out << "case=" << bc.name << " N=" << grid.n_cells << " k=" << cfg.order
            << " beta=" << cfg.beta << " cfl=" << cfg.cfl << " T=" << T << " steps=" << r.steps;
        if (bc.spec.exact) {
            const ErrorReport e =
                error_norms(r.solution.values, [&](double x) { return bc.spec.exact(x, T); }, grid);
            out << " linf=" << e.linf << " l1=" << e.l1;
        }
        out << '\n';
        if (!f.out.empty()) {
            auto os = open_csv(f.out);
            write_1d(os, grid, r.solution, bc.spec);
            for (const auto& s : r.snapshots) {
                auto ss = open_csv(snapshot_path(f.out, s.time));
                write_1d(ss, grid, s, bc.spec);
            }
        }
        return 0;
    }

    const Grid2D grid = bc.grid_2d(f.nx.value_or(f.n.value_or(bc.n_cells)),
                                   f.ny.value_or(f.n.value_or(bc.ny_cells)));
    const Field2D u0 = [&] {
        Field2D u = sample_2d(bc.spec2d.initial, grid);
        u.time = bc.t0;
        return u;
    }();
    const AdvanceResult2D r = advance_2d(u0, T, grid, bc.spec2d, cfg, snaps, f.scheme.threads);
    double lo = r.solution.values.front();
    double hi = lo;
    for (double v : r.solution.values) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    out << "case=" << bc.name << " Nx=" << grid.gx.n_cells << " Ny=" << grid.gy.n_cells
        << " k=" << cfg.order << " beta=" << cfg.beta << " cfl=" << cfg.cfl << " T=" << T
        << " steps=" << r.steps << " min=" << lo << " max=" << hi << '\n';
    if (!f.out.empty()) {
        auto os = open_csv(f.out);
        write_2d(os, grid, r.solution);
        for (const auto& s : r.snapshots) {
            auto ss = open_csv(snapshot_path(f.out, s.time));
            write_2d(ss, grid, s);
        }
    }
    return 0;
}

struct ConvergenceFlags {
    SchemeFlags scheme;
    std::vector<int> ns{40, 80, 160, 320, 640};
    std::string out;
};

int cmd_convergence(const ConvergenceFlags& f, std::ostream& out) {
    const BenchmarkCase bc = make_problem(f.scheme.case_name, parse_params(f.scheme.params));
    if (bc.dimension != 1 || !bc.spec.exact) {
        throw std::invalid_argument("convergence needs a 1D case with an exact solution");
    }
    const SchemeConfig cfg = scheme_from(f.scheme, bc);
    const double T = f.scheme.T.value_or(bc.T_final);
    std::vector<ErrorReport> reports;
    for (int n : f.ns) {
        const Grid1D grid = bc.grid(n);
        const SolutionField u0{sample(bc.spec.initial, grid), bc.t0};
        const AdvanceResult r = advance(u0, T, grid, bc.spec, cfg);
        reports.push_back(
            error_norms(r.solution.values, [&](double x) { return bc.spec.exact(x, T); }, grid));
    }
    assign_orders(reports);

    auto emit = [&](std::ostream& os) {
        os << std::setprecision(17) << "N,linf_error,order\n";
        for (const auto& r : reports) {
            os << r.n_cells << ',' << r.linf << ',';
            if (r.order) os << *r.order;
            os << '\n';
        }
    };
    if (f.out.empty()) {
        emit(out);
    } else {
        auto os = open_csv(f.out);
        emit(os);
        out << std::setprecision(4) << std::scientific;
        for (const auto& r : reports) {
            out << "N=" << r.n_cells << " linf=" << r.linf;
            if (r.order) out << " order=" << std::fixed << *r.order << std::scientific;
            out << '\n';
        }
    }
    return 0;
}

struct StabilityFlags {
    std::string kind = "advection";
    int k = 1;
    std::optional<double> beta;
    std::string mode = "full";
    bool cross_term = true;
    int n_kappa = 512;
    int n_ratio = 64;
    bool beta_max = false;
    std::string out;
};

int cmd_stability(const StabilityFlags& f, std::ostream& out) {
    const EquationKind kind =
        f.kind == "diffusion" ? EquationKind::Diffusion : EquationKind::Advection;
    const SymbolMode mode =
        f.mode == "semi" ? SymbolMode::SemiDiscrete : SymbolMode::FullyDiscreteLinear6;
    const double beta = f.beta.value_or(
        table_beta(f.k, kind == EquationKind::Advection, kind == EquationKind::Diffusion));
    ScanGrid grid;
    grid.n_kappa = f.n_kappa;
    grid.n_ratio = f.n_ratio;
    const StabilityReport rep =
        stability_report(f.k, kind, beta, mode, f.cross_term, grid, f.beta_max);
    out << std::setprecision(12) << "kind=" << f.kind << " k=" << f.k << " beta=" << beta
        << " mode=" << f.mode << " max_abs_lambda=" << rep.max_abs_lambda;
    if (f.beta_max) out << " beta_max=" << rep.beta_max_estimate;
    out << '\n';
    if (!f.out.empty()) export_contours(rep, f.out);
    return 0;
}

struct CompareFlags {
    SchemeFlags scheme;
    std::optional<int> n;
    int nref = 3000;
    std::string out;
};

int cmd_compare(const CompareFlags& f, std::ostream& out) {
    const BenchmarkCase bc = make_problem(f.scheme.case_name, parse_params(f.scheme.params));
    if (bc.dimension != 1) throw std::invalid_argument("compare-reference supports 1D cases only");
    const SchemeConfig cfg = scheme_from(f.scheme, bc);
    const double T = f.scheme.T.value_or(bc.T_final);
    const Grid1D grid = bc.grid(f.n.value_or(bc.n_cells));
    const SolutionField u0{sample(bc.spec.initial, grid), bc.t0};
    const AdvanceResult r = advance(u0, T, grid, bc.spec, cfg);
    const SolutionField ref = reference_solution(bc, T, f.nref);
    const std::vector<double> ref_on_grid = interpolate(ref.values, bc.grid(f.nref), grid);
    const ErrorReport e = error_norms(r.solution.values, ref_on_grid, grid);
    out << std::setprecision(10) << "case=" << bc.name << " N=" << grid.n_cells
        << " nref=" << f.nref << " T=" << T << " linf=" << e.linf << " l1=" << e.l1 << '\n';
    if (!f.out.empty()) {
        auto os = open_csv(f.out);
        os << "x,u,u_ref,error\n";
        for (std::size_t i = 0; i < grid.size(); ++i) {
            os << grid.nodes[i] << ',' << r.solution.values[i] << ',' << ref_on_grid[i] << ','
               << r.solution.values[i] - ref_on_grid[i] << '\n';
        }
    }
    return 0;
}

}  // namespace

int parse_and_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Successive-convolution solver for degenerate advection-diffusion equations"};
    app.require_subcommand(1);

    std::string known;
    for (const auto& name : case_names()) known += (known.empty() ? "" : ", ") + name;

    RunFlags run;
    auto* run_cmd = app.add_subcommand("run", "Advance one benchmark case and write the solution");
    add_scheme_options(run_cmd, run.scheme);
    run_cmd->add_option("--N", run.n, "Cells (1D, or both axes in 2D)")->check(CLI::Range(6, 1 << 26));
    run_cmd->add_option("--Nx", run.nx, "Cells along x (2D)")->check(CLI::Range(6, 1 << 20));
    run_cmd->add_option("--Ny", run.ny, "Cells along y (2D)")->check(CLI::Range(6, 1 << 20));
    run_cmd->add_option("--out", run.out, "Solution CSV path");
    run_cmd->add_option("--snapshots", run.snapshots, "Extra output times")->delimiter(',');
    run_cmd->footer("Cases: " + known);

    ConvergenceFlags conv;
    auto* conv_cmd = app.add_subcommand("convergence", "L_inf errors and orders under refinement");
    add_scheme_options(conv_cmd, conv.scheme);
    conv_cmd->add_option("--N", conv.ns, "Comma separated cell counts")
        ->delimiter(',')
        ->check(CLI::Range(6, 1 << 26));
    conv_cmd->add_option("--out", conv.out, "Convergence CSV path");

    StabilityFlags stab;
    auto* stab_cmd = app.add_subcommand("stability", "Scan |lambda| over (kappa dx, step ratio)");
    stab_cmd->add_option("--kind", stab.kind, "advection or diffusion")
        ->check(CLI::IsMember({"advection", "diffusion"}));
    stab_cmd->add_option("--k", stab.k, "Order")->check(CLI::Range(1, 3));
    stab_cmd->add_option("--beta", stab.beta, "beta (table value otherwise)")
        ->check(CLI::PositiveNumber);
    stab_cmd->add_option("--mode", stab.mode, "semi or full")
        ->check(CLI::IsMember({"semi", "full"}));
    stab_cmd->add_flag("--cross-term,!--no-cross-term", stab.cross_term, "k=3 advection cross term");
    stab_cmd->add_option("--n-kappa", stab.n_kappa, "kappa dx samples")->check(CLI::Range(2, 1 << 16));
    stab_cmd->add_option("--n-ratio", stab.n_ratio, "Step-ratio samples")->check(CLI::Range(2, 1 << 16));
    stab_cmd->add_flag("--beta-max", stab.beta_max, "Also bisect for the largest stable beta");
    stab_cmd->add_option("--out", stab.out, "Contour CSV path");

    CompareFlags cmp;
    auto* cmp_cmd = app.add_subcommand("compare-reference",
                                       "Compare against the first-order reference scheme");
    add_scheme_options(cmp_cmd, cmp.scheme);
    cmp_cmd->add_option("--N", cmp.n, "Cells")->check(CLI::Range(6, 1 << 26));
    cmp_cmd->add_option("--nref", cmp.nref, "Reference cells")->check(CLI::Range(6, 1 << 26));
    cmp_cmd->add_option("--out", cmp.out, "Comparison CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (*run_cmd) return cmd_run(run, out);
        if (*conv_cmd) return cmd_convergence(conv, out);
        if (*stab_cmd) return cmd_stability(stab, out);
        if (*cmp_cmd) return cmd_compare(cmp, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

}  // namespace sconv
