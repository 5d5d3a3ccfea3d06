// Command-line front end: loads model configs, runs the verification
// suites and emits text/JSON reports plus CSV artifacts.
//
// Exit codes: 0 all selected checks pass, 1 check failure, 2 config error.

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "sirev/dynamics.hpp"
#include "sirev/geometry.hpp"
#include "sirev/sampling.hpp"
#include "sirev/suites.hpp"

namespace fs = std::filesystem;
using namespace sirev;

namespace {

struct Emit {
    std::string format = "text";
    std::string out_dir;

    int finish(Report& rep) const {
        if (format == "json")
            std::cout << rep.to_json();
        else
            std::cout << rep.to_text();
        if (!out_dir.empty()) {
            fs::create_directories(out_dir);
            std::ofstream f(fs::path(out_dir) / (rep.command + ".json"));
            f << rep.to_json();
        }
        return rep.all_pass() ? 0 : 1;
    }
};

int cmd_verify_model(const std::string& path, const Emit& emit, std::uint64_t seed_override,
                     bool has_seed, double tol_override, bool has_tol) {
    RunConfig rc = load_run_config(path);
    if (has_seed) rc.seed = seed_override;
    if (has_tol) rc.tol = tol_override;
    Report rep = run_model_suite(rc);
    Emit e = emit;
    if (e.out_dir.empty()) e.out_dir = rc.out_dir;
    if (emit.format == "text" && rc.format == "json") e.format = "json";
    return e.finish(rep);
}

int cmd_catalog_build(const std::string& name, const CatalogParams& params, const Emit& emit) {
    auto id = catalog_id_from_string(name);
    if (!id) {
        std::cerr << "unknown catalog id '" << name << "'; see `sirev catalog list`\n";
        return 2;
    }
    CatalogBuild b;
    Report rep = run_catalog_suite(*id, params, 10001, &b);

    if (!emit.out_dir.empty()) {
        fs::create_directories(emit.out_dir);
        std::ofstream csv(fs::path(emit.out_dir) / ("curvature_" + name + ".csv"));
        csv << "a,R\n";
        csv.precision(17);
        const int N = 2001;
        for (int i = 0; i < N; ++i) {
            const double w =
                b.w_grid.lo * std::pow(b.w_grid.hi / b.w_grid.lo, double(i) / (N - 1));
            const double a = b.chart.a_of_w(w);
            if (!b.model.domain.contains(a)) continue;
            try {
                csv << a << ',' << scalar_curvature(b.model, a) << '\n';
            } catch (const OutOfDomain&) {
            }
        }
    }
    return emit.finish(rep);
}

int cmd_cascade(int n, const Emit& emit, std::uint64_t seed) {
    if (n < 2) {
        std::cerr << "cascade needs --n >= 2\n";
        return 2;
    }
    CascadeReport table;
    Report rep = run_cascade_suite(n, seed, &table);
    if (!emit.out_dir.empty()) {
        fs::create_directories(emit.out_dir);
        std::ofstream csv(fs::path(emit.out_dir) / ("cascade_n" + std::to_string(n) + ".csv"));
        csv << "eps,q1_residual,q2_residual\n";
        csv.precision(17);
        for (const auto& r : table.rows)
            csv << r.eps << ',' << r.q1_resid << ',' << r.q2_resid << '\n';
    }
    return emit.finish(rep);
}

int cmd_integrate(const std::string& path, double T, double tol, double margin, const Emit& emit) {
    RunConfig rc = load_run_config(path);
    auto sys = build_system(rc.model);
    Rng rng(rc.seed);
    PhasePoint start = random_phase_point(rng, rc.model);

    IntegrateOptions opts;
    opts.tol = tol;
    opts.guard_margin = margin;
    auto res = integrate_geodesic(sys, start, T, opts);

    Report rep;
    rep.command = "integrate";
    rep.seed = rc.seed;
    for (const auto& e : res.drift.entries)
        rep.add(Check::make("drift " + e.name, e.max_rel_drift, 100 * tol,
                            std::int64_t(res.drift.n_steps)));
    if (res.drift.domain_exit)
        rep.add(
            Check::boolean("domain exit", true, "t=" + std::to_string(res.drift.T_integrated)));

    if (!emit.out_dir.empty()) {
        fs::create_directories(emit.out_dir);
        std::ofstream csv(fs::path(emit.out_dir) / "trajectory.csv");
        write_trajectory_csv(csv, sys, res.trajectory);
    }
    return emit.finish(rep);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"superintegrable surfaces-of-revolution verification workbench"};
    app.require_subcommand(1);

    Emit emit;
    std::uint64_t seed = 42;
    bool seed_given = false;
    double tol = 1e-9;
    bool tol_given = false;
    app.add_option("--seed", seed, "random seed")->each([&](std::string) { seed_given = true; });
    app.add_option("--tol", tol, "residual tolerance override")
        ->each([&](std::string) { tol_given = true; });
    app.add_option("--format", emit.format, "text|json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", emit.out_dir, "artifact output directory");

    auto* vi = app.add_subcommand("verify-identities", "exact symmetric-function identity suite");
    int n_max = 8, sets = 50;
    vi->add_option("--n-max", n_max, "largest root-set size");
    vi->add_option("--sets", sets, "root sets per size");

    auto* vm = app.add_subcommand("verify-model", "run the verification suites on a model config");
    std::string vm_config;
    vm->add_option("config", vm_config, "model config file")->required();

    auto* cat = app.add_subcommand("catalog", "globally defined examples");
    auto* cat_list = cat->add_subcommand("list", "list catalog ids");
    auto* cat_build = cat->add_subcommand("build", "build one example and run validity checks");
    std::string cat_id;
    CatalogParams cat_params;
    cat_build->add_option("id", cat_id, "catalog id")->required();
    cat_build->add_option("--a1", cat_params.a1, "primary root override");
    cat_build->add_option("--nu", cat_params.nu, "affine coefficient override");
    cat_build->add_option("--c", cat_params.c, "leading amplitude override");

    auto* casc = app.add_subcommand("cascade", "degree-reduction checks");
    int casc_n = 2;
    casc->add_option("--n", casc_n, "upper degree")->required();

    auto* integ = app.add_subcommand("integrate", "geodesic integration with drift report");
    std::string integ_config;
    double integ_T = 10.0, integ_tol = 1e-10, integ_margin = -1.0;
    integ->add_option("config", integ_config, "model config file")->required();
    integ->add_option("--T", integ_T, "time horizon")->required();
    integ->add_option("--tol", integ_tol, "integrator tolerance")->required();
    integ->add_option("--margin", integ_margin, "domain-exit guard distance");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*vi) {
            Report rep = run_identities(n_max, sets, seed);
            return emit.finish(rep);
        }
        if (*vm) return cmd_verify_model(vm_config, emit, seed, seed_given, tol, tol_given);
        if (*cat_list) {
            for (const auto& e : catalog_list()) std::cout << e.name << "  " << e.description << "\n";
            return 0;
        }
        if (*cat_build) return cmd_catalog_build(cat_id, cat_params, emit);
        if (*casc) return cmd_cascade(casc_n, emit, seed);
        if (*integ) return cmd_integrate(integ_config, integ_T, integ_tol, integ_margin, emit);
        std::cerr << "no subcommand selected\n";
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const ConstraintViolated& e) {
        std::cerr << "constraint violated: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
