#include "sirev/suites.hpp"

#include <chrono>
#include <cmath>

#include "sirev/dynamics.hpp"
#include "sirev/sampling.hpp"
#include "sirev/symfun.hpp"

namespace sirev {

namespace {

class Timer {
public:
    Timer() : t0_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point t0_;
};

}  // namespace

Report run_identities(int n_max, int sets, std::uint64_t seed) {
    Report rep;
    rep.command = "verify-identities";
    rep.seed = seed;
    Rng rng(seed);
    for (int n = 1; n <= n_max; ++n) {
        Timer t;
        std::int64_t lines = 0;
        bool ok = true;
        std::string first_bad;
        for (int s = 0; s < sets; ++s) {
            RootSet<Rational> rs{random_distinct_rationals(rng, n)};
            for (const auto& line : verify_all_identities(rs)) {
                ++lines;
                if (!line.pass() && ok) {
                    ok = false;
                    first_bad = line.name;
                }
            }
        }
        Check c = Check::boolean("identities n=" + std::to_string(n), ok,
                                 ok ? std::to_string(sets) + " root sets, exact"
                                    : "first failure: " + first_bad);
        c.samples = lines;
        c.wall_ms = t.ms();
        rep.add(c);
    }
    return rep;
}

Report run_model_suite(const RunConfig& rc) {
    Report rep;
    rep.command = "verify-model";
    rep.seed = rc.seed;
    const ModelSpec& m = rc.model;
    Rng rng(rc.seed);

    if (rc.suite.ode) {
        Timer t;
        double worst = 0.0;
        if (m.parity == Parity::Even) {
            for (int p = 0; p < 100; ++p)
                worst = std::max(
                    worst, std::abs(ode_residual_rel(m, m.domain.at(rng.uniform(0.05, 0.95)))));
        } else {
            double spread = 0.0;
            const double r0 = ode_residual(m, m.domain.at(0.37));
            for (int p = 0; p < 100; ++p) {
                const double r = ode_residual(m, m.domain.at(rng.uniform(0.05, 0.95)));
                spread = std::max(spread, std::abs(r - r0));
            }
            worst = spread / std::max(1.0, std::abs(r0));
        }
        Check c = Check::make(m.parity == Parity::Even ? "ode residual" : "ode residual spread",
                              worst, rc.tol, 100,
                              m.F.is_simple() ? ""
                              : (m.F.multiple && !m.F.pairs.empty())
                                  ? "extended case, verified numerically only"
                                  : "non-simple F");
        c.wall_ms = t.ms();
        rep.add(c);
    }

    if (!m.F.is_simple()) {
        const char* why = "closed-form integrals need a simple F";
        if (rc.suite.defining) rep.add(Check::skip("defining systems", why));
        if (rc.suite.brackets) rep.add(Check::skip("bracket conservation", why));
        if (rc.suite.algebraic) rep.add(Check::skip("algebraic relation", why));
        if (rc.suite.independence) rep.add(Check::skip("functional independence", why));
        if (rc.suite.drift) rep.add(Check::skip("geodesic drift", why));
        return rep;
    }

    auto sys = build_system(m);

    if (rc.suite.defining) {
        Timer t;
        auto dr = check_defining_systems(sys, 50, rc.seed, rc.tol);
        for (const auto& line : dr.lines) {
            Check c = Check::make("defining: " + line.name, line.max_residual, line.tolerance, 50);
            c.wall_ms = t.ms();
            rep.add(c);
        }
    }

    if (rc.suite.brackets) {
        Timer t;
        double worst_h1 = 0, worst_h2 = 0, worst_l1 = 0, worst_l2 = 0;
        for (int p = 0; p < rc.points; ++p) {
            auto z = random_phase_point(rng, m);
            const Jet h = sys.H_jet(z), s1 = sys.S1_jet(z), s2 = sys.S2_jet(z);
            worst_h1 = std::max(worst_h1,
                                std::abs(poisson(h, s1)) / std::max(poisson_scale(h, s1), 1e-30));
            worst_h2 = std::max(worst_h2,
                                std::abs(poisson(h, s2)) / std::max(poisson_scale(h, s2), 1e-30));
            const double G = sys.eval_G(sys.hamiltonian(z), z.py);
            const double S1 = sys.eval_S1(z);
            worst_l1 = std::max(worst_l1, std::abs(poisson(s1, sys.Py_jet(z)) - G) /
                                              std::max(1.0, std::abs(G)));
            worst_l2 = std::max(worst_l2, std::abs(poisson(s2, sys.Py_jet(z)) - S1) /
                                              std::max(1.0, std::abs(S1)));
        }
        Check c1 = Check::make("bracket {H,S1}", worst_h1, rc.tol, rc.points);
        c1.wall_ms = t.ms();
        rep.add(c1);
        rep.add(Check::make("bracket {H,S2}", worst_h2, rc.tol, rc.points));
        rep.add(Check::make("ladder {S1,P_y} = G", worst_l1, rc.tol, rc.points));
        rep.add(Check::make("ladder {S2,P_y} = S1", worst_l2, rc.tol, rc.points));
    }

    if (rc.suite.algebraic) {
        Timer t;
        double worst = 0.0;
        for (int p = 0; p < rc.points; ++p)
            worst = std::max(
                worst, std::abs(sys.algebraic_relation_residual(random_phase_point(rng, m))));
        Check c = Check::make("algebraic relation", worst, rc.tol, rc.points);
        c.wall_ms = t.ms();
        rep.add(c);
    }

    if (rc.suite.independence) {
        Timer t;
        int good = 0;
        for (int p = 0; p < rc.points; ++p)
            if (independence_rank(sys, random_phase_point(rng, m)) == 3) ++good;
        Check c = Check::boolean("functional independence rank 3", good * 100 >= rc.points * 99,
                                 std::to_string(good) + "/" + std::to_string(rc.points));
        c.samples = rc.points;
        c.wall_ms = t.ms();
        rep.add(c);
    }

    if (rc.suite.drift) {
        Timer t;
        IntegrateOptions opts;
        opts.tol = rc.drift_tol;
        auto start = random_phase_point(rng, m);
        auto res = integrate_geodesic(sys, start, rc.drift_T, opts);
        Check c = Check::make("geodesic drift", res.drift.max_drift(), 100 * rc.drift_tol,
                              std::int64_t(res.drift.n_steps),
                              res.drift.domain_exit
                                  ? "domain exit at t=" + std::to_string(res.drift.T_integrated)
                                  : "");
        c.wall_ms = t.ms();
        rep.add(c);
    }
    return rep;
}

Report run_cascade_suite(int upper_n, std::uint64_t seed, CascadeReport* table) {
    Report rep;
    rep.command = "cascade-n" + std::to_string(upper_n);
    rep.seed = seed;

    std::vector<Rational> roots;
    for (int i = 0; i < upper_n - 1; ++i) roots.push_back(Rational(-(i + 1)));
    StructurePoly F;
    for (int i = 0; i < upper_n - 1; ++i)
        F.simple.push_back({roots[size_t(i)], +1, 0.4 + 0.2 * i});
    auto lower = build_system(make_model(Parity::Even, F, 0.0, {0.05, 3.0}));
    auto pair = make_cascade_pair(lower);

    auto exact = cascade_exact_check(roots, Rational(1));
    rep.add(Check::boolean("exact coefficient cascade", exact.pass(),
                           std::to_string(exact.entries_checked) + " entries"));

    Rng rng(seed);
    auto z = random_phase_point(rng, lower.model);
    auto num = cascade_check(pair, z, {1e-3, 1e-4, 1e-5});
    rep.add(Check::boolean("numeric cascade ratio in [0.5,2] x eps-ratio", num.ratios_ok(),
                           "orders q1=" + std::to_string(num.order_q1) +
                               " q2=" + std::to_string(num.order_q2)));
    if (table) *table = num;
    return rep;
}

Report run_catalog_suite(CatalogId id, const CatalogParams& params, int grid_n,
                         CatalogBuild* out_build) {
    auto b = build_catalog(id, params, grid_n);
    Report rep;
    rep.command = "catalog-" + to_string(id);
    rep.seed = 0;
    for (const auto& c : b.checks) {
        Check k = Check::boolean(c.name, c.pass, c.detail);
        k.residual = c.value;
        rep.add(k);
    }
    rep.add(Check::boolean("manifold " + b.manifold, true, "grid-checked evidence"));
    if (out_build) *out_build = std::move(b);
    return rep;
}

}  // namespace sirev
