#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "sirev/dynamics.hpp"
#include "sirev/sampling.hpp"

using namespace sirev;

namespace {

ModelSpec koenigs() {
    StructurePoly F;
    F.simple.push_back({Rational(1), -1, 1.0});
    return make_model(Parity::Even, F, 0.0, {0.0, 1.0});
}

ModelSpec neg_root_model(Parity parity, int n, double nu = 1.0) {
    StructurePoly F;
    for (int i = 0; i < n; ++i) F.simple.push_back({Rational(-(i + 1)), +1, 0.3 + 0.2 * i});
    return make_model(parity, F, parity == Parity::Odd ? nu : 0.0, {0.05, 4.0});
}

}  // namespace

TEST_CASE("canonical pairs and hamiltonian basics") {
    auto m = neg_root_model(Parity::Even, 2);
    auto sys = build_system(m);
    const PhasePoint z{1.0, 0.4, 0.2, 0.6};

    Observable fa = [](const PhasePoint& p) { return jet_a(p); };
    Observable fpa = [](const PhasePoint& p) { return jet_pa(p); };
    Observable fy = [](const PhasePoint& p) { return jet_y(p); };
    Observable fpy = [](const PhasePoint& p) { return jet_py(p); };
    Observable fH = [&](const PhasePoint& p) { return sys.H_jet(p); };

    CHECK(poisson_bracket(fa, fpa, z) == doctest::Approx(1.0));
    CHECK(poisson_bracket(fy, fpy, z) == doctest::Approx(1.0));
    CHECK(poisson_bracket(fa, fy, z) == doctest::Approx(0.0));
    CHECK(poisson_bracket(fH, fpy, z) == doctest::Approx(0.0));  // H independent of y

    // worked H values
    PhasePoint z0{2.0, 0.0, 1.0, 0.0};
    StructurePoly Fu;  // profile with xdot = 1 at the probe: nu = 2 affine only is degenerate,
    // so check through the generic formula instead
    (void)Fu;
    CHECK(hamiltonian(m, PhasePoint{1.0, 0.0, 0.0, 0.5}) == doctest::Approx(0.25));
    const double pi = z0.a * z0.pa / m.profile.xdot(z0.a);
    CHECK(hamiltonian(m, z0) == doctest::Approx(pi * pi));
}

TEST_CASE("bracket algebra: antisymmetry exact, Leibniz to 1e-10") {
    auto sys = build_system(neg_root_model(Parity::Odd, 3));
    Rng rng(4);
    for (int p = 0; p < 50; ++p) {
        auto z = random_phase_point(rng, sys.model);
        const Jet f = sys.H_jet(z), g = sys.S1_jet(z), h = sys.S2_jet(z);
        CHECK(poisson(f, g) + poisson(g, f) == 0.0);  // exact as computed
        // {f, gh} = {f,g} h + g {f,h}, relative to the cancelling terms
        const Jet gh = g * h;
        const double lhs = poisson(f, gh);
        const double rhs = poisson(f, g) * h.v + g.v * poisson(f, h);
        const double scale = std::max(poisson_scale(f, gh), 1.0);
        CHECK(std::abs(lhs - rhs) <= 1e-10 * scale);
    }
}

TEST_CASE("fixed point: zero momenta give zero drift") {
    auto sys = build_system(koenigs());
    auto res = integrate_geodesic(sys, {0.5, 0.0, 0.0, 0.0}, 5.0, {});
    CHECK(res.drift.max_drift() == 0.0);
    CHECK_FALSE(res.drift.domain_exit);
    CHECK(res.trajectory.samples.back().z.a == doctest::Approx(0.5));
}

TEST_CASE("Koenigs drift stays small over a long horizon") {
    auto sys = build_system(koenigs());
    IntegrateOptions opts;
    opts.tol = 1e-10;
    opts.guard_margin = 0.0;  // soft endpoint at a -> 0+, run the full horizon
    auto res = integrate_geodesic(sys, {0.5, 0.0, 0.3, 0.7}, 10.0, opts);
    CHECK_FALSE(res.drift.domain_exit);
    CHECK(res.drift.T_integrated == doctest::Approx(10.0));
    CHECK(res.drift.max_drift() < 1e-8);
    // re-integration at a tighter tolerance agrees at the endpoint
    IntegrateOptions tight = opts;
    tight.tol = 1e-13;
    auto res2 = integrate_geodesic(sys, {0.5, 0.0, 0.3, 0.7}, 10.0, tight);
    const auto& zf = res.trajectory.samples.back().z;
    const auto& zg = res2.trajectory.samples.back().z;
    CHECK(std::abs(zf.a - zg.a) < 1e-6);
    CHECK(std::abs(zf.y - zg.y) < 1e-6);
}

TEST_CASE("halving the tolerance reduces the drift") {
    auto sys = build_system(neg_root_model(Parity::Even, 2));
    const PhasePoint z0{1.0, 0.0, 0.4, 0.5};
    double prev = std::numeric_limits<double>::infinity();
    for (double tol : {1e-8, 1e-10, 1e-12}) {
        IntegrateOptions opts;
        opts.tol = tol;
        auto res = integrate_geodesic(sys, z0, 20.0, opts);
        CHECK(res.drift.max_drift() < 100 * tol);
        CHECK(res.drift.max_drift() < prev);
        prev = res.drift.max_drift();
    }
}

TEST_CASE("time reversal retraces the trajectory") {
    // short horizon: the a -> 0 end is exponentially contracting, so long
    // horizons are ill-conditioned for retracing
    auto sys = build_system(koenigs());
    const PhasePoint z0{0.3, 0.0, 0.4, 0.7};
    IntegrateOptions opts;
    opts.tol = 1e-11;
    opts.guard_margin = 0.0;
    auto fwd = integrate_geodesic(sys, z0, 3.0, opts);
    REQUIRE_FALSE(fwd.trajectory.domain_exit);
    PhasePoint turn = fwd.trajectory.samples.back().z;
    turn.pa = -turn.pa;
    turn.py = -turn.py;
    auto back = integrate_geodesic(sys, turn, 3.0, opts);
    REQUIRE_FALSE(back.trajectory.domain_exit);
    const auto& zb = back.trajectory.samples.back().z;
    CHECK(std::abs(zb.a - z0.a) < 1e-6);
    CHECK(std::abs(zb.y - z0.y) < 1e-6);
    CHECK(std::abs(zb.pa + z0.pa) < 1e-6);
    CHECK(std::abs(zb.py + z0.py) < 1e-6);
}

TEST_CASE("domain exit is flagged, not fatal") {
    auto sys = build_system(koenigs());
    IntegrateOptions opts;
    opts.tol = 1e-10;  // default guard: exits near a -> 0 eventually
    auto res = integrate_geodesic(sys, {0.5, 0.0, 0.3, 0.7}, 100.0, opts);
    CHECK(res.drift.domain_exit);
    CHECK(res.drift.T_integrated < 100.0);
    CHECK(res.drift.max_drift() < 1e-6);
}

TEST_CASE("trajectory CSV export") {
    auto sys = build_system(koenigs());
    IntegrateOptions opts;
    opts.n_samples = 10;
    auto res = integrate_geodesic(sys, {0.5, 0.0, 0.1, 0.4}, 1.0, opts);
    std::ostringstream os;
    write_trajectory_csv(os, sys, res.trajectory);
    const std::string head = os.str().substr(0, os.str().find('\n'));
    CHECK(head == "t,a,y,p_a,p_y,H,P_y,S1,S2");
    size_t lines = 0;
    for (char c : os.str())
        if (c == '\n') ++lines;
    CHECK(lines >= 11);
}

TEST_CASE("invalid integration requests") {
    auto sys = build_system(koenigs());
    CHECK_THROWS_AS(integrate_geodesic(sys, {0.5, 0, 0, 0}, -1.0, {}), Error);
    CHECK_THROWS_AS(integrate_geodesic(sys, {1.5, 0, 0, 0}, 1.0, {}), OutOfDomain);

    IntegrateOptions opts;
    opts.max_steps = 2;
    CHECK_THROWS_AS(integrate_geodesic(sys, {0.5, 0.0, 0.3, 0.7}, 100.0, opts), StepFailure);
}
