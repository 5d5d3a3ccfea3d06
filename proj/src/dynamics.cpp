#include "sirev/dynamics.hpp"

#include <boost/numeric/odeint.hpp>

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <ostream>

#include "sirev/errors.hpp"

namespace sirev {

double hamiltonian(const ModelSpec& m, const PhasePoint& z) {
    m.profile.check_domain(z.a);
    const double pi = z.a * z.pa / m.profile.xdot(z.a);
    return pi * pi + z.a * z.py * z.py;
}

double poisson_bracket(const Observable& f, const Observable& g, const PhasePoint& z) {
    return poisson(f(z), g(z));
}

namespace {

using State = std::array<double, 4>;

// Hamilton's equations from the analytic gradient of H; raw profile
// evaluation so trial steps may probe past soft endpoints.
struct Flow {
    const ModelSpec* m;

    void operator()(const State& s, State& dsdt, double /*t*/) const {
        const double a = s[0], pa = s[2], py = s[3];
        const double xd = m->profile.eval_raw(a, 1);
        const double xdd = m->profile.eval_raw(a, 2);
        const double pi = a * pa / xd;
        const double dH_da = 2.0 * pi * pi / a - 2.0 * pi * pi * xdd / xd + py * py;
        dsdt[0] = 2.0 * pi * a / xd;   // dH/dp_a
        dsdt[1] = 2.0 * a * py;        // dH/dp_y
        dsdt[2] = -dH_da;
        dsdt[3] = 0.0;                 // H independent of y
    }
};

}  // namespace

IntegrationResult integrate_geodesic(const IntegralSystem& sys, const PhasePoint& start,
                                     double T, const IntegrateOptions& opts) {
    namespace ode = boost::numeric::odeint;
    const ModelSpec& m = sys.model;
    if (!(T > 0.0)) throw Error("integration horizon must be positive");
    if (!(opts.tol > 0.0)) throw Error("tolerance must be positive");
    m.profile.check_domain(start.a);

    const double len = m.domain.length();
    double margin = opts.guard_margin >= 0.0 ? opts.guard_margin : 1e-6 * len;
    // Pole endpoints always keep the pole guard.
    auto is_pole = [&](double a_end) {
        for (const auto& p : m.profile.poles)
            if (std::abs(p.a0 - a_end) < 1e-12 * std::max(1.0, std::abs(a_end))) return true;
        return false;
    };
    const double lo_guard = m.domain.lo + (is_pole(m.domain.lo)
                                               ? std::max(margin, m.profile.pole_guard)
                                               : margin);
    const double hi_guard = m.domain.hi - (is_pole(m.domain.hi)
                                               ? std::max(margin, m.profile.pole_guard)
                                               : margin);

    Flow flow{&m};
    auto stepper = ode::make_dense_output(opts.tol, opts.tol,
                                          ode::runge_kutta_dopri5<State>());
    State s{start.a, start.y, start.pa, start.py};
    stepper.initialize(s, 0.0, std::min(1e-3 * T, 1e-3));

    struct Inv {
        const char* name;
        std::function<double(const IntegralSystem&, const PhasePoint&)> f;
    };
    const std::array<Inv, 4> invs{{
        {"H", [](const IntegralSystem& q, const PhasePoint& z) { return q.hamiltonian(z); }},
        {"P_y", [](const IntegralSystem&, const PhasePoint& z) { return z.py; }},
        {"S1", [](const IntegralSystem& q, const PhasePoint& z) { return q.eval_S1(z); }},
        {"S2", [](const IntegralSystem& q, const PhasePoint& z) { return q.eval_S2(z); }},
    }};

    DriftReport drift;
    drift.T_requested = T;
    std::array<double, 4> init{};
    for (size_t i = 0; i < 4; ++i) {
        init[i] = invs[i].f(sys, start);
        drift.entries.push_back({invs[i].name, init[i], 0.0});
    }
    auto record_drift = [&](const PhasePoint& z) {
        for (size_t i = 0; i < 4; ++i) {
            const double v = invs[i].f(sys, z);
            const double scale = std::max(std::abs(init[i]), 1e-300);
            drift.entries[i].max_rel_drift =
                std::max(drift.entries[i].max_rel_drift, std::abs(v - init[i]) / scale);
        }
    };

    drift.min_dt = std::numeric_limits<double>::infinity();

    // Uniform samples are interpolated while the enclosing step is current;
    // the dense stepper only covers its latest interval.
    Trajectory tr;
    const int ns = std::max(2, opts.n_samples);
    const double dt_sample = T / ns;
    tr.samples.push_back({0.0, start});
    double next_sample = dt_sample;

    bool exited = false;
    double t_end = 0.0;
    while (stepper.current_time() < T) {
        if (drift.n_steps >= opts.max_steps) throw StepFailure("step budget exhausted");
        if (stepper.current_time_step() < 1e-14 * std::max(1.0, T))
            throw StepFailure("step size collapsed below tolerance floor");
        stepper.do_step(flow);
        ++drift.n_steps;
        const double dt = stepper.current_time_step();
        drift.min_dt = std::min(drift.min_dt, dt);
        drift.max_dt = std::max(drift.max_dt, dt);

        const double tcur = stepper.current_time();
        const State& cur = stepper.current_state();
        if (!(cur[0] > lo_guard && cur[0] < hi_guard)) exited = true;
        t_end = std::min(tcur, T);

        while (next_sample <= t_end) {
            State si;
            stepper.calc_state(next_sample, si);
            tr.samples.push_back({next_sample, PhasePoint{si[0], si[1], si[2], si[3]}});
            next_sample += dt_sample;
        }

        if (exited) break;
        if (tcur <= T) {
            record_drift(PhasePoint{cur[0], cur[1], cur[2], cur[3]});
        } else {
            State si;
            stepper.calc_state(T, si);
            record_drift(PhasePoint{si[0], si[1], si[2], si[3]});
        }
    }
    if (!exited) {
        t_end = T;
        if (tr.samples.back().t < T - 1e-12 * T) {
            State si;
            stepper.calc_state(T, si);
            tr.samples.push_back({T, PhasePoint{si[0], si[1], si[2], si[3]}});
        }
    }

    drift.T_integrated = t_end;
    drift.domain_exit = exited;
    if (drift.n_steps == 0) drift.min_dt = 0.0;
    tr.domain_exit = exited;
    tr.T = t_end;
    return {std::move(tr), std::move(drift)};
}

void write_trajectory_csv(std::ostream& os, const IntegralSystem& sys, const Trajectory& tr) {
    os << "t,a,y,p_a,p_y,H,P_y,S1,S2\n";
    os.precision(17);
    for (const auto& s : tr.samples) {
        const auto& z = s.z;
        os << s.t << ',' << z.a << ',' << z.y << ',' << z.pa << ',' << z.py << ','
           << sys.hamiltonian(z) << ',' << z.py << ',' << sys.eval_S1(z) << ','
           << sys.eval_S2(z) << '\n';
    }
}

int independence_rank(const IntegralSystem& sys, const PhasePoint& z, double rel_tol) {
    const Jet rows[3] = {sys.H_jet(z), sys.Py_jet(z), sys.S1_jet(z)};
    Eigen::Matrix<double, 3, 4> J;
    for (int r = 0; r < 3; ++r) {
        J(r, 0) = rows[r].da;
        J(r, 1) = rows[r].dy;
        J(r, 2) = rows[r].dpa;
        J(r, 3) = rows[r].dpy;
    }
    Eigen::JacobiSVD<Eigen::Matrix<double, 3, 4>> svd(J);
    const auto& sv = svd.singularValues();
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > rel_tol * sv(0)) ++rank;
    return rank;
}

}  // namespace sirev
