#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "sirev/integrals.hpp"
#include "sirev/jet.hpp"
#include "sirev/model.hpp"

namespace sirev {

// H = Pi^2 + a p_y^2 with Pi = a p_a / xdot(a).
double hamiltonian(const ModelSpec& m, const PhasePoint& z);

using Observable = std::function<Jet(const PhasePoint&)>;

// {f, g} from the analytic partials carried by the jets.
double poisson_bracket(const Observable& f, const Observable& g, const PhasePoint& z);

struct IntegrateOptions {
    double tol = 1e-10;
    // Distance to the domain endpoints below which the trajectory is
    // declared exited; negative selects the default 1e-6 * interval length.
    // Pole endpoints always keep at least the profile's pole guard.
    double guard_margin = -1.0;
    std::size_t max_steps = 50'000'000;
    // Number of uniformly spaced samples kept for export (dense output).
    int n_samples = 1000;
};

struct TrajectorySample {
    double t;
    PhasePoint z;
};

struct DriftEntry {
    std::string name;
    double initial = 0.0;
    double max_rel_drift = 0.0;
};

struct DriftReport {
    std::vector<DriftEntry> entries;  // H, P_y, S1, S2
    double T_requested = 0.0;
    double T_integrated = 0.0;
    bool domain_exit = false;
    std::size_t n_steps = 0;
    double min_dt = 0.0, max_dt = 0.0;

    double max_drift() const {
        double d = 0.0;
        for (const auto& e : entries) d = std::max(d, e.max_rel_drift);
        return d;
    }
};

struct Trajectory {
    std::vector<TrajectorySample> samples;
    bool domain_exit = false;
    double T = 0.0;
};

struct IntegrationResult {
    Trajectory trajectory;
    DriftReport drift;
};

// Adaptive embedded 5(4) integration of Hamilton's equations with dense
// output.  Drift is measured at the accepted step endpoints; the samples
// are interpolated on a uniform grid.  Throws StepFailure when the step
// size collapses; domain exit is reported, not thrown.
IntegrationResult integrate_geodesic(const IntegralSystem& sys, const PhasePoint& start,
                                     double T, const IntegrateOptions& opts = {});

// CSV columns: t,a,y,p_a,p_y,H,P_y,S1,S2.
void write_trajectory_csv(std::ostream& os, const IntegralSystem& sys, const Trajectory& tr);

// Rank of the Jacobian of (H, P_y, S1) with respect to (a, y, p_a, p_y);
// rank 3 at generic points is the functional-independence certificate.
int independence_rank(const IntegralSystem& sys, const PhasePoint& z, double rel_tol = 1e-9);

}  // namespace sirev
