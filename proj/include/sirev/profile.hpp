#pragma once

#include <vector>

#include "sirev/structure.hpp"
#include "sirev/types.hpp"

namespace sirev {

// Tchebyshev polynomial of the second kind, with U_{-1} = 0.
double chebyshev_u(int k, double z);

// amp * Delta^{-(k-1/2)}, Delta = eps (a - a0).  k = 1 is the plain pole
// basis; k >= 2 arises from a real zero of multiplicity r >= k.
struct PoleTerm {
    double a0 = 0.0;
    int eps = +1;
    int k = 1;
    double amp = 0.0;

    double eval(double a, int order) const;
};

// Real/imaginary parts of (scale + i a)^{-(k-1/2)}, normalized so that the
// k = 1 real part equals sqrt(sqrt(a^2+scale^2)+scale) / sqrt(a^2+scale^2).
struct ComplexPairTerm {
    double scale = 1.0;
    int k = 1;
    double amp_re = 0.0;  // cosine-like component
    double amp_im = 0.0;  // sine-like component

    double eval(double a, int order) const;
};

// The radial profile x(a): a finite sum of closed-form basis terms whose
// derivatives of every order are analytic recurrences, plus the affine
// piece nu a / 2 present for odd-degree integrals.
struct RadialProfile {
    std::vector<PoleTerm> poles;
    std::vector<ComplexPairTerm> pairs;
    double nu = 0.0;
    Interval domain;
    double pole_guard = 1e-8;

    // d^order x / da^order; order 0 is x(a).  Throws OutOfDomain outside the
    // interval or within pole_guard of a pole.
    double eval(double a, int order = 0) const;

    // Same, also reporting the largest |basis term| for residual scaling.
    double eval(double a, int order, double& scale) const;

    double x(double a) const { return eval(a, 0); }
    double xdot(double a) const { return eval(a, 1); }
    double xddot(double a) const { return eval(a, 2); }

    // No domain check: used by the flow integrator whose trial evaluations
    // may probe slightly past a soft (non-pole) endpoint.
    double eval_raw(double a, int order) const;

    void check_domain(double a) const;
};

// Assembles the profile for the given structure polynomial and parity.
// Amplitudes come from the per-root fields of F; nu only enters for odd
// parity.  Throws DegenerateSpec when every amplitude vanishes (the
// constant-curvature case) or when odd parity comes with nu = 0.
RadialProfile build_profile(const StructurePoly& F, Parity parity, double nu, Interval domain);

// Op_k[F] x at a: sum_{s=0}^{k} F^{(k-s)}/(k-s)! * x^{(s)} / (1/2)_s.
double apply_opn(const StructurePoly& F, const RadialProfile& x, double a, int k);

// Same value normalized by the largest |summand| (cancellation-aware).
double apply_opn_rel(const StructurePoly& F, const RadialProfile& x, double a, int k);

}  // namespace sirev
