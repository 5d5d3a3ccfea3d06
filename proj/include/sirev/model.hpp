#pragma once

#include "sirev/profile.hpp"
#include "sirev/structure.hpp"
#include "sirev/types.hpp"

namespace sirev {

// One superintegrable system: parity and degree, the structure polynomial F,
// the radial profile solving the linearizing ODE, and the working interval.
struct ModelSpec {
    Parity parity = Parity::Even;
    int n = 1;                 // integrals have momentum degree 2n (even) or 2n+1 (odd)
    StructurePoly F;
    RadialProfile profile;
    Interval domain;
    double nu = 0.0;           // affine profile coefficient, odd parity only

    // Degree 2n or 2n+1 of the integrals S1, S2.
    int momentum_degree() const { return parity == Parity::Even ? 2 * n : 2 * n + 1; }

    void validate() const;
};

// Builds the profile from F and validates the assembled model.
ModelSpec make_model(Parity parity, StructurePoly F, double nu, Interval domain);

// Raw residual of the linearizing ODE at a.  Even parity: Op_n[F]x, which
// must vanish.  Odd parity: Op_n[F]x - (n + 1/2) nu A_n a, which must be
// constant in a (the constant is nu A_{n-1}).
double ode_residual(const ModelSpec& m, double a);

// Residual normalized by the largest |summand| of Op_n; for odd parity the
// constant part is removed so the scaled value must be ~0 as well.
double ode_residual_rel(const ModelSpec& m, double a);

}  // namespace sirev
