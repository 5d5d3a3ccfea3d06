#pragma once

#include <vector>

#include "sirev/integrals.hpp"
#include "sirev/rational.hpp"

namespace sirev {

// Degree reduction A_n -> 0, xi_n -> 0: the degree-2n system collapses onto
// the degree-2(n-1) system with Q factoring as p_y^2 times the lower
// integral.  Two independent verification paths:
//
//  * exact: substitute A_n = 0 in the coefficient parametrization and
//    compare the full coefficient tables of upper and lower systems in
//    rational arithmetic (the runaway root never needs to be represented);
//  * numeric: solve for the runaway root at small A_n = xi_n = eps and
//    watch the phase-space residuals shrink linearly in eps.

struct CascadePair {
    IntegralSystem lower;               // even system of degree n-1
    std::vector<double> lower_coeffs;   // A_0..A_{n-1} of the lower F
    int upper_n() const { return lower.n() + 1; }
};

CascadePair make_cascade_pair(const IntegralSystem& lower);

struct UpperSystem {
    IntegralSystem sys;
    double runaway_root = 0.0;
    std::vector<int> match;  // upper index of each surviving lower root
};

// Upper system with A_n = eps_An (coefficientwise F_up = F_low + eps a^n),
// roots recovered from the companion matrix, xi_n = eps_xi on the runaway.
UpperSystem upper_at(const CascadePair& pair, double eps_An, double eps_xi);

struct SigmaLimitSample {
    double lhs = 0.0;       // A_n sigma^{i(n)}_l with the runaway root resolved
    double rhs = 0.0;       // -A_{n-1} sigma^{i(n-1)}_{l-1}
    double residual = 0.0;
};

// i indexes a surviving (lower) root, 1 <= l <= n-1.
SigmaLimitSample sigma_limit_sample(const CascadePair& pair, const UpperSystem& up, int i, int l);

struct CascadeRow {
    double eps;
    double q1_resid;  // |Q1_up - p_y^2 Q1_low| at the probe point
    double q2_resid;
};

struct CascadeReport {
    std::vector<CascadeRow> rows;
    double order_q1 = 0.0;  // empirical convergence order (expect ~1)
    double order_q2 = 0.0;

    // Residual ratios between consecutive eps levels stay within a factor
    // [lo, hi] of the eps ratio itself.
    bool ratios_ok(double lo = 0.5, double hi = 2.0) const;
};

CascadeReport cascade_check(const CascadePair& pair, const PhasePoint& z,
                            const std::vector<double>& eps_seq = {1e-3, 1e-4, 1e-5});

struct ExactCascadeCheck {
    int upper_n = 0;
    int entries_checked = 0;
    int mismatches = 0;
    bool pass() const { return mismatches == 0 && entries_checked > 0; }
};

// Compares every btilde / ctilde coefficient of LIM(upper) against the
// lower system, entry by entry, as exact rationals over the function basis
// {xi_i / sqrt(Delta_i)}, {xi_i^2 / Delta_i}, {xi_i xi_j / sqrt(Delta_i Delta_j)}
// with polynomial-in-a entries of degree <= 1.
ExactCascadeCheck cascade_exact_check(const std::vector<Rational>& lower_roots,
                                      const Rational& lower_leading);

}  // namespace sirev
