#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sirev/jet.hpp"
#include "sirev/model.hpp"
#include "sirev/symfun.hpp"

namespace sirev {

// Closed-form evaluators for the conserved quantities of a simple-F model:
//
//   G  = sum_k A_k H^k P_y^{2(n-k)}            (odd parity: one more P_y)
//   Q1 = sum_k btilde_k H^{n-k} Pi P_y^{...}   Pi = a p_a / xdot
//   Q2 = sum_k ctilde_k H^{n-k} P_y^{...}
//   S1 = Q1 + y G,  S2 = Q2 + y Q1 + y^2 G / 2
//
// k runs over 1..n for even parity and 0..n for odd parity.  All coefficient
// functions and their a-derivatives are closed forms in the symmetric
// functions of the roots; nothing here differentiates numerically.
//
// Normalization: the leading coefficient A_n of F is kept explicit, and nu
// is the profile's affine coefficient (x carries nu a/2).  The constant
// Pi-power coefficient of odd parity is then b_n = nu A_n, and every
// btilde_k / ctilde_k carries one overall factor A_n; the closed form of
// S1^2 - 2 G S2 scales with A_n^2.
struct IntegralSystem {
    ModelSpec model;
    SymTable<double> sym;       // monic table of the roots of F
    std::vector<double> roots;
    std::vector<int> eps;
    std::vector<double> xi;
    std::vector<double> A;      // A_0..A_n, leading included
    bool degenerate = false;    // odd system assembled with nu = 0

    int n() const { return model.n; }
    int kmin() const { return model.parity == Parity::Even ? 1 : 0; }
    double leading() const { return model.F.leading; }

    double delta(int i, double a) const { return eps[size_t(i)] * (a - roots[size_t(i)]); }

    double btilde(int k, double a) const;
    double btilde_da(int k, double a) const;
    double ctilde(int k, double a) const;
    double ctilde_da(int k, double a) const;  // equals -btilde * xdot

    // Coefficients b_k of the Pi-power form of Q1, from the generic solution
    // of the differential system (valid for any F).  Even parity: k = 1..n;
    // odd parity: k = 0..n-1 with b_n = nu A_n constant.
    double b_pi(int k, double a) const;
    double b_pi_da(int k, double a) const;

    double hamiltonian(const PhasePoint& z) const;
    double eval_G(double H, double py) const;
    double eval_Q1(const PhasePoint& z) const;
    double eval_Q2(const PhasePoint& z) const;
    double eval_S1(const PhasePoint& z) const;
    double eval_S2(const PhasePoint& z) const;

    Jet H_jet(const PhasePoint& z) const;
    Jet Py_jet(const PhasePoint& z) const;
    Jet G_jet(const PhasePoint& z) const;
    Jet Q1_jet(const PhasePoint& z) const;
    Jet Q2_jet(const PhasePoint& z) const;
    Jet S1_jet(const PhasePoint& z) const;
    Jet S2_jet(const PhasePoint& z) const;

    // Q_kl = (-1)^{k+l+1} sum_i eps_i xi_i^2 sigma^i_{k-1} sigma^i_{l-1}
    double qkl(int k, int l) const;

    // S1^2 - 2 G S2 minus its closed form, normalized by the largest
    // monomial in the identity.  Must vanish for both parities.
    double algebraic_relation_residual(const PhasePoint& z) const;
};

// Assembles the evaluators.  Throws NotSimple when F has a multiple real
// zero or a complex pair (no closed-form integral coefficients exist then),
// DegenerateSpec when every xi vanishes.
IntegralSystem build_system(const ModelSpec& model);

// Odd system over the same F via the structural map x -> nu a / 2 + x,
// beta_k -> nu A_n sigma_k + beta_k.  nu = 0 yields a flagged degenerate
// system (identical coefficients, no genuine odd integral).
IntegralSystem odd_from_even(const IntegralSystem& even_sys, double nu);

struct CheckLine {
    std::string name;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass() const { return max_residual <= tolerance; }
};

struct DefiningSystemReport {
    std::vector<CheckLine> lines;
    bool all_pass() const {
        for (const auto& l : lines)
            if (!l.pass()) return false;
        return true;
    }
};

// Verifies the differential systems defining Q1 at sampled interior points:
// the Pi-form system for the b_k, the beta-form system for the btilde_k, and
// the relation D_a ctilde_k = -btilde_k xdot, each line both from closed
// forms and against central finite differences.
DefiningSystemReport check_defining_systems(const IntegralSystem& sys, int npoints = 50,
                                            std::uint64_t seed = 42, double tol = 1e-9);

}  // namespace sirev
