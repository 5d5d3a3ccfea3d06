#pragma once

#include <optional>
#include <vector>

#include "sirev/rational.hpp"
#include "sirev/types.hpp"

namespace sirev {

// One simple real zero a_i of F with its orientation eps_i (Delta_i =
// eps_i (a - a_i) must stay positive on the working interval) and the
// amplitude xi_i of the attached profile term xi_i Delta_i^{-1/2}.
struct SimpleRoot {
    Rational a;
    int eps = +1;
    double xi = 0.0;
};

// Real zero of multiplicity r >= 2; amplitudes mu[k-1] attach to
// Delta^{-(k-1/2)} for k = 1..r.
struct MultipleBlock {
    Rational a;
    int eps = +1;
    int r = 2;
    std::vector<double> mu;
};

// Conjugate pair (a^2 + scale^2)^r; amplitudes attach to the real and
// imaginary parts of (scale + i a)^{-(k-1/2)} for k = 1..r.
struct ComplexBlock {
    double scale = 1.0;
    int r = 1;
    std::vector<double> mu_plus, mu_minus;
};

// The polynomial F(a) = leading * (simple factors) * (multiple factor) *
// (complex-pair factors).  It fixes both the string of constants A_k in G
// and the linear ODE obeyed by the radial profile.
struct StructurePoly {
    std::vector<SimpleRoot> simple;
    std::optional<MultipleBlock> multiple;
    std::vector<ComplexBlock> pairs;
    double leading = 1.0;  // A_n

    int degree() const;
    bool is_simple() const { return !multiple.has_value() && pairs.empty(); }

    // Ascending coefficients A_0..A_n of F, leading included.
    std::vector<double> coefficients() const;

    // F^{(m)}(a) / m!
    double dcoef(double a, int m) const;

    // True when at least one amplitude (xi or mu) is nonzero.
    bool has_amplitude() const;

    // Degree bookkeeping, eps in {-1,+1}, multiplicities, leading != 0.
    void validate() const;
};

// Simple-F convenience constructor: roots with orientations and amplitudes.
StructurePoly make_simple_poly(const std::vector<Rational>& roots, const std::vector<int>& eps,
                               const std::vector<double>& xi, double leading = 1.0);

}  // namespace sirev
