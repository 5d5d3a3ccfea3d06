#pragma once

#include <functional>
#include <string>

#include "sirev/model.hpp"

namespace sirev {

// Scalar curvature of g = xdot^2/a^2 da^2 + dy^2/a:
//   R = -(2 a xddot + xdot) / (2 xdot^3)
double scalar_curvature(const ModelSpec& m, double a);

struct Embedded {
    double X, Y, Z;
};

// Isometric embedding into R^{2,1} (g = dX^2 + dY^2 - dZ^2):
//   X = y/sqrt(a),  Y - Z = -1/sqrt(a),
//   Y + Z = y^2/sqrt(a) + 2 * integral of xdot^2/sqrt(a) from the domain
//   midpoint (adaptive quadrature).
class EmbeddingR21 {
public:
    explicit EmbeddingR21(const ModelSpec& m, double quad_tol = 1e-12);

    Embedded operator()(double a, double y) const;

    // Max relative deviation between the finite-difference pullback of the
    // flat R^{2,1} metric and g at (a, y).
    double pullback_residual(double a, double y) const;

private:
    const ModelSpec* m_;
    double a_ref_;
    double quad_tol_;

    double profile_integral(double a) const;
};

struct Endpoint {
    enum Type { FiniteRoot, Zero, Infinity } type = Zero;
    double a1 = 0.0;  // only for FiniteRoot
};

enum class EndpointClass { CurvatureSingular, Removable, Inconclusive };

struct EndpointFit {
    double alpha = 0.0;   // fitted exponent of |xdot|
    double r2 = 0.0;      // regression quality
    EndpointClass cls = EndpointClass::Inconclusive;
};

// The classification rule alone, for a known exponent:
//   FiniteRoot (a1 != 0): singular iff alpha > 1
//   Zero:                 singular iff alpha > 0
//   Infinity:             singular iff alpha < 0 and alpha != -1/2;
//                         alpha = -1/2 needs a model-specific analysis.
// Everything else is Inconclusive.
EndpointClass classify_exponent(const Endpoint& ep, double alpha, double band = 1e-3);

// Fits |xdot| ~ h^alpha over 20 log-spaced samples within a decade of the
// endpoint and applies the rule.  Throws FitFailure when the log-log
// regression has R^2 < 0.999.
EndpointFit classify_endpoint(const ModelSpec& m, const Endpoint& ep);

// A coordinate chart w -> a with its derivative; the metric pulls back to
//   g = metric_ww dw^2 + dy^2 / a.
struct Chart {
    std::string name;
    std::function<double(double)> a_of_w;
    std::function<double(double)> da_dw;
    Interval w_range;
};

double metric_ww(const ModelSpec& m, const Chart& chart, double w);

}  // namespace sirev
