#pragma once

#include <cmath>

#include "sirev/types.hpp"

namespace sirev {

// Value plus analytic first partials with respect to (a, y, p_a, p_y).
// Coefficient functions of a enter through jet_coef with their closed-form
// derivative, so every observable built from Jets carries exact gradients.
struct Jet {
    double v = 0.0;
    double da = 0.0, dy = 0.0, dpa = 0.0, dpy = 0.0;

    Jet operator-() const { return {-v, -da, -dy, -dpa, -dpy}; }

    friend Jet operator+(const Jet& x, const Jet& y) {
        return {x.v + y.v, x.da + y.da, x.dy + y.dy, x.dpa + y.dpa, x.dpy + y.dpy};
    }
    friend Jet operator-(const Jet& x, const Jet& y) {
        return {x.v - y.v, x.da - y.da, x.dy - y.dy, x.dpa - y.dpa, x.dpy - y.dpy};
    }
    friend Jet operator*(const Jet& x, const Jet& y) {
        return {x.v * y.v,
                x.da * y.v + x.v * y.da, x.dy * y.v + x.v * y.dy,
                x.dpa * y.v + x.v * y.dpa, x.dpy * y.v + x.v * y.dpy};
    }
    friend Jet operator*(double c, const Jet& x) { return {c * x.v, c * x.da, c * x.dy, c * x.dpa, c * x.dpy}; }
    friend Jet operator*(const Jet& x, double c) { return c * x; }
    friend Jet operator/(const Jet& x, const Jet& y) {
        const double inv = 1.0 / y.v;
        const double q = x.v * inv;
        return {q,
                (x.da - q * y.da) * inv, (x.dy - q * y.dy) * inv,
                (x.dpa - q * y.dpa) * inv, (x.dpy - q * y.dpy) * inv};
    }

    friend Jet pow_int(const Jet& x, int k) {
        if (k == 0) return {1.0, 0, 0, 0, 0};
        Jet r = x;
        for (int t = 1; t < k; ++t) r = r * x;
        return r;
    }
};

inline Jet jet_const(double c) { return {c, 0, 0, 0, 0}; }
// Coefficient function of a with its analytic a-derivative.
inline Jet jet_coef(double value, double dvda) { return {value, dvda, 0, 0, 0}; }

inline Jet jet_a(const PhasePoint& z) { return {z.a, 1, 0, 0, 0}; }
inline Jet jet_y(const PhasePoint& z) { return {z.y, 0, 1, 0, 0}; }
inline Jet jet_pa(const PhasePoint& z) { return {z.pa, 0, 0, 1, 0}; }
inline Jet jet_py(const PhasePoint& z) { return {z.py, 0, 0, 0, 1}; }

// Canonical bracket {f, g} = f_a g_pa - f_pa g_a + f_y g_py - f_py g_y.
inline double poisson(const Jet& f, const Jet& g) {
    return f.da * g.dpa - f.dpa * g.da + f.dy * g.dpy - f.dpy * g.dy;
}

// Largest magnitude among the four bracket contributions; used to express
// bracket residuals relative to the cancelling terms.
inline double poisson_scale(const Jet& f, const Jet& g) {
    const double t1 = std::abs(f.da * g.dpa), t2 = std::abs(f.dpa * g.da);
    const double t3 = std::abs(f.dy * g.dpy), t4 = std::abs(f.dpy * g.dy);
    return std::max(std::max(t1, t2), std::max(t3, t4));
}

}  // namespace sirev
