#pragma once

#include <cmath>

namespace sirev {

enum class Parity { Even, Odd };

// Open interval of the radial coordinate a; metrics require a > 0.
struct Interval {
    double lo = 0.0;
    double hi = 1.0;

    double length() const { return hi - lo; }
    double midpoint() const { return 0.5 * (lo + hi); }
    bool contains(double a) const { return a > lo && a < hi; }
    // Fraction f in (0,1) mapped linearly into the interval.
    double at(double f) const { return lo + f * (hi - lo); }
};

// Canonical coordinates on the cotangent bundle chart (a, y, p_a, p_y).
struct PhasePoint {
    double a = 0.0;
    double y = 0.0;
    double pa = 0.0;
    double py = 0.0;
};

inline double pochhammer(double z, int s) {
    double p = 1.0;
    for (int t = 0; t < s; ++t) p *= z + t;
    return p;
}

inline double factorial(int k) {
    double f = 1.0;
    for (int t = 2; t <= k; ++t) f *= t;
    return f;
}

}  // namespace sirev
