#include "sirev/sampling.hpp"

#include <algorithm>
#include <cmath>

namespace sirev {

std::vector<Rational> random_distinct_rationals(Rng& rng, int n, int num_max, int den_max) {
    std::vector<Rational> out;
    while (int(out.size()) < n) {
        int p = rng.uniform_int(-num_max, num_max);
        int q = rng.uniform_int(1, den_max);
        Rational r(p, q);
        if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
    }
    return out;
}

PhasePoint random_phase_point(Rng& rng, const ModelSpec& m, double h_min, double h_max) {
    const double lo = m.domain.at(0.1), hi = m.domain.at(0.9);
    for (int tries = 0; tries < 100; ++tries) {
        PhasePoint z;
        z.a = rng.uniform(lo, hi);
        z.y = rng.normal();
        z.pa = rng.normal();
        z.py = rng.normal();
        const double pi = z.a * z.pa / m.profile.xdot(z.a);
        const double H = pi * pi + z.a * z.py * z.py;
        if (H <= 0.0) continue;
        const double target = rng.uniform(h_min, h_max);
        const double s = std::sqrt(target / H);
        z.pa *= s;
        z.py *= s;
        return z;
    }
    throw Error("failed to sample a phase point with positive energy");
}

}  // namespace sirev
