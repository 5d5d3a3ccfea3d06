#include "sirev/profile.hpp"

#include <cmath>
#include <complex>

#include "sirev/errors.hpp"

namespace sirev {

double chebyshev_u(int k, double z) {
    if (k == -1) return 0.0;
    if (k == 0) return 1.0;
    double um1 = 0.0, u = 1.0;
    for (int t = 1; t <= k; ++t) {
        double next = 2.0 * z * u - um1;
        um1 = u;
        u = next;
    }
    return u;
}

double PoleTerm::eval(double a, int order) const {
    const double delta = eps * (a - a0);
    const double sgn = (order % 2 == 0) ? 1.0 : -double(eps);
    return amp * sgn * pochhammer(k - 0.5, order) * std::pow(delta, -(k - 0.5) - order);
}

double ComplexPairTerm::eval(double a, int order) const {
    // theta-parametrization: scale + i a = rho e^{i theta}, theta in (-pi/2, pi/2)
    const double rho = std::hypot(scale, a);
    const double theta = std::atan2(a, scale);
    const double p = -(k - 0.5) - order;
    const double mag = std::pow(rho, p) * pochhammer(k - 0.5, order);
    // d^s (scale + ia)^{-(k-1/2)} = i^s (-1)^s (k-1/2)_s (scale + ia)^{p}
    const double phase = p * theta + order * (M_PI / 2.0);
    const double sgn = (order % 2 == 0) ? 1.0 : -1.0;
    const double re = sgn * mag * std::cos(phase);
    const double im = sgn * mag * std::sin(phase);
    return std::sqrt(2.0) * (amp_re * re - amp_im * im);
}

void RadialProfile::check_domain(double a) const {
    if (!domain.contains(a)) throw OutOfDomain("a outside profile domain");
    for (const auto& t : poles)
        if (std::abs(a - t.a0) < pole_guard) throw OutOfDomain("a within pole guard");
}

double RadialProfile::eval(double a, int order) const {
    double scale;
    return eval(a, order, scale);
}

double RadialProfile::eval_raw(double a, int order) const {
    double total = 0.0;
    for (const auto& t : poles) total += t.eval(a, order);
    for (const auto& t : pairs) total += t.eval(a, order);
    if (nu != 0.0 && order <= 1) total += (order == 0) ? nu * a / 2.0 : nu / 2.0;
    return total;
}

double RadialProfile::eval(double a, int order, double& scale) const {
    check_domain(a);
    double total = 0.0;
    scale = 0.0;
    for (const auto& t : poles) {
        const double v = t.eval(a, order);
        total += v;
        scale = std::max(scale, std::abs(v));
    }
    for (const auto& t : pairs) {
        const double v = t.eval(a, order);
        total += v;
        scale = std::max(scale, std::abs(v));
    }
    if (nu != 0.0 && order <= 1) {
        const double v = (order == 0) ? nu * a / 2.0 : nu / 2.0;
        total += v;
        scale = std::max(scale, std::abs(v));
    }
    return total;
}

RadialProfile build_profile(const StructurePoly& F, Parity parity, double nu, Interval domain) {
    F.validate();
    if (!F.has_amplitude())
        throw DegenerateSpec("all profile amplitudes vanish: constant-curvature case");
    if (parity == Parity::Odd && nu == 0.0)
        throw DegenerateSpec("odd parity needs nu != 0");

    RadialProfile x;
    x.domain = domain;
    x.nu = (parity == Parity::Odd) ? nu : 0.0;
    for (const auto& s : F.simple)
        x.poles.push_back({to_double(s.a), s.eps, 1, s.xi});
    if (F.multiple) {
        const double a1 = to_double(F.multiple->a);
        for (int k = 1; k <= F.multiple->r; ++k)
            x.poles.push_back({a1, F.multiple->eps, k, F.multiple->mu[size_t(k - 1)]});
    }
    for (const auto& p : F.pairs)
        for (int k = 1; k <= p.r; ++k)
            x.pairs.push_back({p.scale, k, p.mu_plus[size_t(k - 1)], p.mu_minus[size_t(k - 1)]});
    return x;
}

double apply_opn(const StructurePoly& F, const RadialProfile& x, double a, int k) {
    double total = 0.0;
    for (int s = 0; s <= k; ++s)
        total += F.dcoef(a, k - s) * x.eval(a, s) / pochhammer(0.5, s);
    return total;
}

double apply_opn_rel(const StructurePoly& F, const RadialProfile& x, double a, int k) {
    double total = 0.0, scale = 0.0;
    for (int s = 0; s <= k; ++s) {
        const double term = F.dcoef(a, k - s) * x.eval(a, s) / pochhammer(0.5, s);
        total += term;
        scale = std::max(scale, std::abs(term));
    }
    return (scale > 0.0) ? total / scale : total;
}

}  // namespace sirev
