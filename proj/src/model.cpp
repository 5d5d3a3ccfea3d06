#include "sirev/model.hpp"

#include <cmath>

#include "sirev/errors.hpp"

namespace sirev {

void ModelSpec::validate() const {
    F.validate();
    if (n != F.degree()) throw Error("model degree n must equal deg F");
    if (n < 1) throw Error("n must be >= 1");
    if (!(domain.lo >= 0.0) || !(domain.hi > domain.lo))
        throw Error("domain must be an interval with a > 0");
    // Delta_i = eps_i (a - a_i) > 0 across the whole interval, and the
    // interval must not touch a pole.
    for (const auto& t : profile.poles) {
        if (t.eps == +1 && !(t.a0 <= domain.lo))
            throw Error("pole orientation: need a0 <= domain.lo for eps=+1");
        if (t.eps == -1 && !(t.a0 >= domain.hi))
            throw Error("pole orientation: need a0 >= domain.hi for eps=-1");
    }
    if (parity == Parity::Odd && nu == 0.0) throw DegenerateSpec("odd parity needs nu != 0");
    if (parity == Parity::Even && profile.nu != 0.0)
        throw Error("even parity profile cannot carry an affine term");
}

ModelSpec make_model(Parity parity, StructurePoly F, double nu, Interval domain) {
    ModelSpec m;
    m.parity = parity;
    m.n = F.degree();
    m.profile = build_profile(F, parity, nu, domain);
    m.F = std::move(F);
    m.domain = domain;
    m.nu = (parity == Parity::Odd) ? nu : 0.0;
    m.validate();
    return m;
}

double ode_residual(const ModelSpec& m, double a) {
    const double op = apply_opn(m.F, m.profile, a, m.n);
    if (m.parity == Parity::Even) return op;
    return op - (m.n + 0.5) * m.nu * m.F.leading * a;
}

double ode_residual_rel(const ModelSpec& m, double a) {
    double total = 0.0, scale = 0.0;
    for (int s = 0; s <= m.n; ++s) {
        const double term = m.F.dcoef(a, m.n - s) * m.profile.eval(a, s) / pochhammer(0.5, s);
        total += term;
        scale = std::max(scale, std::abs(term));
    }
    if (m.parity == Parity::Odd) {
        const auto c = m.F.coefficients();
        total -= (m.n + 0.5) * m.nu * m.F.leading * a;  // inhomogeneous part
        total -= m.nu * c[size_t(m.n - 1)];             // the constant nu A_{n-1}
    }
    return (scale > 0.0) ? total / scale : total;
}

}  // namespace sirev
