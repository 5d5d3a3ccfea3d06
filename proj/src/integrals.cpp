#include "sirev/integrals.hpp"

#include <cmath>
#include <random>

#include "sirev/errors.hpp"

namespace sirev {

namespace {
inline double sgn_pow(int k) { return (k % 2 == 0) ? 1.0 : -1.0; }
}

double IntegralSystem::btilde(int k, double a) const {
    double t = 0.0;
    for (size_t i = 0; i < roots.size(); ++i)
        t += xi[i] * sym.sig_i(int(i), k - 1) / std::sqrt(delta(int(i), a));
    if (model.parity == Parity::Odd) t += model.nu * sym.sig(k);
    return sgn_pow(k) * leading() * t;
}

double IntegralSystem::btilde_da(int k, double a) const {
    double t = 0.0;
    for (size_t i = 0; i < roots.size(); ++i) {
        const double d = delta(int(i), a);
        t += xi[i] * sym.sig_i(int(i), k - 1) * (-0.5 * eps[i]) * std::pow(d, -1.5);
    }
    return sgn_pow(k) * leading() * t;
}

double IntegralSystem::ctilde(int k, double a) const {
    double t = 0.0;
    const int nn = n();
    for (int i = 0; i < nn; ++i) {
        const double di = delta(i, a);
        t += xi[size_t(i)] * xi[size_t(i)] / di * sym.sig_i(i, k - 1);
        for (int j = 0; j < nn; ++j) {
            if (i == j) continue;
            const double dj = delta(j, a);
            t += xi[size_t(i)] * xi[size_t(j)] / std::sqrt(di * dj) *
                 (sym.sig_ij(i, j, k - 1) + a * sym.sig_ij(i, j, k - 2));
        }
    }
    if (model.parity == Parity::Odd) {
        t += model.nu * model.nu * a * sym.sig(k);
        for (int i = 0; i < nn; ++i)
            t += 2.0 * model.nu * xi[size_t(i)] / std::sqrt(delta(i, a)) *
                 (sym.sig_i(i, k) + a * sym.sig_i(i, k - 1));
    }
    return -sgn_pow(k) * 0.5 * leading() * t;
}

double IntegralSystem::ctilde_da(int k, double a) const {
    return -btilde(k, a) * model.profile.xdot(a);
}

double IntegralSystem::b_pi(int k, double a) const {
    if (model.parity == Parity::Odd && k == n()) return model.nu * leading();
    // even: b_k = sum_{s=1}^{k} F^{(k-s)}/(k-s)! x^{(s)}/(1/2)_s
    // odd:  b_k = sum_{s=1}^{k+1} F^{(k+1-s)}/(k+1-s)! x^{(s)}/(1/2)_s
    const int top = (model.parity == Parity::Even) ? k : k + 1;
    double t = 0.0;
    for (int s = 1; s <= top; ++s)
        t += model.F.dcoef(a, top - s) * model.profile.eval(a, s) / pochhammer(0.5, s);
    return t;
}

double IntegralSystem::b_pi_da(int k, double a) const {
    if (model.parity == Parity::Odd && k == n()) return 0.0;
    const int top = (model.parity == Parity::Even) ? k : k + 1;
    double t = 0.0;
    for (int s = 1; s <= top; ++s) {
        t += (top - s + 1) * model.F.dcoef(a, top - s + 1) * model.profile.eval(a, s) /
             pochhammer(0.5, s);
        t += model.F.dcoef(a, top - s) * model.profile.eval(a, s + 1) / pochhammer(0.5, s);
    }
    return t;
}

double IntegralSystem::hamiltonian(const PhasePoint& z) const {
    const double pi = z.a * z.pa / model.profile.xdot(z.a);
    return pi * pi + z.a * z.py * z.py;
}

double IntegralSystem::eval_G(double H, double py) const {
    double t = 0.0;
    for (int k = n(); k >= 0; --k) t = t * H + A[size_t(k)] * std::pow(py, 2 * (n() - k));
    return (model.parity == Parity::Odd) ? t * py : t;
}

double IntegralSystem::eval_Q1(const PhasePoint& z) const {
    const double H = hamiltonian(z);
    const double pi = z.a * z.pa / model.profile.xdot(z.a);
    const int off = (model.parity == Parity::Even) ? -1 : 0;
    double t = 0.0;
    for (int k = kmin(); k <= n(); ++k)
        t += btilde(k, z.a) * std::pow(H, n() - k) * std::pow(z.py, 2 * k + off);
    return t * pi;
}

double IntegralSystem::eval_Q2(const PhasePoint& z) const {
    const double H = hamiltonian(z);
    const int off = (model.parity == Parity::Even) ? 0 : 1;
    double t = 0.0;
    for (int k = kmin(); k <= n(); ++k)
        t += ctilde(k, z.a) * std::pow(H, n() - k) * std::pow(z.py, 2 * k + off);
    return t;
}

double IntegralSystem::eval_S1(const PhasePoint& z) const {
    return eval_Q1(z) + z.y * eval_G(hamiltonian(z), z.py);
}

double IntegralSystem::eval_S2(const PhasePoint& z) const {
    return eval_Q2(z) + z.y * eval_Q1(z) + 0.5 * z.y * z.y * eval_G(hamiltonian(z), z.py);
}

Jet IntegralSystem::H_jet(const PhasePoint& z) const {
    model.profile.check_domain(z.a);
    const Jet a = jet_a(z), pa = jet_pa(z), py = jet_py(z);
    const Jet xd = jet_coef(model.profile.xdot(z.a), model.profile.xddot(z.a));
    const Jet pi = a * pa / xd;
    return pi * pi + a * py * py;
}

Jet IntegralSystem::Py_jet(const PhasePoint& z) const { return jet_py(z); }

Jet IntegralSystem::G_jet(const PhasePoint& z) const {
    const Jet H = H_jet(z), py = jet_py(z);
    Jet t = jet_const(0.0);
    for (int k = 0; k <= n(); ++k)
        t = t + A[size_t(k)] * pow_int(H, k) * pow_int(py, 2 * (n() - k));
    return (model.parity == Parity::Odd) ? t * py : t;
}

Jet IntegralSystem::Q1_jet(const PhasePoint& z) const {
    const Jet H = H_jet(z), py = jet_py(z);
    const Jet xd = jet_coef(model.profile.xdot(z.a), model.profile.xddot(z.a));
    const Jet pi = jet_a(z) * jet_pa(z) / xd;
    const int off = (model.parity == Parity::Even) ? -1 : 0;
    Jet t = jet_const(0.0);
    for (int k = kmin(); k <= n(); ++k) {
        const Jet bk = jet_coef(btilde(k, z.a), btilde_da(k, z.a));
        t = t + bk * pow_int(H, n() - k) * pow_int(py, 2 * k + off);
    }
    return t * pi;
}

Jet IntegralSystem::Q2_jet(const PhasePoint& z) const {
    const Jet H = H_jet(z), py = jet_py(z);
    const int off = (model.parity == Parity::Even) ? 0 : 1;
    Jet t = jet_const(0.0);
    for (int k = kmin(); k <= n(); ++k) {
        const Jet ck = jet_coef(ctilde(k, z.a), ctilde_da(k, z.a));
        t = t + ck * pow_int(H, n() - k) * pow_int(py, 2 * k + off);
    }
    return t;
}

Jet IntegralSystem::S1_jet(const PhasePoint& z) const {
    return Q1_jet(z) + jet_y(z) * G_jet(z);
}

Jet IntegralSystem::S2_jet(const PhasePoint& z) const {
    const Jet y = jet_y(z);
    return Q2_jet(z) + y * Q1_jet(z) + 0.5 * y * y * G_jet(z);
}

double IntegralSystem::qkl(int k, int l) const {
    double t = 0.0;
    for (size_t i = 0; i < roots.size(); ++i)
        t += eps[i] * xi[i] * xi[i] * sym.sig_i(int(i), k - 1) * sym.sig_i(int(i), l - 1);
    return sgn_pow(k + l + 1) * t;
}

double IntegralSystem::algebraic_relation_residual(const PhasePoint& z) const {
    const double H = hamiltonian(z);
    const double S1 = eval_S1(z), S2 = eval_S2(z), G = eval_G(H, z.py);
    const double An2 = leading() * leading();
    const int nn = n();
    double rhs = 0.0;
    double scale = std::max(std::abs(S1 * S1), std::abs(2.0 * G * S2));
    const int pyoff = (model.parity == Parity::Even) ? 0 : 2;
    for (int k = 1; k <= nn; ++k)
        for (int l = 1; l <= nn; ++l) {
            const double mono = An2 * qkl(k, l) * std::pow(H, 2 * nn - k - l) *
                                std::pow(z.py, 2 * (k + l) + pyoff);
            rhs += mono;
            scale = std::max(scale, std::abs(mono));
        }
    if (model.parity == Parity::Odd) {
        const double nu2 = model.nu * model.nu;
        for (int k = 0; k <= nn; ++k)
            for (int l = 0; l <= nn; ++l) {
                const double mono = An2 * nu2 * sgn_pow(k + l) * sym.sig(k) * sym.sig(l) *
                                    std::pow(H, 2 * nn + 1 - k - l) * std::pow(z.py, 2 * (k + l));
                rhs += mono;
                scale = std::max(scale, std::abs(mono));
            }
    }
    const double resid = S1 * S1 - 2.0 * G * S2 - rhs;
    return (scale > 0.0) ? resid / scale : resid;
}

IntegralSystem build_system(const ModelSpec& model) {
    if (!model.F.is_simple())
        throw NotSimple("no closed-form integral coefficients for a non-simple F");
    bool any_xi = false;
    for (const auto& s : model.F.simple) any_xi = any_xi || s.xi != 0.0;
    if (!any_xi) throw DegenerateSpec("all xi vanish");
    model.validate();

    IntegralSystem sys;
    sys.model = model;
    RootSet<double> rs;
    for (const auto& s : model.F.simple) {
        rs.roots.push_back(to_double(s.a));
        sys.eps.push_back(s.eps);
        sys.xi.push_back(s.xi);
    }
    sys.roots = rs.roots;
    sys.sym = build_sym_table(rs, model.n >= 2);
    sys.A = model.F.coefficients();
    return sys;
}

IntegralSystem odd_from_even(const IntegralSystem& even_sys, double nu) {
    if (even_sys.model.parity != Parity::Even) throw Error("odd_from_even needs an even system");
    IntegralSystem sys = even_sys;
    sys.model.parity = Parity::Odd;
    sys.model.nu = nu;
    sys.model.profile.nu = nu;
    sys.degenerate = (nu == 0.0);
    return sys;
}

namespace {

struct LineAcc {
    CheckLine line;
    void update(double resid, double scale) {
        const double r = (scale > 0.0) ? std::abs(resid) / scale : std::abs(resid);
        line.max_residual = std::max(line.max_residual, r);
    }
};

}  // namespace

DefiningSystemReport check_defining_systems(const IntegralSystem& sys, int npoints,
                                            std::uint64_t seed, double tol) {
    const int n = sys.n();
    const auto& m = sys.model;
    const bool even = m.parity == Parity::Even;
    const double fd_tol = std::max(tol, 1e-7);  // finite differences carry their own noise

    std::vector<LineAcc> acc;
    auto add = [&](const std::string& name, double t) {
        acc.push_back({CheckLine{name, 0.0, t}});
        return acc.size() - 1;
    };

    const size_t l_first = add(even ? "b1 = 2 F xdot" : "b0 = 2 F xdot", tol);
    const size_t l_chain = add("bdot_k chain", tol);
    const size_t l_last = add(even ? "bdot_n = -A_n xdot" : "b_n const", tol);
    const size_t l_chain_fd = add("bdot_k vs finite differences", fd_tol);
    const size_t l_beta = add("beta chain", tol);
    const size_t l_beta_end = add("beta endpoint", tol);
    const size_t l_ct = add("D_a ctilde_k = -btilde_k xdot (fd)", fd_tol);

    std::mt19937_64 eng(seed);
    std::uniform_real_distribution<double> unif(0.1, 0.9);
    const double h = 1e-6 * m.domain.length();

    for (int p = 0; p < npoints; ++p) {
        const double a = m.domain.at(unif(eng));
        if (!m.domain.contains(a - 2 * h) || !m.domain.contains(a + 2 * h)) continue;
        const double xd = m.profile.xdot(a);

        // Pi-form system
        {
            const int k0 = even ? 1 : 0;
            const double b_first = sys.b_pi(k0, a);
            const double rhs = 2.0 * m.F.dcoef(a, 0) * xd;
            acc[l_first].update(b_first - rhs, std::max(std::abs(b_first), std::abs(rhs)));
        }
        for (int k = even ? 1 : 0; k <= n - 1; ++k) {
            // even: bdot_k = (k+1/2) b_{k+1} - F^{(k)}/k! xdot
            // odd:  bdot_k = (k+3/2) b_{k+1} - F^{(k+1)}/(k+1)! xdot  (system index shift)
            const int kk = even ? k : k + 1;
            const double lhs = sys.b_pi_da(k, a);
            const double t1 = (kk + 0.5) * sys.b_pi(k + 1, a);
            const double t2 = m.F.dcoef(a, kk) * xd;
            acc[l_chain].update(lhs - t1 + t2,
                                std::max({std::abs(lhs), std::abs(t1), std::abs(t2)}));
            const double fd = (sys.b_pi(k, a + h) - sys.b_pi(k, a - h)) / (2 * h);
            acc[l_chain_fd].update(lhs - fd, std::max(std::abs(lhs), std::abs(fd)));
        }
        if (even) {
            const double lhs = sys.b_pi_da(n, a);
            const double rhs = -m.F.leading * xd;
            acc[l_last].update(lhs - rhs, std::max(std::abs(lhs), std::abs(rhs)));
        } else {
            acc[l_last].update(sys.b_pi(n, a) - m.nu * m.F.leading, std::abs(m.nu * m.F.leading));
        }

        // beta-form system: beta_k = (-1)^k btilde_k
        auto beta = [&](int k, double aa) { return sgn_pow(k) * sys.btilde(k, aa); };
        auto beta_da = [&](int k, double aa) { return sgn_pow(k) * sys.btilde_da(k, aa); };
        const double An = m.F.leading;
        if (even) {
            acc[l_beta].update(beta_da(1, a) - An * xd,
                               std::max(std::abs(beta_da(1, a)), std::abs(An * xd)));
        } else {
            acc[l_beta].update(beta_da(0, a), std::abs(An * m.nu));
        }
        for (int k = even ? 1 : 0; k <= n - 1; ++k) {
            const double lhs = beta_da(k + 1, a);
            const double rhs = -a * beta_da(k, a) - 0.5 * beta(k, a) + An * sys.sym.sig(k) * xd;
            acc[l_beta].update(lhs - rhs, std::max(std::abs(lhs), std::abs(rhs)));
        }
        {
            const double v = -a * beta_da(n, a) - 0.5 * beta(n, a) + An * sys.sym.sig(n) * xd;
            const double s =
                std::max(std::abs(a * beta_da(n, a)), std::abs(An * sys.sym.sig(n) * xd));
            acc[l_beta_end].update(v, s);
        }

        // D_a ctilde_k = -btilde_k xdot, against central differences
        for (int k = sys.kmin(); k <= n; ++k) {
            const double fd = (sys.ctilde(k, a + h) - sys.ctilde(k, a - h)) / (2 * h);
            const double cf = sys.ctilde_da(k, a);
            acc[l_ct].update(cf - fd, std::max(std::abs(cf), std::abs(fd)));
        }
    }

    DefiningSystemReport rep;
    for (auto& la : acc) rep.lines.push_back(la.line);
    return rep;
}

}  // namespace sirev
