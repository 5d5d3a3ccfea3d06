#include "sirev/cascade.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

#include "sirev/errors.hpp"
#include "sirev/symfun.hpp"

namespace sirev {

CascadePair make_cascade_pair(const IntegralSystem& lower) {
    if (lower.model.parity != Parity::Even) throw Error("cascading is derived for even systems");
    CascadePair pair{lower, lower.model.F.coefficients()};
    return pair;
}

namespace {

std::vector<double> roots_of(const std::vector<double>& coeffs) {
    const int n = int(coeffs.size()) - 1;
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) C(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) C(i, n - 1) = -coeffs[size_t(i)] / coeffs[size_t(n)];
    Eigen::EigenSolver<Eigen::MatrixXd> es(C, false);
    std::vector<double> roots;
    for (int i = 0; i < n; ++i) {
        const auto ev = es.eigenvalues()(i);
        if (std::abs(ev.imag()) > 1e-8 * std::max(1.0, std::abs(ev.real())))
            throw Error("cascade polynomial developed complex roots");
        roots.push_back(ev.real());
    }
    return roots;
}

}  // namespace

UpperSystem upper_at(const CascadePair& pair, double eps_An, double eps_xi) {
    const auto& low = pair.lower;
    const int n = pair.upper_n();
    std::vector<double> coeffs = pair.lower_coeffs;
    coeffs.push_back(eps_An);

    auto roots = roots_of(coeffs);
    std::vector<bool> used(roots.size(), false);
    std::vector<int> match;
    for (double lr : low.roots) {
        int best = -1;
        double bestd = std::numeric_limits<double>::infinity();
        for (size_t j = 0; j < roots.size(); ++j) {
            if (used[j]) continue;
            const double d = std::abs(roots[j] - lr);
            if (d < bestd) {
                bestd = d;
                best = int(j);
            }
        }
        used[size_t(best)] = true;
        match.push_back(best);
    }
    int run_idx = -1;
    for (size_t j = 0; j < roots.size(); ++j)
        if (!used[j]) run_idx = int(j);
    const double runaway = roots[size_t(run_idx)];
    const Interval dom = low.model.domain;
    if (runaway > dom.lo && runaway < dom.hi)
        throw Error("runaway root fell inside the working interval");

    StructurePoly F;
    F.leading = eps_An;
    std::vector<SimpleRoot> by_upper(static_cast<size_t>(n));
    for (size_t i = 0; i < low.roots.size(); ++i)
        by_upper[size_t(match[i])] = {Rational(roots[size_t(match[i])]),
                                      low.eps[i], low.xi[i]};
    by_upper[size_t(run_idx)] = {Rational(runaway), runaway <= dom.lo ? +1 : -1, eps_xi};
    for (auto& r : by_upper) F.simple.push_back(r);

    UpperSystem up;
    up.runaway_root = runaway;
    // the matched index within the upper system's root order
    up.match = match;
    up.sys = build_system(make_model(Parity::Even, F, 0.0, dom));
    return up;
}

SigmaLimitSample sigma_limit_sample(const CascadePair& pair, const UpperSystem& up, int i, int l) {
    const double An = up.sys.leading();
    const double lhs = An * up.sys.sym.sig_i(up.match[size_t(i)], l);
    const double rhs = -pair.lower.model.F.leading * pair.lower.sym.sig_i(i, l - 1);
    return {lhs, rhs, std::abs(lhs - rhs)};
}

bool CascadeReport::ratios_ok(double lo, double hi) const {
    for (size_t i = 0; i + 1 < rows.size(); ++i) {
        const double er = rows[i].eps / rows[i + 1].eps;
        const double r1 = rows[i].q1_resid / rows[i + 1].q1_resid;
        const double r2 = rows[i].q2_resid / rows[i + 1].q2_resid;
        if (r1 < lo * er || r1 > hi * er) return false;
        if (r2 < lo * er || r2 > hi * er) return false;
    }
    return !rows.empty();
}

CascadeReport cascade_check(const CascadePair& pair, const PhasePoint& z,
                            const std::vector<double>& eps_seq) {
    CascadeReport rep;
    const double py2 = z.py * z.py;
    const double q1_low = pair.lower.eval_Q1(z);
    const double q2_low = pair.lower.eval_Q2(z);
    for (double eps : eps_seq) {
        auto up = upper_at(pair, eps, eps);
        rep.rows.push_back({eps, std::abs(up.sys.eval_Q1(z) - py2 * q1_low),
                            std::abs(up.sys.eval_Q2(z) - py2 * q2_low)});
    }
    if (rep.rows.size() >= 2) {
        const auto& a = rep.rows.front();
        const auto& b = rep.rows.back();
        const double span = std::log(a.eps / b.eps);
        rep.order_q1 = std::log(a.q1_resid / b.q1_resid) / span;
        rep.order_q2 = std::log(a.q2_resid / b.q2_resid) / span;
    }
    return rep;
}

namespace {

// A_n sigma^{i(n)}_l with A_n = 0 substituted: (-1)^l sum_{s=1}^{l}
// a_i^{l-s} A_{n-s}, all data taken from the lower polynomial.
Rational an_sigma_limit(const std::vector<Rational>& lower_coeffs, const Rational& root, int l,
                        int n) {
    Rational acc(0);
    for (int s = 1; s <= l; ++s) {
        Rational pow(1);
        for (int t = 0; t < l - s; ++t) pow *= root;
        acc += pow * lower_coeffs[size_t(n - s)];
    }
    return (l % 2 == 0) ? acc : -acc;
}

}  // namespace

ExactCascadeCheck cascade_exact_check(const std::vector<Rational>& lower_roots,
                                      const Rational& lower_leading) {
    const int nl = int(lower_roots.size());  // lower degree
    const int n = nl + 1;                    // upper degree
    ExactCascadeCheck out;
    out.upper_n = n;

    RootSet<Rational> rs{lower_roots};
    auto low = build_sym_table(rs, nl >= 2);
    // ascending coefficients of the lower F including its leading
    auto monic = poly::from_roots(lower_roots);
    std::vector<Rational> lc(monic.size());
    for (size_t j = 0; j < monic.size(); ++j) lc[j] = lower_leading * monic[j];

    auto sgn = [](int k) { return k % 2 == 0 ? Rational(1) : Rational(-1); };
    auto an_sig_i = [&](int i, int l) {
        return an_sigma_limit(lc, lower_roots[size_t(i)], l, n);
    };
    auto an_sig_ij = [&](int i, int j, int l) {
        // id3sfr carried through the limit
        return -(an_sig_i(i, l + 1) - an_sig_i(j, l + 1)) /
               (lower_roots[size_t(i)] - lower_roots[size_t(j)]);
    };
    auto tally = [&](const Rational& a, const Rational& b) {
        ++out.entries_checked;
        if (a != b) ++out.mismatches;
    };

    // btilde tables: LIM btilde^{(n)}_{l+1}[root i] vs btilde^{(n-1)}_l[root i]
    for (int l = 1; l <= nl; ++l) {
        for (int i = 0; i < nl; ++i) {
            const Rational upper = sgn(l + 1) * an_sig_i(i, l);
            const Rational lower = sgn(l) * lower_leading * low.sig_i(i, l - 1);
            tally(upper, lower);
        }
    }
    // first upper coefficient vanishes in the limit
    for (int i = 0; i < nl; ++i) tally(an_sig_i(i, 0), Rational(0));

    // ctilde tables: diagonal entries (xi_i^2/Delta_i) and pair entries
    // (xi_i xi_j / sqrt(Delta_i Delta_j)) as degree-1 polynomials in a
    for (int l = 1; l <= nl; ++l) {
        const Rational half(1, 2);
        for (int i = 0; i < nl; ++i) {
            const Rational upper = -sgn(l + 1) * half * an_sig_i(i, l);
            const Rational lower = -sgn(l) * half * lower_leading * low.sig_i(i, l - 1);
            tally(upper, lower);
        }
        if (nl >= 2) {
            for (int i = 0; i < nl; ++i)
                for (int j = 0; j < nl; ++j) {
                    if (i == j) continue;
                    const Rational u0 = -sgn(l + 1) * half * an_sig_ij(i, j, l);
                    const Rational u1 = -sgn(l + 1) * half * an_sig_ij(i, j, l - 1);
                    const Rational l0 =
                        -sgn(l) * half * lower_leading * low.sig_ij(i, j, l - 1);
                    const Rational l1 =
                        -sgn(l) * half * lower_leading * low.sig_ij(i, j, l - 2);
                    tally(u0, l0);  // constant part
                    tally(u1, l1);  // coefficient of a
                }
        }
    }
    return out;
}

}  // namespace sirev
