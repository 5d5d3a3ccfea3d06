#include "sirev/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sirev/errors.hpp"

namespace sirev {

namespace {

constexpr double kBigDomain = 1e6;

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

void require(bool ok, const std::string& inequality) {
    if (!ok) throw ConstraintViolated(inequality);
}

double nz(double v, double fallback) { return std::isnan(v) ? fallback : v; }

// ---- grid checks shared by every example ------------------------------

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> g(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        g[size_t(i)] = lo * std::pow(hi / lo, double(i) / (n - 1));
    return g;
}

std::vector<double> lin_grid(double lo, double hi, int n) {
    std::vector<double> g(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) g[size_t(i)] = lo + (hi - lo) * double(i) / (n - 1);
    return g;
}

std::vector<double> chart_grid(const CatalogBuild& b, int n) {
    if (b.w_grid.lo > 0.0 && b.w_grid.hi / b.w_grid.lo > 1e4)
        return log_grid(b.w_grid.lo, b.w_grid.hi, n);
    return lin_grid(b.w_grid.lo, b.w_grid.hi, n);
}

double max_abs_R(const CatalogBuild& b, double w_lo, double w_hi, int n) {
    double m = 0.0;
    auto grid = (w_lo > 0.0 && w_hi / w_lo > 1e4) ? log_grid(w_lo, w_hi, n)
                                                  : lin_grid(w_lo, w_hi, n);
    for (double w : grid) {
        const double a = b.chart.a_of_w(w);
        if (!b.model.domain.contains(a)) continue;
        try {
            m = std::max(m, std::abs(scalar_curvature(b.model, a)));
        } catch (const OutOfDomain&) {
            // pole guard: skip the sample
        }
    }
    return m;
}

void check_monotone_change(CatalogBuild& b, int grid_n) {
    auto grid = chart_grid(b, grid_n);
    double min_slope = std::numeric_limits<double>::infinity();
    double max_slope = -min_slope;
    for (size_t i = 0; i + 1 < grid.size(); ++i) {
        const double dt = b.t_of_w(grid[i + 1]) - b.t_of_w(grid[i]);
        const double dw = grid[i + 1] - grid[i];
        min_slope = std::min(min_slope, dt / dw);
        max_slope = std::max(max_slope, dt / dw);
    }
    const bool pass = (min_slope > 0.0) || (max_slope < 0.0);
    b.checks.push_back({"coordinate change strictly monotone", pass,
                        (min_slope > 0.0) ? min_slope : max_slope,
                        "grid slope range [" + fmt(min_slope) + ", " + fmt(max_slope) + "]"});
}

// dt = dx/sqrt(a) ties the closed-form t(w) to the profile.
void check_t_consistency(CatalogBuild& b) {
    double worst = 0.0;
    auto grid = chart_grid(b, 64);
    for (double w : grid) {
        const double h = 1e-6 * std::max(1.0, std::abs(w));
        if (w - h <= b.w_grid.lo || w + h >= b.w_grid.hi) continue;
        const double fd = (b.t_of_w(w + h) - b.t_of_w(w - h)) / (2 * h);
        const double a = b.chart.a_of_w(w);
        const double cf = b.model.profile.xdot(a) * b.chart.da_dw(w) / std::sqrt(a);
        worst = std::max(worst, std::abs(fd - cf) / std::max(1.0, std::abs(cf)));
    }
    b.checks.push_back({"dt = dx / sqrt(a)", worst < 1e-6, worst, "max relative deviation"});
}

void check_conformal_factor(CatalogBuild& b, int grid_n) {
    auto grid = chart_grid(b, grid_n);
    double min_abs = std::numeric_limits<double>::infinity();
    bool sign_ok = true;
    const double first = b.factor_of_w(grid.front());
    for (double w : grid) {
        const double f = b.factor_of_w(w);
        min_abs = std::min(min_abs, std::abs(f));
        if (f * first <= 0.0) sign_ok = false;
    }
    b.checks.push_back({"conformal factor bounded away from 0", sign_ok && min_abs > 1e-10,
                        min_abs, "min |factor| over " + std::to_string(grid_n) + " points"});
}

// Nested windows pushing toward the chart limits; bounded curvature means
// the running max settles instead of doubling level over level.
void check_curvature_bounded(CatalogBuild& b) {
    const int levels = 4;
    double worst_growth = 0.0;
    double m_prev = max_abs_R(b, b.w_grid.lo, b.w_grid.hi, 2000);
    for (int L = 1; L <= levels; ++L) {
        const double f = std::pow(2.0, L);
        const double lo = b.w_limit.lo + (b.w_grid.lo - b.w_limit.lo) / f;
        const double hi = std::isfinite(b.w_limit.hi)
                              ? b.w_limit.hi - (b.w_limit.hi - b.w_grid.hi) / f
                              : b.w_grid.hi * f;
        const double m = max_abs_R(b, lo, hi, 2000);
        worst_growth = std::max(worst_growth, m / std::max(m_prev, 1e-30));
        m_prev = std::max(m_prev, m);
    }
    b.checks.push_back({"curvature bounded toward the ends", worst_growth < 1.5, worst_growth,
                        "max per-level growth of max|R|"});
}

void check_curvature_spread(CatalogBuild& b) {
    auto grid = chart_grid(b, 257);
    double rmin = std::numeric_limits<double>::infinity(), rmax = -rmin;
    for (double w : grid) {
        const double a = b.chart.a_of_w(w);
        if (!b.model.domain.contains(a)) continue;
        const double R = scalar_curvature(b.model, a);
        rmin = std::min(rmin, R);
        rmax = std::max(rmax, R);
    }
    const double spread = rmax - rmin;
    b.checks.push_back(
        {"curvature nonconstant (spread > 1e-6)", spread > 1e-6, spread, "max R - min R"});
}

// Integral coefficients stay finite toward the conformal boundary w -> 0
// (the t = 0 edge of the half-plane model).
void check_coefficients_bounded(CatalogBuild& b) {
    if (!b.system || b.manifold != "H2") return;
    double worst = 0.0;
    bool finite = true;
    for (double w = b.w_grid.lo; w > 1e-7; w *= 0.1) {
        const double a = b.chart.a_of_w(w);
        if (!b.model.domain.contains(a)) continue;
        for (int k = b.system->kmin(); k <= b.system->n(); ++k) {
            const double bt = b.system->btilde(k, a);
            const double ct = b.system->ctilde(k, a);
            if (!std::isfinite(bt) || !std::isfinite(ct)) finite = false;
            worst = std::max({worst, std::abs(bt), std::abs(ct)});
        }
    }
    b.checks.push_back({"integral coefficients bounded at the boundary",
                        finite && worst < 1e9, worst, "max |btilde|,|ctilde| toward w -> 0"});
}

void run_common_checks(CatalogBuild& b, int grid_n) {
    check_monotone_change(b, grid_n);
    check_t_consistency(b);
    check_conformal_factor(b, grid_n);
    check_curvature_bounded(b);
    check_curvature_spread(b);
    check_coefficients_bounded(b);
}

// ---- odd H2 family (cubic cases and their extensions) -----------------

struct OddH2Setup {
    int eps = +1;
    double nu = 1.0;
    std::vector<double> roots;  // a_1 first
    std::vector<double> m;      // mu-coefficients: mu(u) = nu + sum m_i/(eps(u^2-a_i))^{3/2}
};

CatalogBuild build_odd_h2(CatalogId id, const OddH2Setup& s, int grid_n) {
    const double a1 = s.roots.front();
    StructurePoly F;
    F.leading = 1.0;
    for (size_t i = 0; i < s.roots.size(); ++i)
        F.simple.push_back({Rational(s.roots[i]), s.eps, -double(s.eps) * s.m[i]});

    Interval dom = (s.eps == +1) ? Interval{0.0, kBigDomain} : Interval{0.0, a1};
    CatalogBuild b;
    b.id = id;
    b.manifold = "H2";
    b.model = make_model(Parity::Odd, F, s.nu, dom);
    b.system = build_system(b.model);

    b.chart = Chart{"u = sqrt(a)", [](double u) { return u * u; },
                    [](double u) { return 2.0 * u; },
                    {0.0, (s.eps == +1) ? std::sqrt(kBigDomain) : std::sqrt(a1)}};
    const auto roots = s.roots;
    const auto mcoef = s.m;
    const int eps = s.eps;
    const double nu = s.nu;
    auto Omega = [roots, mcoef, eps, nu](double u) {
        double t = nu;
        for (size_t i = 0; i < roots.size(); ++i)
            t += mcoef[i] / (std::abs(roots[i]) * std::sqrt(eps * (u * u - roots[i])));
        return t;
    };
    b.t_of_w = [Omega](double u) { return u * Omega(u); };
    b.factor_of_w = [Omega](double u) { const double o = Omega(u); return o * o; };
    b.factor_negative = Omega(1e-6) < 0.0;

    if (s.eps == +1) {
        b.w_grid = {1e-4, 1e3};
        b.w_limit = {0.0, std::sqrt(kBigDomain)};
    } else {
        const double umax = std::sqrt(a1 - std::max(1e-6 * a1, 2e-8));
        b.w_grid = {1e-4 * std::sqrt(a1), umax};
        b.w_limit = {0.0, std::sqrt(a1)};
    }
    run_common_checks(b, grid_n);
    return b;
}

// ---- even H2 family (Koenigs and its extension) ------------------------

CatalogBuild build_even_h2(CatalogId id, double c, const std::vector<double>& roots,
                           const std::vector<double>& xi, int grid_n) {
    StructurePoly F;
    F.leading = 1.0;
    F.simple.push_back({Rational(1), -1, c});
    for (size_t i = 0; i < roots.size(); ++i) {
        const int eps = roots[i] < 0.0 ? +1 : -1;
        const double amp = -double(eps) * std::pow(-double(eps) * roots[i], 1.5) * xi[i];
        F.simple.push_back({Rational(roots[i]), eps, amp});
    }

    CatalogBuild b;
    b.id = id;
    b.manifold = "H2";
    b.model = make_model(Parity::Even, F, 0.0, {0.0, 1.0});
    b.system = build_system(b.model);
    b.chart = Chart{"u = sqrt(a/(1-a))",
                    [](double u) { return u * u / (1.0 + u * u); },
                    [](double u) { const double q = 1.0 + u * u; return 2.0 * u / (q * q); },
                    {0.0, 1e9}};
    std::vector<double> rho(roots.size());
    for (size_t i = 0; i < roots.size(); ++i) rho[i] = 1.0 - 1.0 / roots[i];
    auto Omega = [c, rho, xi](double u) {
        double t = c;
        for (size_t i = 0; i < rho.size(); ++i) t += xi[i] / std::sqrt(1.0 + rho[i] * u * u);
        return t;
    };
    b.t_of_w = [Omega](double u) { return u * Omega(u); };
    b.factor_of_w = [Omega](double u) {
        const double o = Omega(u);
        return (1.0 + u * u) * o * o;
    };
    b.w_grid = {1e-4, 1e3};
    b.w_limit = {0.0, 1e4};
    run_common_checks(b, grid_n);
    return b;
}

// ---- R2 family ----------------------------------------------------------

CatalogBuild build_r2(CatalogId id, Parity parity, double a1, double a2, double xi1, double xi2,
                      const std::vector<double>& roots, const std::vector<double>& xi, double nu,
                      int grid_n) {
    const double span = a2 - a1;
    StructurePoly F;
    F.leading = 1.0;
    F.simple.push_back({Rational(a1), +1, -a1 * std::sqrt(span) * xi1});
    F.simple.push_back({Rational(a2), -1, a2 * std::sqrt(span) * xi2});
    std::vector<int> epsv;
    for (size_t i = 0; i < roots.size(); ++i) {
        const int eps = roots[i] < a1 ? +1 : -1;
        epsv.push_back(eps);
        F.simple.push_back({Rational(roots[i]), eps, -double(eps) * roots[i] * std::sqrt(span) * xi[i]});
    }

    CatalogBuild b;
    b.id = id;
    b.manifold = "R2";
    b.model = make_model(parity, F, parity == Parity::Odd ? nu : 0.0, {a1, a2});
    b.system = build_system(b.model);
    b.chart = Chart{"theta: a = a1 + (a2-a1) sin^2(theta)",
                    [a1, span](double th) { const double s = std::sin(th); return a1 + span * s * s; },
                    [span](double th) { return span * std::sin(2.0 * th); },
                    {0.0, M_PI / 2.0}};
    auto t_closed = [=](double th) {
        const double s = std::sin(th);
        const double a = a1 + span * s * s;
        double sum = (parity == Parity::Odd ? nu : 0.0) - xi1 / s + xi2 / std::sqrt(1.0 - s * s);
        for (size_t i = 0; i < roots.size(); ++i) {
            const double rho = (a1 - roots[i]) / span;
            sum -= epsv[i] * xi[i] / std::sqrt(epsv[i] * (rho + s * s));
        }
        return std::sqrt(a) * sum;
    };
    b.t_of_w = t_closed;
    b.factor_of_w = [=](double th) {
        const double s = std::sin(th);
        return 1.0 / (a1 + span * s * s);
    };
    b.w_grid = {1e-3, M_PI / 2.0 - 1e-3};
    b.w_limit = {0.0, M_PI / 2.0};
    run_common_checks(b, grid_n);
    return b;
}

// ---- the no-go family ---------------------------------------------------

CatalogBuild build_nogo(int r, int grid_n) {
    StructurePoly F;
    F.leading = 1.0;
    ComplexBlock blk;
    blk.scale = 1.0;
    blk.r = r;
    blk.mu_plus.assign(size_t(r), 0.0);
    blk.mu_minus.assign(size_t(r), 0.0);
    blk.mu_plus.back() = 1.0;
    F.pairs.push_back(blk);

    CatalogBuild b;
    b.id = CatalogId::NOGO;
    b.manifold = "NONE";
    b.model = make_model(Parity::Even, F, 0.0, {0.0, kBigDomain});
    b.chart = Chart{"theta = atan(a)", [](double th) { return std::tan(th); },
                    [](double th) { const double c = std::cos(th); return 1.0 / (c * c); },
                    {0.0, M_PI / 2.0}};
    b.t_of_w = [](double th) { return th; };
    b.factor_of_w = [](double) { return 1.0; };
    b.w_grid = {1e-2, M_PI / 2.0 - 0.1};
    b.w_limit = {0.0, M_PI / 2.0};

    // curvature blow-up: max |R| at least doubles on every refinement
    const int levels = 4;
    double prev = max_abs_R(b, b.w_grid.lo, M_PI / 2.0 - 0.1, 2000);
    double min_ratio = std::numeric_limits<double>::infinity();
    for (int L = 1; L <= levels; ++L) {
        const double cur = max_abs_R(b, b.w_grid.lo, M_PI / 2.0 - 0.1 / std::pow(2.0, L), 2000);
        min_ratio = std::min(min_ratio, cur / prev);
        prev = cur;
    }
    b.checks.push_back({"curvature blow-up: max|R| doubles per refinement toward theta=pi/2",
                        min_ratio >= 2.0, min_ratio, "min ratio across 4 refinements"});
    check_curvature_spread(b);
    (void)grid_n;
    return b;
}

}  // namespace

std::string to_string(CatalogId id) {
    switch (id) {
        case CatalogId::KOENIGS3: return "KOENIGS3";
        case CatalogId::H2_EVEN: return "H2_EVEN";
        case CatalogId::R2_EVEN: return "R2_EVEN";
        case CatalogId::CUBIC_PP: return "CUBIC_PP";
        case CatalogId::CUBIC_PM: return "CUBIC_PM";
        case CatalogId::CUBIC_MP: return "CUBIC_MP";
        case CatalogId::CUBIC_MM: return "CUBIC_MM";
        case CatalogId::ODD_H2_PP: return "ODD_H2_PP";
        case CatalogId::ODD_H2_PM: return "ODD_H2_PM";
        case CatalogId::ODD_H2_MP: return "ODD_H2_MP";
        case CatalogId::ODD_H2_MM: return "ODD_H2_MM";
        case CatalogId::R2_ODD: return "R2_ODD";
        case CatalogId::NOGO: return "NOGO";
    }
    return "?";
}

std::optional<CatalogId> catalog_id_from_string(const std::string& name) {
    for (const auto& e : catalog_list())
        if (e.name == name) return e.id;
    return std::nullopt;
}

const std::vector<CatalogEntry>& catalog_list() {
    static const std::vector<CatalogEntry> entries = {
        {CatalogId::KOENIGS3, "KOENIGS3", "n=1 even: quadratic integrals, Koenigs type 3 on H2"},
        {CatalogId::H2_EVEN, "H2_EVEN", "even 2n: F=(a-1)*simple on (0,1), H2"},
        {CatalogId::R2_EVEN, "R2_EVEN", "even 2n: two bracketing roots, R2"},
        {CatalogId::CUBIC_PP, "CUBIC_PP", "odd n=1: mu=1-1/(u^2-a1)^{3/2}, a1<-1, H2"},
        {CatalogId::CUBIC_PM, "CUBIC_PM", "odd n=1: mu=1+1/(u^2-a1)^{3/2}, a1<0, H2"},
        {CatalogId::CUBIC_MP, "CUBIC_MP", "odd n=1: mu=1-1/(a1-u^2)^{3/2}, 0<a1<1, H2"},
        {CatalogId::CUBIC_MM, "CUBIC_MM", "odd n=1: mu=1+1/(a1-u^2)^{3/2}, a1>0, H2"},
        {CatalogId::ODD_H2_PP, "ODD_H2_PP", "odd 2n+1 extension of CUBIC_PP, sum constraint"},
        {CatalogId::ODD_H2_PM, "ODD_H2_PM", "odd 2n+1 extension of CUBIC_PM"},
        {CatalogId::ODD_H2_MP, "ODD_H2_MP", "odd 2n+1 extension of CUBIC_MP, sum constraint"},
        {CatalogId::ODD_H2_MM, "ODD_H2_MM", "odd 2n+1 extension of CUBIC_MM"},
        {CatalogId::R2_ODD, "R2_ODD", "odd 2n+1: two bracketing roots plus affine term, R2"},
        {CatalogId::NOGO, "NOGO", "F=(a^2+a0^2)^r: curvature blow-up, no manifold"},
    };
    return entries;
}

CatalogParams catalog_defaults(CatalogId id) {
    CatalogParams p;
    switch (id) {
        case CatalogId::KOENIGS3: p.c = 1.0; break;
        case CatalogId::H2_EVEN: p.c = 0.8; p.roots = {-2.0}; p.xi = {0.5}; break;
        case CatalogId::R2_EVEN:
            p.a1 = 1.0; p.a2 = 4.0; p.xi1 = 0.9; p.xi2 = 0.8;
            p.roots = {0.5}; p.xi = {0.3};
            break;
        case CatalogId::CUBIC_PP: p.a1 = -2.0; p.nu = 1.0; break;
        case CatalogId::CUBIC_PM: p.a1 = -1.5; p.nu = 1.0; break;
        case CatalogId::CUBIC_MP: p.a1 = 0.5; p.nu = 1.0; break;
        case CatalogId::CUBIC_MM: p.a1 = 2.0; p.nu = 1.0; break;
        case CatalogId::ODD_H2_PP: p.a1 = -2.0; p.roots = {-4.0}; p.xi = {0.8}; p.nu = 1.0; break;
        case CatalogId::ODD_H2_PM: p.a1 = -1.0; p.roots = {-3.0}; p.xi = {0.7}; p.nu = 1.0; break;
        case CatalogId::ODD_H2_MP: p.a1 = 0.5; p.roots = {2.0}; p.xi = {0.5}; p.nu = 1.0; break;
        case CatalogId::ODD_H2_MM: p.a1 = 0.5; p.roots = {2.0}; p.xi = {0.6}; p.nu = 1.0; break;
        case CatalogId::R2_ODD:
            p.a1 = 1.0; p.a2 = 4.0; p.xi1 = 0.9; p.xi2 = 0.8; p.nu = 1.0;
            break;
        case CatalogId::NOGO: p.n = 1; break;
    }
    return p;
}

CatalogBuild build_catalog(CatalogId id, const CatalogParams& user, int grid_n) {
    CatalogParams d = catalog_defaults(id);
    CatalogParams p = user;
    p.a1 = nz(p.a1, d.a1);
    p.a2 = nz(p.a2, d.a2);
    p.c = nz(p.c, d.c);
    p.xi1 = nz(p.xi1, d.xi1);
    p.xi2 = nz(p.xi2, d.xi2);
    p.nu = nz(p.nu, d.nu);
    if (p.roots.empty()) p.roots = d.roots;
    if (p.xi.empty()) p.xi = d.xi;
    if (p.n == 0) p.n = d.n;
    if (p.roots.size() != p.xi.size()) throw ConstraintViolated("roots and xi lengths differ");

    auto sum_constraint = [&]() {
        double s = 1.0 / std::pow(std::abs(p.a1), 1.5);
        for (size_t i = 0; i < p.roots.size(); ++i)
            s += p.xi[i] / std::pow(std::abs(p.roots[i]), 1.5);
        return s;
    };
    auto xi_positive = [&]() {
        for (double v : p.xi)
            if (!(v > 0.0)) return false;
        return true;
    };

    switch (id) {
        case CatalogId::KOENIGS3:
            return build_even_h2(id, 1.0, {}, {}, grid_n);
        case CatalogId::H2_EVEN: {
            require(p.c > 0.0, "c > 0");
            require(xi_positive(), "xi_i > 0");
            for (double r : p.roots) require(r < 0.0 || r > 1.0, "a_i < 0 or a_i > 1");
            return build_even_h2(id, p.c, p.roots, p.xi, grid_n);
        }
        case CatalogId::R2_EVEN:
        case CatalogId::R2_ODD: {
            require(0.0 < p.a1 && p.a1 < p.a2, "0 < a1 < a2");
            require(p.xi1 > 0.0 && p.xi2 > 0.0, "xi1 > 0, xi2 > 0");
            require(xi_positive(), "xi_i > 0");
            for (double r : p.roots) require(r < p.a1 || r > p.a2, "a_i < a1 or a_i > a2");
            const Parity par = (id == CatalogId::R2_EVEN) ? Parity::Even : Parity::Odd;
            if (par == Parity::Odd) require(p.nu > 0.0, "nu > 0");
            return build_r2(id, par, p.a1, p.a2, p.xi1, p.xi2, p.roots, p.xi,
                            par == Parity::Odd ? p.nu : 0.0, grid_n);
        }
        case CatalogId::CUBIC_PP: {
            require(p.a1 < -1.0, "a1 in (-inf, -1)");
            return build_odd_h2(id, {+1, p.nu, {p.a1}, {-1.0}}, grid_n);
        }
        case CatalogId::CUBIC_PM: {
            require(p.a1 < 0.0, "a1 in (-inf, 0)");
            return build_odd_h2(id, {+1, p.nu, {p.a1}, {+1.0}}, grid_n);
        }
        case CatalogId::CUBIC_MP: {
            require(0.0 < p.a1 && p.a1 < 1.0, "a1 in (0, 1)");
            return build_odd_h2(id, {-1, p.nu, {p.a1}, {-1.0}}, grid_n);
        }
        case CatalogId::CUBIC_MM: {
            require(p.a1 > 0.0, "a1 in (0, +inf)");
            return build_odd_h2(id, {-1, p.nu, {p.a1}, {+1.0}}, grid_n);
        }
        case CatalogId::ODD_H2_PP: {
            require(p.a1 < -1.0, "a1 < -1");
            for (double r : p.roots) require(r < p.a1, "a_i < a1");
            require(xi_positive(), "xi_i > 0");
            require(sum_constraint() < 1.0, "1/|a1|^{3/2} + sum xi_i/|a_i|^{3/2} < 1");
            OddH2Setup s{+1, p.nu, {p.a1}, {-1.0}};
            for (size_t i = 0; i < p.roots.size(); ++i) {
                s.roots.push_back(p.roots[i]);
                s.m.push_back(-p.xi[i]);
            }
            return build_odd_h2(id, s, grid_n);
        }
        case CatalogId::ODD_H2_PM: {
            require(p.a1 < 0.0, "a1 < 0");
            for (double r : p.roots) require(r < p.a1, "a_i < a1");
            require(xi_positive(), "xi_i > 0");
            OddH2Setup s{+1, p.nu, {p.a1}, {+1.0}};
            for (size_t i = 0; i < p.roots.size(); ++i) {
                s.roots.push_back(p.roots[i]);
                s.m.push_back(+p.xi[i]);
            }
            return build_odd_h2(id, s, grid_n);
        }
        case CatalogId::ODD_H2_MP: {
            require(0.0 < p.a1 && p.a1 < 1.0, "a1 in (0, 1)");
            for (double r : p.roots) require(r > 1.0, "a_i > 1");
            require(xi_positive(), "xi_i > 0");
            require(sum_constraint() > 1.0, "1/a1^{3/2} + sum xi_i/a_i^{3/2} > 1");
            OddH2Setup s{-1, p.nu, {p.a1}, {-1.0}};
            for (size_t i = 0; i < p.roots.size(); ++i) {
                s.roots.push_back(p.roots[i]);
                s.m.push_back(-p.xi[i]);
            }
            return build_odd_h2(id, s, grid_n);
        }
        case CatalogId::ODD_H2_MM: {
            require(0.0 < p.a1 && p.a1 < 1.0, "a1 in (0, 1)");
            for (double r : p.roots) require(r > 1.0, "a_i > 1");
            require(xi_positive(), "xi_i > 0");
            OddH2Setup s{-1, p.nu, {p.a1}, {+1.0}};
            for (size_t i = 0; i < p.roots.size(); ++i) {
                s.roots.push_back(p.roots[i]);
                s.m.push_back(+p.xi[i]);
            }
            return build_odd_h2(id, s, grid_n);
        }
        case CatalogId::NOGO:
            return build_nogo(std::max(1, p.n), grid_n);
    }
    throw Error("unknown catalog id");
}

double invert_t(const CatalogBuild& b, double t) {
    // t(w) is monotone on the window; bracket from near-zero to the top.
    double lo = std::min(1e-12, b.w_grid.lo);
    double hi = b.w_grid.hi;
    const bool increasing = b.t_of_w(hi) > b.t_of_w(lo);
    auto f = [&](double w) { return increasing ? b.t_of_w(w) - t : t - b.t_of_w(w); };
    if (f(lo) > 0.0 || f(hi) < 0.0) throw InversionFailure("t outside the attained range");
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) <= 0.0)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 1e-15 * std::max(1.0, hi)) break;
    }
    return 0.5 * (lo + hi);
}

double conformal_factor(const CatalogBuild& b, double t) {
    return b.factor_of_w(invert_t(b, t));
}

}  // namespace sirev
