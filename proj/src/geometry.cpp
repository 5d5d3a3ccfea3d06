#include "sirev/geometry.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <vector>

#include "sirev/errors.hpp"

namespace sirev {

double scalar_curvature(const ModelSpec& m, double a) {
    const double xd = m.profile.xdot(a);
    const double xdd = m.profile.xddot(a);
    return -(2.0 * a * xdd + xd) / (2.0 * xd * xd * xd);
}

EmbeddingR21::EmbeddingR21(const ModelSpec& m, double quad_tol)
    : m_(&m), a_ref_(m.domain.midpoint()), quad_tol_(quad_tol) {}

double EmbeddingR21::profile_integral(double a) const {
    auto f = [this](double s) {
        const double xd = m_->profile.xdot(s);
        return xd * xd / std::sqrt(s);
    };
    return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        f, a_ref_, a, 15, quad_tol_);
}

Embedded EmbeddingR21::operator()(double a, double y) const {
    m_->profile.check_domain(a);
    const double sq = std::sqrt(a);
    const double X = y / sq;
    const double ymz = -1.0 / sq;
    const double ypz = y * y / sq + 2.0 * profile_integral(a);
    return {X, 0.5 * (ypz + ymz), 0.5 * (ypz - ymz)};
}

double EmbeddingR21::pullback_residual(double a, double y) const {
    const double ha = 1e-6 * std::max(1.0, std::abs(a));
    const double hy = 1e-6 * std::max(1.0, std::abs(y));
    const Embedded pa1 = (*this)(a + ha, y), pa0 = (*this)(a - ha, y);
    const Embedded py1 = (*this)(a, y + hy), py0 = (*this)(a, y - hy);
    const double Xa = (pa1.X - pa0.X) / (2 * ha), Ya = (pa1.Y - pa0.Y) / (2 * ha),
                 Za = (pa1.Z - pa0.Z) / (2 * ha);
    const double Xy = (py1.X - py0.X) / (2 * hy), Yy = (py1.Y - py0.Y) / (2 * hy),
                 Zy = (py1.Z - py0.Z) / (2 * hy);
    const double E = Xa * Xa + Ya * Ya - Za * Za;   // g_aa
    const double Fc = Xa * Xy + Ya * Yy - Za * Zy;  // g_ay
    const double G = Xy * Xy + Yy * Yy - Zy * Zy;   // g_yy
    const double xd = m_->profile.xdot(a);
    const double g_aa = xd * xd / (a * a);
    const double g_yy = 1.0 / a;
    const double r1 = std::abs(E - g_aa) / std::abs(g_aa);
    const double r2 = std::abs(G - g_yy) / std::abs(g_yy);
    const double r3 = std::abs(Fc) / std::max(g_aa, g_yy);
    return std::max({r1, r2, r3});
}

EndpointClass classify_exponent(const Endpoint& ep, double alpha, double band) {
    switch (ep.type) {
        case Endpoint::FiniteRoot:
            if (ep.a1 != 0.0 && alpha > 1.0 + band) return EndpointClass::CurvatureSingular;
            return EndpointClass::Inconclusive;
        case Endpoint::Zero:
            if (alpha > band) return EndpointClass::CurvatureSingular;
            return EndpointClass::Inconclusive;
        case Endpoint::Infinity:
            if (std::abs(alpha + 0.5) <= band) return EndpointClass::Inconclusive;
            if (alpha < -band) return EndpointClass::CurvatureSingular;
            return EndpointClass::Inconclusive;
    }
    return EndpointClass::Inconclusive;
}

EndpointFit classify_endpoint(const ModelSpec& m, const Endpoint& ep) {
    const int N = 20;
    std::vector<double> lx, ly;
    lx.reserve(N);
    ly.reserve(N);

    if (ep.type == Endpoint::Infinity) {
        // one decade below the upper end of the working interval
        const double top = 0.5 * m.domain.hi;
        for (int i = 0; i < N; ++i) {
            const double a = top * std::pow(10.0, -1.0 + double(i) / (N - 1));
            lx.push_back(std::log(a));
            ly.push_back(std::log(std::abs(m.profile.xdot(a))));
        }
    } else {
        const double e = (ep.type == Endpoint::Zero) ? 0.0 : ep.a1;
        const bool from_right = e <= m.domain.lo + 1e-300 || e < m.domain.midpoint();
        const double avail = from_right ? (m.domain.hi - e) : (e - m.domain.lo);
        double h_max = 0.1 * avail;
        double h_min = h_max / 10.0;
        h_min = std::max(h_min, 4.0 * m.profile.pole_guard);
        if (h_min >= h_max) throw FitFailure("no room to sample near the endpoint");
        for (int i = 0; i < N; ++i) {
            const double h =
                h_min * std::pow(h_max / h_min, double(i) / (N - 1));
            const double a = from_right ? e + h : e - h;
            lx.push_back(std::log(h));
            ly.push_back(std::log(std::abs(m.profile.xdot(a))));
        }
    }

    // least-squares slope and R^2
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (int i = 0; i < N; ++i) {
        sx += lx[size_t(i)];
        sy += ly[size_t(i)];
        sxx += lx[size_t(i)] * lx[size_t(i)];
        sxy += lx[size_t(i)] * ly[size_t(i)];
        syy += ly[size_t(i)] * ly[size_t(i)];
    }
    const double denom = N * sxx - sx * sx;
    const double slope = (N * sxy - sx * sy) / denom;
    const double intercept = (sy - slope * sx) / N;
    double ss_res = 0.0;
    const double mean_y = sy / N;
    double ss_tot = 0.0;
    for (int i = 0; i < N; ++i) {
        const double fit = slope * lx[size_t(i)] + intercept;
        ss_res += (ly[size_t(i)] - fit) * (ly[size_t(i)] - fit);
        ss_tot += (ly[size_t(i)] - mean_y) * (ly[size_t(i)] - mean_y);
    }
    // near-constant |xdot| is a perfect zero-slope fit, not a failure
    if (std::sqrt(ss_tot / N) < 1e-6 * std::max(1.0, std::abs(mean_y))) {
        EndpointFit flat{0.0, 1.0, classify_exponent(ep, 0.0)};
        return flat;
    }
    const double r2 = 1.0 - ss_res / ss_tot;
    if (r2 < 0.999) throw FitFailure("log-log exponent fit has R^2 < 0.999");

    EndpointFit out;
    out.alpha = slope;
    out.r2 = r2;
    out.cls = classify_exponent(ep, slope);
    return out;
}

double metric_ww(const ModelSpec& m, const Chart& chart, double w) {
    const double a = chart.a_of_w(w);
    const double xd = m.profile.xdot(a);
    const double j = chart.da_dw(w);
    return (xd * j / a) * (xd * j / a);
}

}  // namespace sirev
