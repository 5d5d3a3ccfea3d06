#include "sirev/structure.hpp"

#include "sirev/errors.hpp"
#include "sirev/polynomial.hpp"

namespace sirev {

int StructurePoly::degree() const {
    int n = int(simple.size());
    if (multiple) n += multiple->r;
    for (const auto& p : pairs) n += 2 * p.r;
    return n;
}

std::vector<double> StructurePoly::coefficients() const {
    std::vector<double> c{leading};
    for (const auto& s : simple) c = poly::mul(c, {-to_double(s.a), 1.0});
    if (multiple) {
        const double a1 = to_double(multiple->a);
        for (int k = 0; k < multiple->r; ++k) c = poly::mul(c, {-a1, 1.0});
    }
    for (const auto& p : pairs)
        for (int k = 0; k < p.r; ++k) c = poly::mul(c, {p.scale * p.scale, 0.0, 1.0});
    return c;
}

double StructurePoly::dcoef(double a, int m) const {
    auto c = coefficients();
    const int n = int(c.size()) - 1;
    if (m > n) return 0.0;
    // F^{(m)}(a)/m! = sum_{j>=m} C(j,m) c_j a^{j-m}, Horner in a
    double v = 0.0;
    for (int j = n; j >= m; --j) {
        double binom = 1.0;
        for (int t = 0; t < m; ++t) binom *= double(j - t) / double(m - t);
        v = v * a + binom * c[size_t(j)];
    }
    return v;
}

bool StructurePoly::has_amplitude() const {
    for (const auto& s : simple)
        if (s.xi != 0.0) return true;
    if (multiple)
        for (double m : multiple->mu)
            if (m != 0.0) return true;
    for (const auto& p : pairs) {
        for (double m : p.mu_plus)
            if (m != 0.0) return true;
        for (double m : p.mu_minus)
            if (m != 0.0) return true;
    }
    return false;
}

void StructurePoly::validate() const {
    if (leading == 0.0) throw Error("leading coefficient A_n must be nonzero");
    if (degree() < 1) throw Error("F must have degree >= 1");
    for (const auto& s : simple)
        if (s.eps != 1 && s.eps != -1) throw Error("eps must be +1 or -1");
    for (size_t i = 0; i < simple.size(); ++i)
        for (size_t j = i + 1; j < simple.size(); ++j)
            if (simple[i].a == simple[j].a) throw DuplicateRoot("repeated simple root");
    if (multiple) {
        if (multiple->r < 2) throw Error("multiple root needs multiplicity >= 2");
        if (int(multiple->mu.size()) != multiple->r)
            throw Error("multiple block needs r amplitudes");
        if (multiple->eps != 1 && multiple->eps != -1) throw Error("eps must be +1 or -1");
        for (const auto& s : simple)
            if (s.a == multiple->a) throw DuplicateRoot("simple root repeats the multiple root");
    }
    for (const auto& p : pairs) {
        if (p.scale <= 0.0) throw Error("complex pair scale must be positive");
        if (p.r < 1) throw Error("complex pair needs multiplicity >= 1");
        if (int(p.mu_plus.size()) != p.r || int(p.mu_minus.size()) != p.r)
            throw Error("complex block needs r amplitude pairs");
    }
}

StructurePoly make_simple_poly(const std::vector<Rational>& roots, const std::vector<int>& eps,
                               const std::vector<double>& xi, double leading) {
    if (roots.size() != eps.size() || roots.size() != xi.size())
        throw Error("roots, eps and xi must have equal length");
    StructurePoly F;
    F.leading = leading;
    for (size_t i = 0; i < roots.size(); ++i) F.simple.push_back({roots[i], eps[i], xi[i]});
    F.validate();
    return F;
}

}  // namespace sirev
