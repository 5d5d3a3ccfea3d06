#pragma once

// Test-only oracles, independent of the library's computation paths.

#include <functional>
#include <vector>

namespace sirev::oracle {

// Elementary symmetric functions straight from the subset-sum definition:
// sigma_k = sum over k-subsets of the product of the chosen roots.
template <class S>
std::vector<S> subset_sigma(const std::vector<S>& roots) {
    const int n = int(roots.size());
    std::vector<S> sigma(size_t(n) + 1, S(0));
    sigma[0] = S(1);
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        S prod(1);
        int bits = 0;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) {
                prod *= roots[size_t(i)];
                ++bits;
            }
        sigma[size_t(bits)] += prod;
    }
    return sigma;
}

// Central finite difference of the given order with uniform spacing h.
inline double central_diff(const std::function<double(double)>& f, double a, int order,
                           double h) {
    switch (order) {
        case 0: return f(a);
        case 1: return (f(a + h) - f(a - h)) / (2 * h);
        case 2: return (f(a + h) - 2 * f(a) + f(a - h)) / (h * h);
        case 3: return (f(a + 2 * h) - 2 * f(a + h) + 2 * f(a - h) - f(a - 2 * h)) / (2 * h * h * h);
        case 4:
            return (f(a + 2 * h) - 4 * f(a + h) + 6 * f(a) - 4 * f(a - h) + f(a - 2 * h)) /
                   (h * h * h * h);
        default: return 0.0;
    }
}

// Richardson-extrapolated central difference: cancels the h^2 error term,
// leaving ~h^4 truncation, which keeps order-4 derivatives near 1e-8.
inline double richardson_diff(const std::function<double(double)>& f, double a, int order,
                              double h) {
    const double d1 = central_diff(f, a, order, h);
    const double d2 = central_diff(f, a, order, h / 2);
    return (4.0 * d2 - d1) / 3.0;
}

// k-th divided difference over k+1 nodes centered at a with spacing h;
// approaches f^{(k)}(a) / k! with O(h^2) bias (exact on low-degree
// polynomials, and the centered stencil avoids the one-sided O(h) term).
inline double divided_difference(const std::function<double(double)>& f, double a, int k,
                                 double h) {
    std::vector<double> v(size_t(k) + 1);
    for (int j = 0; j <= k; ++j) v[size_t(j)] = f(a + (j - 0.5 * k) * h);
    for (int level = 1; level <= k; ++level)
        for (int j = 0; j <= k - level; ++j)
            v[size_t(j)] = (v[size_t(j) + 1] - v[size_t(j)]) / (level * h);
    return v[0];
}

}  // namespace sirev::oracle
